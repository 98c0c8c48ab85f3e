// development scratch: solve extension cocycle systems for the catalog
// trouble spots and print normalized representatives
#include <iostream>
#include <sstream>

#include "ngla/extensions.hpp"
#include "ngla/models.hpp"

using namespace ngla;

static void show(const LieAlgebra& base, const std::vector<ExtensionClass>& classes) {
  for (const auto& c : classes) {
    std::cout << "  class: ";
    for (const auto& [ij, v] : c.cochain.coeffs)
      std::cout << " a(" << base.label(ij.first) << "," << base.label(ij.second) << ")="
                << rat_str(v);
    std::cout << "\n    " << c.fp.str() << "\n    " << c.certificate << "\n";
  }
  if (classes.empty()) std::cout << "  (no classes)\n";
}

static LieAlgebra extend_by(const LieAlgebra& g, const std::string& cochain_spec, int degree) {
  // cochain_spec: "i,j=coeff;i,j=coeff;..."  (labels)
  TwoCochain c(g.dim());
  std::istringstream is(cochain_spec);
  std::string tok;
  while (std::getline(is, tok, ';')) {
    auto eq = tok.find('=');
    auto comma = tok.find(',');
    int i = std::stoi(tok.substr(0, comma));
    int j = std::stoi(tok.substr(comma + 1, eq - comma - 1));
    c.set(g.pos_of_label(i), g.pos_of_label(j), rat_parse(tok.substr(eq + 1)));
  }
  LieAlgebra e = central_extend(g, c);
  std::vector<int> degs = g.declared_degrees();
  degs.push_back(degree);
  e.declare_degrees(degs);
  return e;
}

static void probe_alg(const LieAlgebra& g, int degree, int nilindex, bool p2,
                      const std::vector<int>& charseq) {
  Grading gr{g.declared_degrees()};
  ExtensionSpec spec;
  spec.target_degree = degree;
  if (nilindex) spec.target_nilindex = nilindex;
  spec.require_p2 = p2;
  if (!charseq.empty()) spec.required_charseq = charseq;
  try {
    show(g, enumerate_graded_extensions(g, gr, spec));
  } catch (const std::exception& e) {
    std::cout << "  error: " << e.what() << "\n";
  }
}

static void probe(const std::string& base_id, int degree, int nilindex, bool p2,
                  const std::vector<int>& charseq) {
  std::cout << "=== " << base_id << " degree " << degree << " nilindex " << nilindex
            << (p2 ? " P2" : "") << "\n";
  probe_alg(models::make(base_id), degree, nilindex, p2, charseq);
}

int main(int argc, char** argv) {
  if (argc > 2) {
    probe(argv[1], std::stoi(argv[2]), argc > 3 ? std::stoi(argv[3]) : 0, false, {});
    return 0;
  }
  std::cout << "--- g311 with P2 filter ---\n";
  probe("g31:m=4", 7, 0, true, {7, 3, 1});
  probe("g31:m=5", 9, 0, true, {9, 3, 1});

  std::cout << "--- m=4 g5 towers: which q=1 stage continues? ---\n";
  LieAlgebra g5m4 = models::make("g5:m=4");
  LieAlgebra qa = extend_by(g5m4, "2,10=1;3,9=-1", 7);
  std::cout << "[stage A = (2,10),(3,9) ext]\n";
  probe_alg(qa, 8, 0, false, {7, 4, 1});
  LieAlgebra qb = extend_by(g5m4, "2,7=1;2,10=1;3,6=-1;3,9=-1;4,5=1", 7);
  std::cout << "[stage B ext]\n";
  probe_alg(qb, 8, 0, false, {7, 4, 1});
  LieAlgebra qc = extend_by(g5m4, "1,10=1;2,7=3;3,6=-1", 7);
  std::cout << "[stage C = printed tower r=1]\n";
  probe_alg(qc, 8, 0, false, {7, 4, 1});
  std::cout << "[stage C unfiltered]\n";
  probe_alg(qc, 8, 0, false, {});
  return 0;
}
