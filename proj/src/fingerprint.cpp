#include "ngla/fingerprint.hpp"

#include <sstream>

#include "ngla/cohomology.hpp"

namespace ngla {

Fingerprint fingerprint(const LieAlgebra& g) {
  Fingerprint f;
  f.dim = g.dim();
  SeriesProfile p = lower_central_series(g);
  f.nilpotent = p.nilpotent;
  if (!p.nilpotent) return f;
  f.nilindex = p.nilindex;
  f.type_sequence = p.type_sequence;
  f.char_seq = characteristic_sequence(g).blocks;
  f.center_dim = center(g).dim();
  for (int q = 1; q < p.nilindex; ++q)
    f.centralizer_dims.push_back(centralizer(g, p.terms[static_cast<std::size_t>(q)]).dim());
  for (int q = 0; q < p.nilindex; ++q) {
    const Subspace& cq = p.terms[static_cast<std::size_t>(q)];
    Subspace der(g.dim());
    for (const auto& u : cq.basis())
      for (const auto& v : cq.basis()) {
        QVec w = g.bracket(u, v);
        if (!is_zero(w)) der.insert(std::move(w));
      }
    f.derived_dims.push_back(der.dim());
  }
  f.upper_central = upper_central_dims(g);
  if (p.terms.size() > 1 && p.terms[1].dim() > 0) {
    LieAlgebra der = induced_subalgebra(g, p.terms[1]);
    SeriesProfile dp = lower_central_series(der);
    f.derived_type = dp.type_sequence;
    f.derived_charseq = der.constants().empty() ? std::vector<int>(der.dim(), 1)
                                                : characteristic_sequence(der).blocks;
  }
  if (g.dim() <= 20) f.h2_dim = h2(g).h2_dim;
  CentralizerReport rep = centralizer_property(g);
  f.holds_p = rep.holds;
  f.variant = rep.variant;
  return f;
}

std::string Fingerprint::str() const {
  std::ostringstream os;
  auto list = [&os](const auto& v) {
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
  };
  os << "dim=" << dim;
  if (!nilpotent) {
    os << " non-nilpotent";
    return os.str();
  }
  os << " nilindex=" << nilindex << " type=";
  list(type_sequence);
  os << " charseq=";
  list(char_seq);
  os << " z=" << center_dim << " cent=";
  list(centralizer_dims);
  os << " der=";
  list(derived_dims);
  os << " upper=";
  list(upper_central);
  os << " dtype=";
  list(derived_type);
  os << " dcs=";
  list(derived_charseq);
  os << " h2=" << h2_dim << " P=" << (holds_p ? variant_name(variant) : "none");
  return os.str();
}

}  // namespace ngla
