#include "ngla/json_io.hpp"

#include <fstream>
#include <json.hpp>
#include <stdexcept>

namespace ngla {

using nlohmann::json;

std::string algebra_to_json(const LieAlgebra& g) {
  json doc;
  doc["schema_version"] = "1";
  doc["dim"] = g.dim();
  json labels = json::array();
  for (std::size_t i = 0; i < g.dim(); ++i) labels.push_back(g.label_name(i));
  doc["labels"] = labels;
  json brackets = json::array();
  for (const auto& [ij, terms] : g.constants())
    for (const auto& [k, c] : terms) {
      json b;
      b["i"] = ij.first + 1;
      b["j"] = ij.second + 1;
      b["k"] = k + 1;
      b["coeff"] = rat_str(c);
      brackets.push_back(b);
    }
  doc["brackets"] = brackets;
  if (!g.declared_degrees().empty()) doc["grading"] = g.declared_degrees();
  if (g.provenance()) doc["provenance"] = *g.provenance();
  return doc.dump(2) + "\n";
}

LieAlgebra algebra_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("algebra document: invalid JSON: ") + e.what());
  }
  if (!doc.contains("dim") || !doc["dim"].is_number_unsigned())
    throw std::invalid_argument("algebra document: missing dim");
  std::size_t n = doc["dim"].get<std::size_t>();

  std::vector<int> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array() || doc["labels"].size() != n)
      throw std::invalid_argument("algebra document: labels must list one name per basis vector");
    for (const auto& l : doc["labels"]) {
      std::string s = l.get<std::string>();
      int v = 0;
      if (s.size() > 1 && (s[0] == 'X' || s[0] == 'x')) {
        try {
          v = std::stoi(s.substr(1));
        } catch (...) {
          v = 0;
        }
      }
      labels.push_back(v);
    }
    // fall back to positions when the names are not of the X<k> form
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] <= 0) {
        for (std::size_t t = 0; t < n; ++t) labels[t] = static_cast<int>(t) + 1;
        break;
      }
  } else {
    for (std::size_t t = 0; t < n; ++t) labels.push_back(static_cast<int>(t) + 1);
  }

  LieAlgebra g(n, labels);
  if (!doc.contains("brackets") || !doc["brackets"].is_array())
    throw std::invalid_argument("algebra document: missing brackets");
  for (const auto& b : doc["brackets"]) {
    std::size_t i = b.at("i").get<std::size_t>();
    std::size_t j = b.at("j").get<std::size_t>();
    std::size_t k = b.at("k").get<std::size_t>();
    if (i < 1 || j <= i || j > n || k < 1 || k > n)
      throw std::invalid_argument("algebra document: bracket needs 1 <= i < j <= dim");
    Rat c;
    if (b.at("coeff").is_string())
      c = rat_parse(b.at("coeff").get<std::string>());
    else if (b.at("coeff").is_number_integer())
      c = Rat(b.at("coeff").get<long>());
    else
      throw std::invalid_argument("algebra document: coeff must be an exact rational string");
    g.add_bracket_term(i - 1, j - 1, k - 1, c);
  }
  if (doc.contains("grading")) {
    std::vector<int> degs = doc["grading"].get<std::vector<int>>();
    if (degs.size() != n)
      throw std::invalid_argument("algebra document: grading must list one degree per vector");
    g.declare_degrees(std::move(degs));
  }
  if (doc.contains("provenance")) g.set_provenance(doc["provenance"].get<std::string>());
  return g;
}

void save_algebra(const LieAlgebra& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << algebra_to_json(g);
}

LieAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return algebra_from_json(text);
}

}  // namespace ngla
