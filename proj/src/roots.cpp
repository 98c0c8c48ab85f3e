#include "ngla/roots.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ngla::roots {

namespace {

using CartanMatrix = std::vector<std::vector<int>>;

CartanMatrix cartan(char type, int rank) {
  auto chain_matrix = [](int l) {
    CartanMatrix a(static_cast<std::size_t>(l), std::vector<int>(static_cast<std::size_t>(l), 0));
    for (int i = 0; i < l; ++i) a[i][i] = 2;
    for (int i = 0; i + 1 < l; ++i) a[i][i + 1] = a[i + 1][i] = -1;
    return a;
  };
  switch (type) {
    case 'A':
      if (rank < 1) throw std::invalid_argument("A_l needs l >= 1");
      return chain_matrix(rank);
    case 'B': {
      if (rank < 2) throw std::invalid_argument("B_l needs l >= 2");
      CartanMatrix a = chain_matrix(rank);
      a[rank - 2][rank - 1] = -2;  // alpha_l short
      return a;
    }
    case 'C': {
      if (rank < 3) throw std::invalid_argument("C_l needs l >= 3");
      CartanMatrix a = chain_matrix(rank);
      a[rank - 1][rank - 2] = -2;  // alpha_l long
      return a;
    }
    case 'D': {
      if (rank < 4) throw std::invalid_argument("D_l needs l >= 4");
      CartanMatrix a = chain_matrix(rank);
      a[rank - 2][rank - 1] = a[rank - 1][rank - 2] = 0;
      a[rank - 3][rank - 1] = a[rank - 1][rank - 3] = -1;
      return a;
    }
    case 'E': {
      if (rank < 6 || rank > 8) throw std::invalid_argument("E_l needs l in {6,7,8}");
      CartanMatrix a(static_cast<std::size_t>(rank),
                     std::vector<int>(static_cast<std::size_t>(rank), 0));
      for (int i = 0; i < rank; ++i) a[i][i] = 2;
      auto bond = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
      bond(1, 3);
      bond(3, 4);
      bond(4, 5);
      bond(5, 6);
      if (rank >= 7) bond(6, 7);
      if (rank >= 8) bond(7, 8);
      bond(2, 4);
      return a;
    }
    case 'F': {
      if (rank != 4) throw std::invalid_argument("F needs rank 4");
      CartanMatrix a = chain_matrix(4);
      a[1][2] = -2;
      return a;
    }
    case 'G': {
      if (rank != 2) throw std::invalid_argument("G needs rank 2");
      return {{2, -1}, {-3, 2}};
    }
    default:
      throw std::invalid_argument(std::string("unknown type letter '") + type + "'");
  }
}

bool lex_less(const Root& a, const Root& b) { return a < b; }

}  // namespace

int height(const Root& r) {
  int h = 0;
  for (int c : r) h += c;
  return h;
}

Root add(const Root& a, const Root& b) {
  Root s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

bool RootSystem::is_root(const Root& r) const {
  return std::binary_search(positive_roots.begin(), positive_roots.end(), r,
                            [](const Root& a, const Root& b) {
                              if (height(a) != height(b)) return height(a) < height(b);
                              return lex_less(a, b);
                            });
}

Root RootSystem::maximal_root() const { return positive_roots.back(); }

std::vector<Root> RootSystem::stratum(int k) const {
  std::vector<Root> out;
  for (const auto& r : positive_roots)
    if (height(r) == k) out.push_back(r);
  return out;
}

RootSystem build(char type_letter, int rank) {
  CartanMatrix a = cartan(type_letter, rank);
  const int l = rank;
  std::vector<Root> roots;
  std::vector<Root> level;
  for (int i = 0; i < l; ++i) {
    Root e(static_cast<std::size_t>(l), 0);
    e[static_cast<std::size_t>(i)] = 1;
    level.push_back(e);
  }
  auto contains = [&](const std::vector<Root>& set, const Root& r) {
    return std::find(set.begin(), set.end(), r) != set.end();
  };
  while (!level.empty()) {
    for (const auto& r : level) roots.push_back(r);
    std::vector<Root> next;
    for (const auto& alpha : level) {
      for (int j = 0; j < l; ++j) {
        // alpha + alpha_j is a root iff p - <alpha, alpha_j^v> > 0,
        // p = max k with alpha - k alpha_j a root
        int pairing = 0;
        for (int i = 0; i < l; ++i) pairing += alpha[static_cast<std::size_t>(i)] * a[i][j];
        int p = 0;
        Root down = alpha;
        while (true) {
          down[static_cast<std::size_t>(j)] -= 1;
          bool nonneg = true;
          for (int c : down)
            if (c < 0) nonneg = false;
          if (!nonneg || !contains(roots, down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          Root up = alpha;
          up[static_cast<std::size_t>(j)] += 1;
          if (!contains(next, up)) next.push_back(up);
        }
      }
    }
    level = std::move(next);
  }
  std::sort(roots.begin(), roots.end(), [](const Root& x, const Root& y) {
    if (height(x) != height(y)) return height(x) < height(y);
    return lex_less(x, y);
  });
  return RootSystem{type_letter, rank, std::move(roots)};
}

RootSystem build(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("bad type string '" + name + "'");
  char t = name[0];
  int rank = 0;
  try {
    rank = std::stoi(name.substr(1));
  } catch (...) {
    throw std::invalid_argument("bad rank in type string '" + name + "'");
  }
  return build(t, rank);
}

std::string root_str(const RootSystem& rs, const Root& r) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < rs.rank; ++i) {
    int c = r[static_cast<std::size_t>(i)];
    if (!c) continue;
    if (!first) os << "+";
    if (c != 1) os << c;
    os << "a" << i + 1;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::vector<std::pair<Root, Root>> proposition1_pairs(const RootSystem& rs) {
  int f = height(rs.maximal_root()) / 2;
  std::vector<Root> delta_f = rs.stratum(f);
  std::vector<std::pair<Root, Root>> out;
  for (std::size_t i = 0; i < delta_f.size(); ++i)
    for (std::size_t j = i; j < delta_f.size(); ++j)
      if (rs.is_root(add(delta_f[i], delta_f[j]))) out.push_back({delta_f[i], delta_f[j]});
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::pair<Root, Root>> proposition1_pair(const RootSystem& rs) {
  auto pairs = proposition1_pairs(rs);
  if (pairs.empty()) return std::nullopt;
  return pairs.front();
}

CentralizerReport borel_nilradical_P_check(const RootSystem& rs) {
  CentralizerReport rep;
  const int h = height(rs.maximal_root());  // nilindex of the shadow
  rep.frontier = h / 2;
  rep.frontier_variants_agree = (h % 2 == 1);
  if (rep.frontier < 1) return rep;

  auto pair_in = [&](int min_a, int min_b) {
    // exists a root sum with heights >= min_a, >= min_b
    for (const auto& x : rs.positive_roots) {
      if (height(x) < min_a) continue;
      for (const auto& y : rs.positive_roots) {
        if (height(y) < min_b) continue;
        if (x == y) continue;
        if (rs.is_root(add(x, y))) return true;
      }
    }
    return false;
  };
  bool ww = pair_in(rep.frontier, rep.frontier);
  bool vv = pair_in(rep.frontier + 1, rep.frontier + 1);
  rep.holds = ww && !vv;
  if (!rep.holds) return rep;

  // condition 1 reduces to the Proposition-1 pair: both summands of exact
  // frontier height (deeper sums always involve the next ideal)
  auto p1 = proposition1_pair(rs);
  rep.variant = p1 ? PVariant::P1 : PVariant::P2;
  if (p1) {
    auto idx = [&](const Root& r) {
      for (std::size_t i = 0; i < rs.positive_roots.size(); ++i)
        if (rs.positive_roots[i] == r) return i;
      return static_cast<std::size_t>(-1);
    };
    rep.witness = std::make_pair(idx(p1->first), idx(p1->second));
  }
  return rep;
}

LieAlgebra shadow_algebra(const RootSystem& rs) {
  const std::size_t n = rs.positive_roots.size();
  LieAlgebra g(n);
  std::map<Root, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[rs.positive_roots[i]] = i;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto it = index.find(add(rs.positive_roots[i], rs.positive_roots[j]));
      if (it != index.end()) g.add_bracket_term(i, j, it->second, Rat(1));
    }
  std::vector<int> degs;
  for (const auto& r : rs.positive_roots) degs.push_back(height(r));
  g.declare_degrees(std::move(degs));
  g.set_provenance(std::string("borel-shadow:") + rs.type_letter + std::to_string(rs.rank));
  return g;
}

}  // namespace ngla::roots
