#include <doctest.h>

#include "ngla/roots.hpp"

using namespace ngla;
using namespace ngla::roots;

TEST_CASE("positive root counts match the classical tables") {
  CHECK(build('A', 2).positive_roots.size() == 3);
  CHECK(build('A', 8).positive_roots.size() == 36);
  CHECK(build('B', 2).positive_roots.size() == 4);
  CHECK(build('B', 5).positive_roots.size() == 25);
  CHECK(build('C', 3).positive_roots.size() == 9);
  CHECK(build('C', 8).positive_roots.size() == 64);
  CHECK(build('D', 4).positive_roots.size() == 12);
  CHECK(build('D', 8).positive_roots.size() == 56);
  CHECK(build('E', 6).positive_roots.size() == 36);
  CHECK(build('E', 7).positive_roots.size() == 63);
  CHECK(build('E', 8).positive_roots.size() == 120);
  CHECK(build('F', 4).positive_roots.size() == 24);
  CHECK(build('G', 2).positive_roots.size() == 6);
  CHECK_THROWS_AS(build('H', 3), std::invalid_argument);
  CHECK_THROWS_AS(build('D', 3), std::invalid_argument);
}

TEST_CASE("heights and maximal roots") {
  // A_2: positive roots a1, a2, a1+a2
  RootSystem a2 = build("A2");
  CHECK(a2.stratum(1).size() == 2);
  CHECK(a2.stratum(2).size() == 1);
  CHECK(height(a2.maximal_root()) == 2);

  // G_2: delta = 3a1 + 2a2, ht 5
  RootSystem g2 = build("G2");
  CHECK(g2.maximal_root() == Root{3, 2});
  CHECK(height(g2.maximal_root()) == 5);

  // the paper's case list: ht(delta) for E6, E7, E8, F4
  CHECK(height(build("E6").maximal_root()) == 11);
  CHECK(height(build("E7").maximal_root()) == 17);
  CHECK(height(build("E8").maximal_root()) == 29);
  CHECK(height(build("F4").maximal_root()) == 11);

  // strata partition the positive roots; Delta(1) is the simple roots
  for (const std::string name : {"B4", "D5", "F4"}) {
    RootSystem rs = build(name);
    std::size_t total = 0;
    for (int k = 1; k <= height(rs.maximal_root()); ++k) total += rs.stratum(k).size();
    CHECK(total == rs.positive_roots.size());
    CHECK(rs.stratum(1).size() == static_cast<std::size_t>(rs.rank));
    CHECK(rs.stratum(height(rs.maximal_root())).size() == 1);
  }
}

TEST_CASE("proposition 1 pair search") {
  // A_4 (l = 2q, q = 2): the paper's pair a1+a2, a3+a4 sums to delta
  RootSystem a4 = build("A4");
  auto pairs = proposition1_pairs(a4);
  bool found = false;
  for (const auto& [w1, w2] : pairs)
    if (add(w1, w2) == a4.maximal_root()) found = true;
  CHECK(found);

  // F_4: some pair sums to delta - a1 (the printed identity)
  RootSystem f4 = build("F4");
  Root want = f4.maximal_root();
  want[0] -= 1;
  bool f4_found = false;
  for (const auto& [w1, w2] : proposition1_pairs(f4))
    if (add(w1, w2) == want) f4_found = true;
  CHECK(f4_found);
  // the printed F_4 pair itself is valid
  CHECK(f4.is_root(add(Root{1, 2, 2, 0}, Root{0, 1, 2, 2})));

  // G_2: the frontier stratum is a single root; no pair
  CHECK(!proposition1_pair(build("G2")).has_value());

  // every returned pair lies in the frontier stratum and sums to a root
  for (const std::string name : {"A5", "B6", "C5", "D6", "E7"}) {
    RootSystem rs = build(name);
    auto p = proposition1_pair(rs);
    REQUIRE(p.has_value());
    int f = height(rs.maximal_root()) / 2;
    CHECK(height(p->first) == f);
    CHECK(height(p->second) == f);
    CHECK(rs.is_root(add(p->first, p->second)));
  }
}

TEST_CASE("borel nilradical centralizer check") {
  // simple types distinct from G_2 satisfy the property through condition 1;
  // the G_2 shadow satisfies it only through condition 2
  for (const std::string name :
       {"A2", "A3", "A6", "B2", "B4", "B5", "C4", "D5", "E6", "E7", "F4"}) {
    CAPTURE(name);
    auto rep = borel_nilradical_P_check(build(name));
    CHECK(rep.holds);
    CHECK(rep.variant == PVariant::P1);
    REQUIRE(rep.witness.has_value());
  }
  auto g2 = borel_nilradical_P_check(build("G2"));
  CHECK(g2.variant != PVariant::P1);

  // B_3 is a counterexample to the frontier-pair construction: Delta(2) is
  // {a1+a2, a2+a3} and neither pairwise sum is a root, so the shadow
  // satisfies the property only through condition 2 (exhaustive search)
  RootSystem b3 = build("B3");
  CHECK(!proposition1_pair(b3).has_value());
  auto rep3 = borel_nilradical_P_check(b3);
  CHECK(rep3.holds);
  CHECK(rep3.variant == PVariant::P2);

  // the check is deterministic and stratum-consistent with a brute-force
  // loop over root pairs
  RootSystem b4 = build("B4");
  auto rep = borel_nilradical_P_check(b4);
  int f = height(b4.maximal_root()) / 2;
  CHECK(rep.frontier == f);
  bool vv = false, ww = false;
  for (const auto& x : b4.positive_roots)
    for (const auto& y : b4.positive_roots) {
      if (x == y) continue;
      if (height(x) >= f && height(y) >= f && b4.is_root(add(x, y))) ww = true;
      if (height(x) > f && height(y) > f && b4.is_root(add(x, y))) vv = true;
    }
  CHECK(rep.holds == (ww && !vv));
}

TEST_CASE("shadow algebra of A_3 classifies as P1 through the bracket machinery") {
  RootSystem a3 = build("A3");
  LieAlgebra n = shadow_algebra(a3);
  CHECK(n.dim() == 6);
  // unit coefficients are only the combinatorial shadow: without the
  // Chevalley signs (out of scope) Jacobi genuinely fails here, but every
  // centralizer computation depends only on which brackets vanish
  CHECK(!jacobi_violations(n).empty());
  auto rep = centralizer_property(n);
  CHECK(rep.holds);
  CHECK(rep.variant == PVariant::P1);
  // the shadow's height grading matches its central series
  CHECK(lower_central_series(n).nilindex == height(a3.maximal_root()));
  CHECK(rep.frontier == height(a3.maximal_root()) / 2);
  // the combinatorial check agrees with the bracket-level one
  auto comb = borel_nilradical_P_check(a3);
  CHECK(comb.holds == rep.holds);
  CHECK(comb.variant == rep.variant);
}
