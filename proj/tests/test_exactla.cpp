#include <doctest.h>

#include "ngla/matrix.hpp"
#include "ngla/rational.hpp"
#include "ngla/subspace.hpp"

using namespace ngla;

namespace {

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.small_rational(bound);
  return m;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(rat_parse("3/6") == Rat(1) / Rat(2));
  CHECK(rat_parse("-4/8") == Rat(-1) / Rat(2));
  CHECK(rat_parse("7") == Rat(7));
  CHECK(rat_str(rat_parse("10/4")) == "5/2");
  CHECK(rat_str(Rat(-3)) == "-3");
  CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("a/2"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse(""), std::invalid_argument);
}

TEST_CASE("rref identity and rank-1 forced cases") {
  Matrix id2 = Matrix::identity(2);
  CHECK(rref(id2) == id2);

  Matrix m(2, 2);
  m.at(0, 0) = 2;
  m.at(0, 1) = 4;
  m.at(1, 0) = 1;
  m.at(1, 1) = 2;
  Matrix r = rref(m);
  CHECK(r.at(0, 0) == 1);
  CHECK(r.at(0, 1) == 2);
  CHECK(r.at(1, 0) == 0);
  CHECK(r.at(1, 1) == 0);
}

TEST_CASE("rref rank agrees with the minor-search oracle on random matrices") {
  Rng rng(42);
  for (int trial = 0; trial < 8; ++trial) {
    Matrix m = random_matrix(rng, 5, 7, 2);
    CHECK(rank(m) == rank_by_minors(m));
  }
}

TEST_CASE("rref is idempotent") {
  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix m = random_matrix(rng, 4, 6, 3);
    Matrix r = rref(m);
    CHECK(rref(r) == r);
  }
}

TEST_CASE("kernel basics") {
  CHECK(kernel(Matrix(3, 3)).dim() == 3);
  CHECK(kernel(Matrix::identity(4)).dim() == 0);

  Matrix m(1, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  Subspace k = kernel(m);
  CHECK(k.dim() == 2);
  QVec v{Rat(1), Rat(-1), Rat(0)};
  CHECK(k.contains(v));
}

TEST_CASE("rank-nullity on random matrices") {
  Rng rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t rows = static_cast<std::size_t>(rng.below(1, 6));
    std::size_t cols = static_cast<std::size_t>(rng.below(1, 7));
    Matrix m = random_matrix(rng, rows, cols, 2);
    CHECK(rank(m) + kernel(m).dim() == cols);
  }
}

TEST_CASE("subspace lattice basics") {
  QVec e1{Rat(1), Rat(0), Rat(0)}, e2{Rat(0), Rat(1), Rat(0)}, e3{Rat(0), Rat(0), Rat(1)};
  Subspace a = Subspace::span(3, {e1});
  Subspace b = Subspace::span(3, {e2});
  CHECK(sum(a, b).dim() == 2);

  Subspace ab = Subspace::span(3, {e1, e2});
  Subspace bc = Subspace::span(3, {e2, e3});
  Subspace meet = intersect(ab, bc);
  CHECK(meet.dim() == 1);
  CHECK(meet.contains(e2));

  CHECK(quotient_dim(Subspace::span(3, {e1, e2, e3}), Subspace::span(3, {e3})) == 2);
  CHECK_THROWS_AS(quotient_dim(Subspace::span(3, {e1}), Subspace::span(3, {e2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(sum(Subspace(3), Subspace(4)), std::invalid_argument);
}

TEST_CASE("modular dimension law on random subspace pairs") {
  Rng rng(1234);
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t n = static_cast<std::size_t>(rng.below(2, 6));
    auto random_space = [&] {
      std::vector<QVec> gens;
      long count = rng.below(0, 3);
      for (long g = 0; g < count; ++g) {
        QVec v(n);
        for (auto& x : v) x = rng.small_rational(2);
        gens.push_back(v);
      }
      return Subspace::span(n, gens);
    };
    Subspace a = random_space(), b = random_space();
    CHECK(sum(a, b).dim() + intersect(a, b).dim() == a.dim() + b.dim());
  }
}

TEST_CASE("subspace equality is structural via rref canonicalization") {
  QVec v1{Rat(1), Rat(2), Rat(3)}, v2{Rat(0), Rat(1), Rat(1)};
  QVec w1{Rat(1), Rat(3), Rat(4)}, w2{Rat(2), Rat(5), Rat(7)};
  CHECK(Subspace::span(3, {v1, v2}) == Subspace::span(3, {w1, w2}));
}
