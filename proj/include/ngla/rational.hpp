#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace ngla {

/// Exact scalar field. All linear algebra in this project runs over Q;
/// every structure constant in the catalog is rational, so ranks over Q
/// agree with ranks over C.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

using QVec = std::vector<Rat>;

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input
/// or zero denominator. Result is canonical (lowest terms, denominator > 0).
Rat rat_parse(const std::string& s);

/// Lowest-terms form, "p" or "p/q" with q > 1.
std::string rat_str(const Rat& r);

std::string vec_str(const QVec& v);

bool is_zero(const QVec& v);
QVec& vec_add_scaled(QVec& dst, const QVec& src, const Rat& c);  // dst += c*src

/// Small deterministic PRNG (xorshift*) used for the seeded candidate
/// sampling in characteristic-sequence search and the random test corpora.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
  std::uint64_t next();
  /// integer in [lo, hi] inclusive
  long below(long lo, long hi);
  /// small rational with numerator in [-bound, bound] and denominator in {1, 2, 3}
  Rat small_rational(long bound);
  /// small nonzero rational, numerator in +-[1, bound]
  Rat nonzero_rational(long bound);

 private:
  std::uint64_t state_;
};

}  // namespace ngla
