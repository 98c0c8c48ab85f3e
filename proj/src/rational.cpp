#include "ngla/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace ngla {

Rat rat_parse(const std::string& s) {
  auto bad = [&] { throw std::invalid_argument("not a rational: '" + s + "'"); };
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (!is_int(num) || !is_int(den)) bad();
  Int n(num), d(den);
  if (d == 0) bad();
  return Rat(n) / Rat(d);  // arithmetic canonicalizes
}

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string vec_str(const QVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += rat_str(v[i]);
  }
  return out + ")";
}

bool is_zero(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

QVec& vec_add_scaled(QVec& dst, const QVec& src, const Rat& c) {
  for (std::size_t i = 0; i < dst.size(); ++i)
    if (src[i] != 0) dst[i] += c * src[i];
  return dst;
}

std::uint64_t Rng::next() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545f4914f6cdd1dULL;
}

long Rng::below(long lo, long hi) {
  return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rat Rng::small_rational(long bound) {
  long n = below(-bound, bound);
  long d = below(1, 3);
  return Rat(n) / Rat(d);
}

Rat Rng::nonzero_rational(long bound) {
  long n = below(1, bound) * (below(0, 1) ? 1 : -1);
  long d = below(1, 3);
  return Rat(n) / Rat(d);
}

}  // namespace ngla
