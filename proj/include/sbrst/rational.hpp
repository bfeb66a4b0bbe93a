#ifndef SBRST_RATIONAL_HPP
#define SBRST_RATIONAL_HPP

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

namespace sbrst {

using Rational = mpq_class;
using Integer = mpz_class;

/// Sparse vector keyed by basis id. Zero entries are never stored.
using SparseVector = std::map<int, Rational>;

inline void axpy(SparseVector& y, const Rational& alpha, const SparseVector& x) {
  if (alpha == 0) return;
  for (const auto& [k, v] : x) {
    auto [it, inserted] = y.try_emplace(k, alpha * v);
    if (!inserted) {
      it->second += alpha * v;
      if (it->second == 0) y.erase(it);
    }
  }
}

inline void add_entry(SparseVector& y, int key, const Rational& value) {
  if (value == 0) return;
  auto [it, inserted] = y.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) y.erase(it);
  }
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "3", "-1/2" and similar. Throws std::invalid_argument on garbage.
inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

/// (-1)^k as an int.
constexpr int sign_of(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace sbrst

#endif  // SBRST_RATIONAL_HPP
