#pragma once

// Exact number types, error types and small helpers shared by every module.

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hodge {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Lattice point or exponent vector; the dimension is the vector length.
using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

/** Malformed or inconsistent caller input (CLI exit code 1). */
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** An enumeration would exceed its point budget (CLI exit code 2). */
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t budget)
      : std::runtime_error(what + " (requires " + std::to_string(required) +
                           " evaluations, budget " + std::to_string(budget) + ")"),
        required_(required),
        budget_(budget) {}
  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/** A mathematical invariant that must hold was found violated (CLI exit code 3). */
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw InputError(msg);
}

inline void ensure(bool ok, const std::string& msg) {
  if (!ok) throw InvariantViolation(msg);
}

/**
 * A rational number or +infinity. Infinity is a tag, never a sentinel value;
 * it compares greater than every finite value.
 */
class ExtRational {
 public:
  ExtRational() = default;
  ExtRational(Rational v) : value_(std::move(v)) {}  // NOLINT(implicit)
  ExtRational(long v) : value_(Rational(v)) {}       // NOLINT(implicit)

  static ExtRational infinity() {
    ExtRational r;
    r.value_.reset();
    return r;
  }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }

  const Rational& value() const {
    if (!value_) throw std::logic_error("ExtRational::value() on infinity");
    return *value_;
  }

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
    return *a.value_ == *b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    if (a.is_infinite()) return std::strong_ordering::greater;
    if (b.is_infinite()) return std::strong_ordering::less;
    if (*a.value_ < *b.value_) return std::strong_ordering::less;
    if (*a.value_ > *b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  std::optional<Rational> value_ = Rational(0);
};

inline std::ostream& operator<<(std::ostream& os, const ExtRational& v) {
  if (v.is_infinite()) return os << "inf";
  return os << v.value();
}

/// "num/den" with den omitted when it is 1.
inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline std::string to_string(const ExtRational& q) {
  return q.is_infinite() ? std::string("inf") : to_string(q.value());
}

/// Parses "a", "-a" or "a/b".
inline Rational parse_rational(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    require(den != 0, "zero denominator in rational \"" + s + "\"");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw InputError("malformed rational \"" + s + "\"");
  }
}

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }
inline bool is_integral(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return denominator(q) == 1; });
}

inline Integer floor_of(const Rational& q) {
  Integer n = numerator(q), d = denominator(q);
  Integer f = n / d;
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

inline Integer ceil_of(const Rational& q) { return -floor_of(-q); }

/// Fractional part in [0, 1).
inline Rational frac(const Rational& q) { return q - Rational(floor_of(q)); }

inline Integer gcd_of(Integer a, Integer b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Integer lcm_of(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd_of(a, b) * b);
}

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline RationalVector to_rational(const IntVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

inline IntVector make_int_vector(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rational dot(const RationalVector& a, const IntVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/**
 * Affine functional x -> <coeffs, x> + constant. A supporting hyperplane
 * "<e, x> = 1" is stored as coeffs = e, constant = 0 and compared against 1.
 */
struct AffineFunctional {
  RationalVector coeffs;
  Rational constant = 0;

  Rational operator()(const RationalVector& x) const { return dot(coeffs, x) + constant; }
  Rational operator()(const IntVector& x) const { return dot(coeffs, x) + constant; }

  friend bool operator==(const AffineFunctional&, const AffineFunctional&) = default;
};

/// Number of ways to choose k of n, exact.
inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Calls fn(subset) for every k-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(static_cast<const std::vector<std::size_t>&>(idx));
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace hodge
