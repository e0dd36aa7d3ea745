#pragma once

#include "hodge/core.hpp"

#include <ostream>
#include <vector>

namespace hodge {

/**
 * Element of Z[zeta_p] stored in the basis 1, zeta, ..., zeta^{p-2}.
 * Products are taken modulo x^p - 1 and then folded with
 * zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}).
 */
class CyclotomicInteger {
 public:
  CyclotomicInteger() = default;
  explicit CyclotomicInteger(std::int64_t p) : p_(p), coords_(static_cast<std::size_t>(p - 1), Integer(0)) {
    require(p >= 2 && is_prime(static_cast<std::uint64_t>(p)), "cyclotomic prime must be prime");
  }
  CyclotomicInteger(std::int64_t p, const Integer& rational) : CyclotomicInteger(p) { coords_[0] = rational; }

  /// sum_t counts[t] zeta^t for t = 0..p-1.
  static CyclotomicInteger from_powers(std::int64_t p, const std::vector<Integer>& counts) {
    require(counts.size() == static_cast<std::size_t>(p), "power vector must have length p");
    CyclotomicInteger c(p);
    c.fold(counts);
    return c;
  }

  static CyclotomicInteger zeta_power(std::int64_t p, std::int64_t t) {
    std::vector<Integer> v(static_cast<std::size_t>(p), Integer(0));
    v[static_cast<std::size_t>(((t % p) + p) % p)] = 1;
    return from_powers(p, v);
  }

  std::int64_t p() const { return p_; }
  const std::vector<Integer>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }

  /// Rational integer value when the element lies in Z.
  std::optional<Integer> as_integer() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
      if (coords_[i] != 0) return std::nullopt;
    return coords_[0];
  }

  CyclotomicInteger& operator+=(const CyclotomicInteger& o) {
    same_ring(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  CyclotomicInteger& operator-=(const CyclotomicInteger& o) {
    same_ring(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  friend CyclotomicInteger operator+(CyclotomicInteger a, const CyclotomicInteger& b) { return a += b; }
  friend CyclotomicInteger operator-(CyclotomicInteger a, const CyclotomicInteger& b) { return a -= b; }
  friend CyclotomicInteger operator-(CyclotomicInteger a) {
    for (auto& c : a.coords_) c = -c;
    return a;
  }

  friend CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    a.same_ring(b);
    const auto p = static_cast<std::size_t>(a.p_);
    std::vector<Integer> w(p, Integer(0));
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
      if (a.coords_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coords_.size(); ++j) w[(i + j) % p] += a.coords_[i] * b.coords_[j];
    }
    CyclotomicInteger out(a.p_);
    out.fold(w);
    return out;
  }
  friend CyclotomicInteger operator*(CyclotomicInteger a, const Integer& k) {
    for (auto& c : a.coords_) c *= k;
    return a;
  }

  /// Division by a rational integer; nullopt unless every coordinate is divisible.
  std::optional<CyclotomicInteger> exact_divide(const Integer& m) const {
    require(m != 0, "division by zero in Z[zeta_p]");
    CyclotomicInteger out(p_);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i] % m != 0) return std::nullopt;
      out.coords_[i] = coords_[i] / m;
    }
    return out;
  }

  /// Galois automorphism zeta -> zeta^s for s coprime to p.
  CyclotomicInteger galois(std::int64_t s) const {
    const std::int64_t sr = ((s % p_) + p_) % p_;
    require(sr != 0, "Galois exponent must be coprime to p");
    std::vector<Integer> w(static_cast<std::size_t>(p_), Integer(0));
    for (std::size_t i = 0; i < coords_.size(); ++i)
      w[static_cast<std::size_t>((static_cast<std::int64_t>(i) * sr) % p_)] += coords_[i];
    CyclotomicInteger out(p_);
    out.fold(w);
    return out;
  }

  /// Field norm to Q: the product of all Galois conjugates.
  Integer norm() const {
    CyclotomicInteger acc(p_, Integer(1));
    for (std::int64_t s = 1; s < p_; ++s) acc = acc * galois(s);
    auto v = acc.as_integer();
    ensure(v.has_value(), "norm of a cyclotomic integer is not rational");
    return *v;
  }

  friend bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    return a.p_ == b.p_ && a.coords_ == b.coords_;
  }

  /// "c0 + c1*z + ..." with zero terms omitted; "0" for zero.
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i] == 0) continue;
      std::string c = coords_[i].str();
      if (!out.empty()) {
        if (c[0] == '-') {
          out += " - ";
          c.erase(0, 1);
        } else {
          out += " + ";
        }
      }
      if (i == 0) out += c;
      else {
        if (c == "1") out += "";
        else if (c == "-1") out += "-";
        else out += c + "*";
        out += i == 1 ? "z" : "z^" + std::to_string(i);
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::int64_t p_ = 2;
  std::vector<Integer> coords_{Integer(0)};

  void same_ring(const CyclotomicInteger& o) const {
    require(p_ == o.p_, "mixing cyclotomic rings of different primes");
  }

  void fold(const std::vector<Integer>& w) {
    const auto top = static_cast<std::size_t>(p_ - 1);
    for (std::size_t i = 0; i < top; ++i) coords_[i] = w[i] - w[top];
  }
};

inline std::ostream& operator<<(std::ostream& os, const CyclotomicInteger& c) { return os << c.to_string(); }

inline std::int64_t p_adic_order(Integer n, std::int64_t p) {
  ensure(n != 0, "valuation of zero requested as finite");
  std::int64_t v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

/**
 * q-adic valuation normalized so ord_q(q) = 1, with q = p^a. Every conjugate
 * of c has the same p-adic valuation because p is totally ramified, so the
 * valuation is read off the norm.
 */
inline ExtRational ord_q(const CyclotomicInteger& c, int a = 1) {
  if (c.is_zero()) return ExtRational::infinity();
  const std::int64_t p = c.p();
  return ExtRational(Rational(p_adic_order(c.norm(), p)) / Rational(p - 1) / Rational(a));
}

}  // namespace hodge
