#pragma once

#include "hodge/core.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace hodge {

/// Largest field order for which log, Zech and trace tables are built.
inline constexpr std::int64_t kMaxFieldOrder = std::int64_t{1} << 22;

namespace detail {

// Polynomials over GF(p) as little-endian coefficient vectors.
using FpPoly = std::vector<std::int64_t>;

inline void trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline FpPoly poly_mod(FpPoly f, const FpPoly& g, std::int64_t p) {
  // g monic is not assumed; its leading coefficient is inverted mod p.
  trim(f);
  const std::size_t dg = g.size() - 1;
  std::int64_t inv = 1;
  for (std::int64_t e = p - 2, b = g.back() % p; e > 0; e >>= 1, b = b * b % p)
    if (e & 1) inv = inv * b % p;
  while (f.size() >= g.size()) {
    const std::int64_t c = f.back() * inv % p;
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) f[shift + i] = ((f[shift + i] - c * g[i]) % p + p) % p;
    trim(f);
  }
  return f;
}

inline bool is_irreducible(const FpPoly& f, std::int64_t p) {
  const std::size_t a = f.size() - 1;
  if (a <= 1) return true;
  // Trial division by every monic polynomial of degree 1..a/2.
  for (std::size_t deg = 1; deg <= a / 2; ++deg) {
    std::int64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::int64_t code = 0; code < count; ++code) {
      FpPoly g(deg + 1);
      std::int64_t c = code;
      for (std::size_t i = 0; i < deg; ++i, c /= p) g[i] = c % p;
      g[deg] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

/**
 * GF(p^a) with elements encoded as indices 0..q-1: the base-p digits of an
 * index are the coefficients of the element in the polynomial basis
 * 1, x, ..., x^{a-1} modulo the defining polynomial. Index 0 is zero and
 * index 1 is one. Multiplicative structure is tabulated through a fixed
 * primitive element g, so most arithmetic happens on discrete logarithms.
 */
class FiniteField {
 public:
  using Element = std::uint32_t;
  /// Sentinel logarithm standing for the zero element.
  static constexpr std::int64_t kZeroLog = -1;

  FiniteField(std::int64_t p, int a) {
    require(p >= 2 && is_prime(static_cast<std::uint64_t>(p)), "field characteristic must be prime, got " + std::to_string(p));
    require(a >= 1, "field degree must be positive");
    auto t = std::make_shared<Tables>();
    t->p = p;
    t->a = a;
    t->q = 1;
    for (int i = 0; i < a; ++i) {
      t->q *= p;
      if (t->q > kMaxFieldOrder)
        throw BudgetExceeded("finite field order", static_cast<std::uint64_t>(t->q), static_cast<std::uint64_t>(kMaxFieldOrder));
    }
    tables_ = std::move(t);
    choose_modulus();
    build_tables();
  }

  std::int64_t p() const { return tables_->p; }
  int degree() const { return tables_->a; }
  std::int64_t q() const { return tables_->q; }
  std::int64_t unit_count() const { return tables_->q - 1; }
  /// Monic defining polynomial, little-endian, length degree() + 1.
  const std::vector<std::int64_t>& modulus() const { return tables_->modulus; }
  Element primitive_element() const { return static_cast<Element>(tables_->exp[1 % unit_count()]); }

  Element zero() const { return 0; }
  Element one() const { return 1; }

  Element from_coords(const std::vector<std::int64_t>& coords) const {
    require(coords.size() <= static_cast<std::size_t>(degree()), "too many field coordinates for GF(" +
                                                                      std::to_string(q()) + ")");
    std::int64_t idx = 0, w = 1;
    for (auto c : coords) {
      idx += (((c % p()) + p()) % p()) * w;
      w *= p();
    }
    return static_cast<Element>(idx);
  }

  std::vector<std::int64_t> coords(Element x) const {
    std::vector<std::int64_t> out(static_cast<std::size_t>(degree()));
    std::int64_t v = x;
    for (auto& c : out) {
      c = v % p();
      v /= p();
    }
    return out;
  }

  Element add(Element x, Element y) const {
    std::int64_t out = 0, w = 1, u = x, v = y;
    for (int i = 0; i < degree(); ++i, u /= p(), v /= p(), w *= p()) out += ((u % p() + v % p()) % p()) * w;
    return static_cast<Element>(out);
  }

  Element neg(Element x) const {
    std::int64_t out = 0, w = 1, u = x;
    for (int i = 0; i < degree(); ++i, u /= p(), w *= p()) out += ((p() - u % p()) % p()) * w;
    return static_cast<Element>(out);
  }

  Element sub(Element x, Element y) const { return add(x, neg(y)); }

  Element mul(Element x, Element y) const {
    if (x == 0 || y == 0) return 0;
    return exp_of(log_of(x) + log_of(y));
  }

  Element inv(Element x) const {
    require(x != 0, "division by zero in GF(" + std::to_string(q()) + ")");
    return exp_of(unit_count() - log_of(x));
  }

  Element pow(Element x, std::int64_t e) const {
    if (x == 0) return e == 0 ? 1 : 0;
    const std::int64_t m = unit_count();
    return exp_of(((log_of(x) * (e % m)) % m + m) % m);
  }

  /// Discrete logarithm base the primitive element; kZeroLog for zero.
  std::int64_t log_of(Element x) const { return tables_->log[x]; }
  Element exp_of(std::int64_t l) const {
    const std::int64_t m = unit_count();
    return static_cast<Element>(tables_->exp[static_cast<std::size_t>(((l % m) + m) % m)]);
  }

  /// log(1 + g^l), or kZeroLog when 1 + g^l = 0.
  std::int64_t zech(std::int64_t l) const { return tables_->zech[static_cast<std::size_t>(l)]; }
  const std::vector<std::int64_t>& zech_table() const { return tables_->zech; }

  /// Absolute trace to GF(p), as a residue 0..p-1.
  std::int64_t trace(Element x) const {
    std::int64_t t = 0, v = x;
    for (int i = 0; i < degree(); ++i, v /= p()) t += (v % p()) * tables_->basis_trace[static_cast<std::size_t>(i)];
    return t % p();
  }
  /// trace(g^l) for l = 0..q-2.
  const std::vector<std::int64_t>& trace_of_log() const { return tables_->trace_log; }

  std::vector<Element> units() const {
    std::vector<Element> out;
    for (std::int64_t i = 1; i < q(); ++i) out.push_back(static_cast<Element>(i));
    return out;
  }

  /**
   * Field embedding from `small` (same characteristic, degree dividing ours).
   * The image of the small field's generator x is the smallest-index root of
   * its defining polynomial, which makes the embedding deterministic.
   */
  Element embed(const FiniteField& small, Element x) const {
    require(small.p() == p() && degree() % small.degree() == 0,
            "GF(" + std::to_string(small.q()) + ") does not embed in GF(" + std::to_string(q()) + ")");
    const Element beta = root_of(small.modulus());
    auto c = small.coords(x);
    Element out = 0, power = 1;
    for (auto ci : c) {
      out = add(out, mul(from_coords({ci}), power));
      power = mul(power, beta);
    }
    return out;
  }

  bool operator==(const FiniteField& o) const { return p() == o.p() && degree() == o.degree(); }

 private:
  struct Tables {
    std::int64_t p = 2;
    int a = 1;
    std::int64_t q = 2;
    std::vector<std::int64_t> modulus;
    std::vector<std::int64_t> exp, log, zech, trace_log, basis_trace;
  };
  std::shared_ptr<const Tables> tables_;

  Tables& mut() { return const_cast<Tables&>(*tables_); }

  // Monic irreducible of degree a whose coefficient tuple (c_{a-1}, ..., c_0)
  // is lexicographically smallest.
  void choose_modulus() {
    const std::int64_t p = tables_->p;
    const int a = tables_->a;
    if (a == 1) {
      mut().modulus = {0, 1};
      return;
    }
    for (std::int64_t code = 0;; ++code) {
      detail::FpPoly f(static_cast<std::size_t>(a) + 1);
      std::int64_t c = code;
      for (int i = 0; i < a; ++i, c /= p) f[static_cast<std::size_t>(i)] = c % p;
      f[static_cast<std::size_t>(a)] = 1;
      if (f[0] != 0 && detail::is_irreducible(f, p)) {
        mut().modulus = f;
        return;
      }
    }
  }

  // Multiplication on indices through polynomial arithmetic; used only while
  // the log tables are being built.
  std::int64_t slow_mul(std::int64_t x, std::int64_t y) const {
    const std::int64_t p = tables_->p;
    const auto a = static_cast<std::size_t>(tables_->a);
    detail::FpPoly u(a), v(a), w(2 * a, 0);
    for (std::size_t i = 0; i < a; ++i, x /= p, y /= p) {
      u[i] = x % p;
      v[i] = y % p;
    }
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < a; ++j) w[i + j] = (w[i + j] + u[i] * v[j]) % p;
    w = detail::poly_mod(w, tables_->modulus, p);
    std::int64_t out = 0, wt = 1;
    for (auto c : w) {
      out += c * wt;
      wt *= p;
    }
    return out;
  }

  std::int64_t slow_pow(std::int64_t x, std::int64_t e) const {
    std::int64_t r = 1;
    for (; e > 0; e >>= 1, x = slow_mul(x, x))
      if (e & 1) r = slow_mul(r, x);
    return r;
  }

  void build_tables() {
    Tables& t = mut();
    const std::int64_t m = t.q - 1;
    std::vector<std::int64_t> prime_factors;
    {
      std::int64_t r = m;
      for (std::int64_t d = 2; d * d <= r; ++d)
        if (r % d == 0) {
          prime_factors.push_back(d);
          while (r % d == 0) r /= d;
        }
      if (r > 1) prime_factors.push_back(r);
    }
    std::int64_t g = 1;
    for (std::int64_t cand = 1; cand < t.q; ++cand) {
      bool primitive = true;
      for (auto r : prime_factors)
        if (slow_pow(cand, m / r) == 1) {
          primitive = false;
          break;
        }
      if (primitive) {
        g = cand;
        break;
      }
    }
    t.exp.assign(static_cast<std::size_t>(m), 0);
    t.log.assign(static_cast<std::size_t>(t.q), kZeroLog);
    std::int64_t cur = 1;
    for (std::int64_t l = 0; l < m; ++l) {
      t.exp[static_cast<std::size_t>(l)] = cur;
      ensure(t.log[static_cast<std::size_t>(cur)] == kZeroLog, "generator is not primitive");
      t.log[static_cast<std::size_t>(cur)] = l;
      cur = slow_mul(cur, g);
    }
    t.zech.assign(static_cast<std::size_t>(m), kZeroLog);
    for (std::int64_t l = 0; l < m; ++l) {
      const std::int64_t idx = t.exp[static_cast<std::size_t>(l)];
      const std::int64_t d0 = idx % t.p;
      t.zech[static_cast<std::size_t>(l)] = t.log[static_cast<std::size_t>(idx - d0 + (d0 + 1) % t.p)];
    }
    // Trace of each basis monomial x^i is the sum of its Frobenius conjugates.
    t.basis_trace.assign(static_cast<std::size_t>(t.a), 0);
    std::int64_t xi = 1;
    for (int i = 0; i < t.a; ++i) {
      std::int64_t acc = 0, conj = xi;
      for (int j = 0; j < t.a; ++j) {
        acc = add(static_cast<Element>(acc), static_cast<Element>(conj));
        conj = slow_pow(conj, t.p);
      }
      ensure(acc < t.p, "trace does not lie in the prime field");
      t.basis_trace[static_cast<std::size_t>(i)] = acc;
      xi = t.a > 1 ? slow_mul(xi, t.p) : xi;
    }
    t.trace_log.assign(static_cast<std::size_t>(m), 0);
    for (std::int64_t l = 0; l < m; ++l)
      t.trace_log[static_cast<std::size_t>(l)] = trace(static_cast<Element>(t.exp[static_cast<std::size_t>(l)]));
  }

  Element root_of(const std::vector<std::int64_t>& poly) const {
    for (std::int64_t cand = 0; cand < q(); ++cand) {
      Element v = 0;
      for (auto it = poly.rbegin(); it != poly.rend(); ++it)
        v = add(mul(v, static_cast<Element>(cand)), from_coords({*it}));
      if (v == 0) return static_cast<Element>(cand);
    }
    throw InvariantViolation("defining polynomial has no root in the extension field");
  }
};

inline FiniteField make_field(std::int64_t p, int a) { return FiniteField(p, a); }

}  // namespace hodge
