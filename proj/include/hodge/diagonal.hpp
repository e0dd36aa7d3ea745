#pragma once

#include "hodge/expsum.hpp"
#include "hodge/snf.hpp"

#include <set>

namespace hodge {

/// Exponent columns V_1..V_n of a diagonal Laurent polynomial.
struct ExponentMatrix {
  RationalMatrix M;
  Integer det;
};

inline ExponentMatrix exponent_matrix_of_columns(const std::vector<IntVector>& columns) {
  require(!columns.empty(), "not diagonal: no exponent columns");
  const std::size_t n = columns.front().size();
  require(columns.size() == n, "not diagonal: " + std::to_string(columns.size()) + " terms in " + std::to_string(n) +
                                   " variables");
  ExponentMatrix out{RationalMatrix::from_columns(columns), 0};
  const Rational d = determinant(out.M);
  require(d != 0, "not diagonal: exponent vectors are linearly dependent");
  out.det = numerator(d);
  return out;
}

inline ExponentMatrix exponent_matrix(const LaurentPolynomial& f) {
  return exponent_matrix_of_columns(f.exponents());
}

inline bool is_nondegenerate_diagonal(const ExponentMatrix& M, std::int64_t p) {
  return gcd_of(Integer(p), abs(M.det)) == 1;
}

/// Element of S(Delta): r in [0,1)^n with M r integral.
struct FractionalVector {
  RationalVector coords;
  Rational norm;

  explicit FractionalVector(RationalVector c) : coords(std::move(c)) {
    for (const auto& x : coords) norm += x;
  }
  /// Least m >= 1 with m r integral.
  Integer order() const {
    Integer l = 1;
    for (const auto& x : coords) l = lcm_of(l, denominator(x));
    return l;
  }
  /// {s r}, coordinatewise fractional part.
  FractionalVector scaled(const Integer& s) const {
    RationalVector c;
    for (const auto& x : coords) c.push_back(frac(x * Rational(s)));
    return FractionalVector(std::move(c));
  }
  friend bool operator==(const FractionalVector& a, const FractionalVector& b) { return a.coords == b.coords; }
  friend bool operator<(const FractionalVector& a, const FractionalVector& b) { return a.coords < b.coords; }
};

/**
 * All r in [0,1)^n with M r in Z^n, sorted lexicographically. With
 * U M V = S in Smith form the group is V S^{-1} Z^n mod Z^n.
 */
inline std::vector<FractionalVector> solution_group(const ExponentMatrix& M) {
  const auto snf = smith_normal_form(M.M);
  const auto s = snf.diagonal();
  const std::size_t n = s.size();
  std::set<RationalVector> elems;
  std::vector<Integer> j(n, Integer(0));
  while (true) {
    RationalVector t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = Rational(j[i]) / Rational(s[i]);
    RationalVector r = snf.V * t;
    for (auto& x : r) x = frac(x);
    elems.insert(std::move(r));
    std::size_t i = 0;
    while (i < n && ++j[i] == s[i]) j[i++] = 0;
    if (i == n) break;
  }
  ensure(Integer(elems.size()) == abs(M.det), "solution group order differs from |det M|");
  std::vector<FractionalVector> out;
  for (const auto& r : elems) {
    ensure(is_integral(M.M * r), "solution group element fails M r in Z^n");
    out.emplace_back(r);
  }
  return out;
}

/// Elements whose additive order is prime to p.
inline std::vector<FractionalVector> prime_to_p_part(const std::vector<FractionalVector>& S, std::int64_t p) {
  std::vector<FractionalVector> out;
  for (const auto& r : S)
    if (r.order() % p != 0) out.push_back(r);
  Integer expected(S.size());
  while (expected % p == 0) expected /= p;
  ensure(Integer(out.size()) == expected, "prime-to-p part has the wrong order");
  return out;
}

struct DiagonalVerdict {
  bool ordinary = false;
  std::optional<FractionalVector> witness;  // r with |r| != |{p r}|, first in lexicographic order
  Integer group_order;
};

/// Ordinary iff |r| = |{p r}| for every r in S_p(Delta); requires p not dividing det M.
inline DiagonalVerdict is_ordinary_diagonal(const ExponentMatrix& M, std::int64_t p) {
  require(p >= 2 && is_prime(static_cast<std::uint64_t>(p)), "p must be prime");
  require(is_nondegenerate_diagonal(M, p),
          "p = " + std::to_string(p) + " divides det M = " + M.det.str() + "; the diagonal criterion does not apply");
  const auto S = solution_group(M);
  const auto Sp = prime_to_p_part(S, p);
  DiagonalVerdict v;
  v.group_order = Integer(S.size());
  v.ordinary = true;
  std::set<RationalVector> image;
  for (const auto& r : Sp) {
    const auto pr = r.scaled(Integer(p));
    image.insert(pr.coords);
    if (v.ordinary && pr.norm != r.norm) {
      v.ordinary = false;
      v.witness = r;
    }
  }
  ensure(image.size() == Sp.size(), "the p-action does not permute the prime-to-p part");
  return v;
}

}  // namespace hodge
