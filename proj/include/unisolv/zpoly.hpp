// Polynomials in z and conjugate-z over the Gaussian rationals, and the
// complexification map (v1, v2) -> v1 - i v2 rewritten through
// x = (z + z̄)/2, y = (z - z̄)/(2i).
//
// The rewrite keeps the full z/z̄ expansion; holomorphy (no z̄ terms) is a
// checkable property, equivalent to div v = curl v = 0.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "unisolv/poly.hpp"

namespace unisolv {

class ZPoly {
 public:
  ZPoly() : rep_(2) {}
  explicit ZPoly(MultiPoly<GaussianRational> rep) : rep_(std::move(rep)) {
    if (rep_.dim() != 2) throw DimensionError("ZPoly: representation must have two variables");
  }

  static ZPoly constant(GaussianRational c) {
    return ZPoly(MultiPoly<GaussianRational>::constant(2, std::move(c)));
  }
  /// c * z^m * z̄^n
  static ZPoly monomial(unsigned m, unsigned n, GaussianRational c) {
    return ZPoly(MultiPoly<GaussianRational>::monomial(2, {m, n}, std::move(c)));
  }

  const MultiPoly<GaussianRational>& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  std::optional<unsigned> degree() const { return rep_.degree(); }

  GaussianRational coeff(unsigned m, unsigned n) const { return rep_.coeff({m, n}); }

  /// True when no z̄ term survives.
  bool is_holomorphic() const {
    for (const auto& [e, c] : rep_.terms())
      if (e[1] > 0) return false;
    return true;
  }

  /// Dense coefficients (a_0, ..., a_deg) of a holomorphic polynomial
  /// sum a_r z^r. Contract: is_holomorphic().
  std::vector<GaussianRational> holomorphic_coeffs() const {
    if (!is_holomorphic()) throw ContractError("ZPoly: polynomial has z-bar terms");
    std::vector<GaussianRational> coeffs(rep_.degree() ? *rep_.degree() + 1 : 0);
    for (const auto& [e, c] : rep_.terms()) coeffs[e[0]] = c;
    return coeffs;
  }

  friend ZPoly operator+(const ZPoly& a, const ZPoly& b) { return ZPoly(a.rep_ + b.rep_); }
  friend ZPoly operator-(const ZPoly& a, const ZPoly& b) { return ZPoly(a.rep_ - b.rep_); }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b) { return ZPoly(a.rep_ * b.rep_); }
  friend ZPoly operator*(const GaussianRational& s, const ZPoly& p) { return ZPoly(s * p.rep_); }
  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.rep_ == b.rep_; }

 private:
  MultiPoly<GaussianRational> rep_;
};

/// Rewrite a real bivariate polynomial as a polynomial in (z, z̄).
inline ZPoly complexify_scalar(const Poly& p) {
  if (p.dim() != 2) throw DimensionError("complexify: polynomial must be bivariate");
  MultiPoly<GaussianRational> lifted(2);
  for (const auto& [e, c] : p.terms()) lifted.add_term(e, GaussianRational(c));

  const Rational half(1, 2);
  const GaussianRational i = GaussianRational::i();
  ExactMatrix<GaussianRational> sub(2, 2);
  sub(0, 0) = GaussianRational(half);          // x = z/2 + z̄/2
  sub(0, 1) = GaussianRational(half);
  sub(1, 0) = GaussianRational(Rational(0), -half);  // y = -i z/2 + i z̄/2
  sub(1, 1) = GaussianRational(Rational(0), half);
  return ZPoly(compose_affine(lifted, sub, {GaussianRational(0), GaussianRational(0)}));
}

/// The complex representative v1 - i v2 of a planar vector field, expanded
/// in z and z̄. Holomorphic iff div v = curl v = 0.
inline ZPoly complexify(const VectorField& v) {
  if (v.dim() != 2) throw DimensionError("complexify: field must be two-dimensional");
  return complexify_scalar(v.components[0]) -
         GaussianRational::i() * complexify_scalar(v.components[1]);
}

}  // namespace unisolv
