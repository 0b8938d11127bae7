// Harmonic polynomial spaces H_m(R^d) and the enriched vector space
//
//   [P_k(R^d)]^d  (+)  grad H_{k+2}(R^d)  (+) ... (+)  grad H_{2k}(R^d)
//
// with dimension accounting and exact membership tests.
//
// Harmonic bases are the deterministic echelon nullspace of the Laplacian
// matrix on homogeneous monomials: dimension-agnostic, rational, and
// reproducible. The classical Re/Im z^m family appears only in tests as a
// span oracle.

#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "unisolv/matrix.hpp"
#include "unisolv/poly.hpp"

namespace unisolv {

inline unsigned harmonic_dimension(unsigned m, unsigned d) {
  const BigInt all = binomial(m + d - 1, d - 1);
  const BigInt dependent = m >= 2 ? binomial(m - 2 + d - 1, d - 1) : BigInt(0);
  return static_cast<unsigned>(all - dependent);
}

/// Deterministic basis of the homogeneous harmonic polynomials of degree m:
/// the echelon nullspace of the Laplacian on graded-lex degree-m monomials.
inline std::vector<Poly> harmonic_basis(unsigned m, unsigned d) {
  const auto domain = exponents_of_degree(d, m);
  const auto range = m >= 2 ? exponents_of_degree(d, m - 2) : std::vector<Exponents>{};

  std::map<Exponents, std::size_t, GradedLexLess> row_of;
  for (std::size_t r = 0; r < range.size(); ++r) row_of.emplace(range[r], r);

  ExactMatrix<Rational> laplace(range.size(), domain.size());
  for (std::size_t c = 0; c < domain.size(); ++c) {
    const Poly image = laplacian(Poly::monomial(d, domain[c], Rational(1)));
    for (const auto& [e, coeff] : image.terms()) laplace(row_of.at(e), c) = coeff;
  }

  std::vector<Poly> basis;
  for (const auto& combo : nullspace(laplace)) {
    Poly h(d);
    for (std::size_t c = 0; c < domain.size(); ++c) h.add_term(domain[c], combo[c]);
    basis.push_back(std::move(h));
  }
  if (basis.size() != harmonic_dimension(m, d))
    throw InternalError("harmonic_basis: nullity does not match the dimension formula");
  return basis;
}

struct MonomialComponentTag {
  unsigned component = 0;  // which vector component carries the monomial
  Exponents exponents;
  friend bool operator==(const MonomialComponentTag&, const MonomialComponentTag&) = default;
};

struct HarmonicGradientTag {
  unsigned degree = 0;  // m, with the field = grad of harmonic_basis(m,d)[index]
  unsigned index = 0;
  friend bool operator==(const HarmonicGradientTag&, const HarmonicGradientTag&) = default;
};

using FieldProvenance = std::variant<MonomialComponentTag, HarmonicGradientTag>;

struct SpaceBasis {
  unsigned k = 0;
  unsigned dim = 0;
  std::vector<VectorField> fields;
  std::vector<FieldProvenance> provenance;

  std::size_t count() const { return fields.size(); }
};

inline std::size_t space_dimension(unsigned k, unsigned d) {
  if (k < 1) throw DimensionError("space_dimension: degree must be >= 1");
  std::size_t n = d * static_cast<std::size_t>(binomial(k + d, d));
  for (unsigned m = k + 2; m <= 2 * k; ++m) n += harmonic_dimension(m, d);
  return n;
}

/// Coefficient matrix of vector fields over the (component, monomial)
/// coordinates up to max_degree; column j holds fields[j].
inline ExactMatrix<Rational> field_coefficient_matrix(const std::vector<VectorField>& fields,
                                                      unsigned d, unsigned max_degree) {
  const auto monomials = exponents_up_to(d, max_degree);
  std::map<Exponents, std::size_t, GradedLexLess> offset;
  for (std::size_t i = 0; i < monomials.size(); ++i) offset.emplace(monomials[i], i);

  ExactMatrix<Rational> m(d * monomials.size(), fields.size());
  for (std::size_t j = 0; j < fields.size(); ++j) {
    if (fields[j].dim() != d)
      throw DimensionError("field_coefficient_matrix: field dimension mismatch");
    for (unsigned comp = 0; comp < d; ++comp)
      for (const auto& [e, c] : fields[j].components[comp].terms())
        m(comp * monomials.size() + offset.at(e), j) = c;
  }
  return m;
}

inline SpaceBasis build_space(unsigned k, unsigned d) {
  if (k < 1) throw DimensionError("build_space: degree must be >= 1");
  SpaceBasis space;
  space.k = k;
  space.dim = d;

  for (unsigned comp = 0; comp < d; ++comp)
    for (const auto& e : exponents_up_to(d, k)) {
      VectorField f = VectorField::zero(d);
      f.components[comp] = Poly::monomial(d, e, Rational(1));
      space.fields.push_back(std::move(f));
      space.provenance.push_back(MonomialComponentTag{comp, e});
    }

  for (unsigned m = k + 2; m <= 2 * k; ++m) {
    const auto harmonics = harmonic_basis(m, d);
    for (unsigned idx = 0; idx < harmonics.size(); ++idx) {
      space.fields.push_back(gradient(harmonics[idx]));
      space.provenance.push_back(HarmonicGradientTag{m, idx});
    }
  }

  if (space.count() != space_dimension(k, d))
    throw InternalError("build_space: field count does not match the dimension formula");
  // the enrichment must be a genuine direct sum
  const auto coeffs = field_coefficient_matrix(space.fields, d, 2 * k);
  if (rank(coeffs) != space.count())
    throw InternalError("build_space: basis fields are linearly dependent");
  return space;
}

/// Exact coordinates of v in the span of the basis, if it lies there.
inline std::optional<std::vector<Rational>> membership(const VectorField& v,
                                                       const SpaceBasis& s) {
  if (v.dim() != s.dim) throw DimensionError("membership: field dimension mismatch");
  unsigned max_degree = 2 * s.k;
  for (const Poly& c : v.components)
    if (auto deg = c.degree()) max_degree = std::max(max_degree, *deg);

  std::vector<VectorField> all = s.fields;
  all.push_back(v);
  const auto aug = field_coefficient_matrix(all, s.dim, max_degree);
  const auto ech = rref(aug);
  const std::size_t n = s.count();
  // if the appended column is a pivot, v is independent of the basis
  for (std::size_t c : ech.pivot_cols)
    if (c == n) return std::nullopt;

  std::vector<Rational> coords(n);
  for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r)
    coords[ech.pivot_cols[r]] = ech.reduced(r, n);
  return coords;
}

}  // namespace unisolv
