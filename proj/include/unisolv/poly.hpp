// Sparse multivariate polynomials with exact coefficients, and the vector
// calculus on them: evaluation, arithmetic, differentiation, gradient,
// divergence, curl, Laplacian and affine composition.
//
// Terms are keyed by exponent vector in graded-lexicographic order (total
// degree first, then lexicographic), which fixes iteration and serialization
// order everywhere downstream.

#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "unisolv/matrix.hpp"
#include "unisolv/rational.hpp"

namespace unisolv {

using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

/// All exponent vectors of the given total degree, graded-lex sorted.
inline std::vector<Exponents> exponents_of_degree(unsigned dim, unsigned degree) {
  std::vector<Exponents> out;
  Exponents current(dim, 0);
  // enumerate compositions recursively in lexicographic order
  auto recurse = [&](auto&& self, unsigned pos, unsigned remaining) -> void {
    if (pos + 1 == dim) {
      current[pos] = remaining;
      out.push_back(current);
      return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
      current[pos] = e;
      self(self, pos + 1, remaining - e);
    }
  };
  if (dim == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  recurse(recurse, 0, degree);
  return out;
}

/// All exponent vectors with total degree <= max_degree, graded-lex sorted.
inline std::vector<Exponents> exponents_up_to(unsigned dim, unsigned max_degree) {
  std::vector<Exponents> out;
  for (unsigned deg = 0; deg <= max_degree; ++deg)
    for (auto& e : exponents_of_degree(dim, deg)) out.push_back(std::move(e));
  return out;
}

template <ExactField F>
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, F, GradedLexLess>;

  explicit MultiPoly(unsigned dim) : dim_(dim) {}

  static MultiPoly constant(unsigned dim, F value) {
    MultiPoly p(dim);
    p.add_term(Exponents(dim, 0), std::move(value));
    return p;
  }

  static MultiPoly monomial(unsigned dim, Exponents exponents, F coeff) {
    MultiPoly p(dim);
    p.add_term(std::move(exponents), std::move(coeff));
    return p;
  }

  static MultiPoly variable(unsigned dim, unsigned index) {
    Exponents e(dim, 0);
    e.at(index) = 1;
    return monomial(dim, std::move(e), F{1});
  }

  unsigned dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; empty for the zero polynomial.
  std::optional<unsigned> degree() const {
    if (terms_.empty()) return std::nullopt;
    return total_degree(terms_.rbegin()->first);
  }

  F coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? F{} : it->second;
  }

  /// Accumulate a term, dropping it if the coefficient cancels to zero.
  void add_term(Exponents exponents, F coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(exponents), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  F evaluate(const std::vector<F>& point) const {
    if (point.size() != dim_) throw DimensionError("MultiPoly::evaluate: wrong point dimension");
    F sum{};
    for (const auto& [e, c] : terms_) {
      F term = c;
      for (unsigned i = 0; i < dim_; ++i)
        for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
      sum += term;
    }
    return sum;
  }

  MultiPoly operator-() const {
    MultiPoly r(dim_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, F{} - c);
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    require_same_dim(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    require_same_dim(o);
    for (const auto& [e, c] : o.terms_) add_term(e, F{} - c);
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_same_dim(b);
    MultiPoly r(a.dim_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.dim_);
        for (unsigned i = 0; i < a.dim_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(std::move(e), ca * cb);
      }
    return r;
  }

  friend MultiPoly operator*(const F& s, const MultiPoly& p) {
    MultiPoly r(p.dim_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, s * c);
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_dim(const MultiPoly& o) const {
    if (dim_ != o.dim_) throw DimensionError("MultiPoly: variable-count mismatch");
  }

  unsigned dim_;
  TermMap terms_;
};

using Poly = MultiPoly<Rational>;

template <ExactField F>
MultiPoly<F> differentiate(const MultiPoly<F>& p, unsigned var) {
  if (var >= p.dim()) throw DimensionError("differentiate: variable index out of range");
  MultiPoly<F> r(p.dim());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    r.add_term(std::move(d), F{static_cast<long long>(e[var])} * c);
  }
  return r;
}

template <ExactField F>
MultiPoly<F> pow(const MultiPoly<F>& p, unsigned e) {
  MultiPoly<F> r = MultiPoly<F>::constant(p.dim(), F{1});
  for (unsigned i = 0; i < e; ++i) r = r * p;
  return r;
}

/// p(A u + b): substitution by an affine map. A has p.dim() rows; the result
/// lives in A.cols() variables.
template <ExactField F>
MultiPoly<F> compose_affine(const MultiPoly<F>& p, const ExactMatrix<F>& a,
                            const std::vector<F>& b) {
  if (a.rows() != p.dim()) throw DimensionError("compose_affine: map row count != polynomial dim");
  if (b.size() != a.rows()) throw DimensionError("compose_affine: shift length != map row count");
  const unsigned out_dim = static_cast<unsigned>(a.cols());

  std::vector<MultiPoly<F>> image;  // image of each input variable, degree <= 1
  for (unsigned i = 0; i < p.dim(); ++i) {
    MultiPoly<F> lin = MultiPoly<F>::constant(out_dim, b[i]);
    for (unsigned j = 0; j < out_dim; ++j) {
      Exponents e(out_dim, 0);
      e[j] = 1;
      lin.add_term(std::move(e), a(i, j));
    }
    image.push_back(std::move(lin));
  }

  // memoized powers of each variable image
  std::vector<std::vector<MultiPoly<F>>> powers(p.dim());
  auto power_of = [&](unsigned var, unsigned e) -> const MultiPoly<F>& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(MultiPoly<F>::constant(out_dim, F{1}));
    while (cache.size() <= e) cache.push_back(cache.back() * image[var]);
    return cache[e];
  };

  MultiPoly<F> result(out_dim);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly<F> term = MultiPoly<F>::constant(out_dim, c);
    for (unsigned i = 0; i < p.dim(); ++i)
      if (e[i] > 0) term = term * power_of(i, e[i]);
    result += term;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Vector fields over the rationals and their calculus.
// ---------------------------------------------------------------------------

struct VectorField {
  std::vector<Poly> components;

  static VectorField zero(unsigned dim) {
    VectorField v;
    for (unsigned i = 0; i < dim; ++i) v.components.emplace_back(dim);
    return v;
  }

  explicit VectorField() = default;
  explicit VectorField(std::vector<Poly> comps) : components(std::move(comps)) {
    for (const Poly& c : components)
      if (c.dim() != components.size())
        throw DimensionError("VectorField: component variable count != field dimension");
  }

  unsigned dim() const { return static_cast<unsigned>(components.size()); }
  bool is_zero() const {
    for (const Poly& c : components)
      if (!c.is_zero()) return false;
    return true;
  }

  VectorField& operator+=(const VectorField& o) {
    if (dim() != o.dim()) throw DimensionError("VectorField: dimension mismatch");
    for (unsigned i = 0; i < dim(); ++i) components[i] += o.components[i];
    return *this;
  }
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator*(const Rational& s, const VectorField& v) {
    VectorField r = v;
    for (Poly& c : r.components) c = s * c;
    return r;
  }
  friend bool operator==(const VectorField& a, const VectorField& b) {
    return a.components == b.components;
  }
};

inline VectorField gradient(const Poly& p) {
  std::vector<Poly> comps;
  for (unsigned i = 0; i < p.dim(); ++i) comps.push_back(differentiate(p, i));
  return VectorField(std::move(comps));
}

inline Poly divergence(const VectorField& v) {
  Poly d(v.dim());
  for (unsigned i = 0; i < v.dim(); ++i) d += differentiate(v.components[i], i);
  return d;
}

/// Scalar curl of a planar field: dv2/dx - dv1/dy.
inline Poly curl2d(const VectorField& v) {
  if (v.dim() != 2) throw DimensionError("curl2d: field must be two-dimensional");
  return differentiate(v.components[1], 0) - differentiate(v.components[0], 1);
}

inline VectorField curl3d(const VectorField& v) {
  if (v.dim() != 3) throw DimensionError("curl3d: field must be three-dimensional");
  const auto d = [&](unsigned comp, unsigned var) { return differentiate(v.components[comp], var); };
  return VectorField({d(2, 1) - d(1, 2), d(0, 2) - d(2, 0), d(1, 0) - d(0, 1)});
}

inline Poly laplacian(const Poly& p) {
  Poly l(p.dim());
  for (unsigned i = 0; i < p.dim(); ++i) l += differentiate(differentiate(p, i), i);
  return l;
}

}  // namespace unisolv
