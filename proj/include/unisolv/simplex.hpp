// Simplex geometry over exact rationals: barycentric coordinate forms,
// volume, pullbacks to the reference simplex, exact polynomial moments over
// the simplex and its facets, and Green-identity residuals.
//
// Facet integrals are kept in the rational field by working with the scaled
// value (true surface integral divided by (d-1)!*|F_j|). The scale is a fixed
// positive constant per facet, so kernels of moment systems are unchanged;
// wherever a true boundary integral is needed (Green identities) the scale
// cancels against the same factor in the scaled outward normal
// (d-1)!*|F_j|*n_j, which is a rational vector.

#pragma once

#include <optional>
#include <vector>

#include "unisolv/errors.hpp"
#include "unisolv/matrix.hpp"
#include "unisolv/poly.hpp"
#include "unisolv/rng.hpp"

namespace unisolv {

using Point = std::vector<Rational>;

/// Signed edge-matrix determinant divided by d!; zero iff the points are
/// affinely dependent. Usable on raw vertex lists before a Simplex exists.
inline Rational simplex_signed_volume(unsigned dim, const std::vector<Point>& vertices) {
  if (vertices.size() != dim + 1) throw DimensionError("simplex volume: need dim+1 vertices");
  ExactMatrix<Rational> edges(dim, dim);
  for (unsigned j = 0; j < dim; ++j) {
    if (vertices[j + 1].size() != dim || vertices[0].size() != dim)
      throw DimensionError("simplex volume: vertex coordinate count != dim");
    for (unsigned i = 0; i < dim; ++i) edges(i, j) = vertices[j + 1][i] - vertices[0][i];
  }
  return det(edges) / Rational(factorial(dim));
}

inline Rational simplex_volume(unsigned dim, const std::vector<Point>& vertices) {
  return simplex_signed_volume(dim, vertices).abs();
}

class Simplex {
 public:
  Simplex(unsigned dim, std::vector<Point> vertices) : dim_(dim), vertices_(std::move(vertices)) {
    if (dim_ < 1) throw GeometryError("Simplex: dimension must be at least 1");
    if (simplex_volume(dim_, vertices_).is_zero())
      throw GeometryError("Simplex: degenerate (affinely dependent vertices)");
  }

  static std::optional<Simplex> try_make(unsigned dim, std::vector<Point> vertices) {
    if (vertices.size() != dim + 1) return std::nullopt;
    for (const Point& v : vertices)
      if (v.size() != dim) return std::nullopt;
    if (simplex_volume(dim, vertices).is_zero()) return std::nullopt;
    return Simplex(dim, std::move(vertices));
  }

  /// Unit simplex: origin plus the coordinate unit points.
  static Simplex reference(unsigned dim) {
    std::vector<Point> vs(dim + 1, Point(dim, Rational(0)));
    for (unsigned i = 0; i < dim; ++i) vs[i + 1][i] = Rational(1);
    return Simplex(dim, std::move(vs));
  }

  unsigned dim() const { return dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& vertex(unsigned i) const { return vertices_.at(i); }

  bool is_reference() const {
    return *this == reference(dim_);
  }

  Rational volume() const { return simplex_volume(dim_, vertices_); }

  /// Edge matrix E with columns vertex_{j+1} - vertex_0; the affine chart
  /// from the reference simplex is u -> vertex_0 + E u.
  ExactMatrix<Rational> edge_matrix() const {
    ExactMatrix<Rational> e(dim_, dim_);
    for (unsigned j = 0; j < dim_; ++j)
      for (unsigned i = 0; i < dim_; ++i) e(i, j) = vertices_[j + 1][i] - vertices_[0][i];
    return e;
  }

  /// p composed with the chart from the reference simplex.
  Poly pullback(const Poly& p) const {
    if (p.dim() != dim_) throw DimensionError("Simplex::pullback: dimension mismatch");
    return compose_affine(p, edge_matrix(), vertices_[0]);
  }

  /// Vertex indices of facet j (all but vertex j), in increasing order.
  std::vector<unsigned> facet_vertex_indices(unsigned j) const {
    require_facet(j);
    std::vector<unsigned> idx;
    for (unsigned i = 0; i <= dim_; ++i)
      if (i != j) idx.push_back(i);
    return idx;
  }

  /// p composed with the chart t -> w_0 + sum t_r (w_r - w_0) of facet j,
  /// where w_0..w_{d-1} are the facet vertices in increasing index order.
  Poly facet_pullback(const Poly& p, unsigned j) const {
    if (p.dim() != dim_) throw DimensionError("Simplex::facet_pullback: dimension mismatch");
    require_facet(j);
    const auto idx = facet_vertex_indices(j);
    ExactMatrix<Rational> a(dim_, dim_ - 1);
    for (unsigned r = 1; r < dim_; ++r)
      for (unsigned i = 0; i < dim_; ++i)
        a(i, r - 1) = vertices_[idx[r]][i] - vertices_[idx[0]][i];
    return compose_affine(p, a, vertices_[idx[0]]);
  }

  /// Outward normal of facet j scaled by (d-1)!*|F_j|; exactly rational.
  std::vector<Rational> scaled_facet_normal(unsigned j) const {
    require_facet(j);
    const auto idx = facet_vertex_indices(j);
    const Point& w0 = vertices_[idx[0]];
    std::vector<Rational> n(dim_);
    if (dim_ == 2) {
      // rotate the edge vector; |edge| = |F_j|
      Rational ex = vertices_[idx[1]][0] - w0[0];
      Rational ey = vertices_[idx[1]][1] - w0[1];
      n = {ey, -ex};
    } else if (dim_ == 3) {
      // cross product of the two face edges; |.| = 2*area = (d-1)!*|F_j|
      std::vector<Rational> a(3), b(3);
      for (unsigned i = 0; i < 3; ++i) {
        a[i] = vertices_[idx[1]][i] - w0[i];
        b[i] = vertices_[idx[2]][i] - w0[i];
      }
      n = {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
    } else {
      throw DimensionError("scaled_facet_normal: only dimensions 2 and 3");
    }
    // orient away from the opposite vertex
    Rational dot(0);
    for (unsigned i = 0; i < dim_; ++i) dot += n[i] * (vertices_[j][i] - w0[i]);
    if (dot.sign() > 0)
      for (Rational& c : n) c = -c;
    return n;
  }

  friend bool operator==(const Simplex& a, const Simplex& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }

 private:
  void require_facet(unsigned j) const {
    if (j > dim_) throw DimensionError("Simplex: facet index out of range");
  }

  unsigned dim_;
  std::vector<Point> vertices_;
};

/// The d+1 affine forms with lambda_i(vertex_j) = delta_ij. They sum to 1
/// and lambda_i vanishes identically on facet i.
struct BarycentricForms {
  std::vector<Poly> lambdas;
};

inline BarycentricForms barycentric(const Simplex& t) {
  const unsigned d = t.dim();
  ExactMatrix<Rational> a(d + 1, d + 1);
  for (unsigned j = 0; j <= d; ++j) {
    a(j, 0) = 1;
    for (unsigned i = 0; i < d; ++i) a(j, i + 1) = t.vertex(j)[i];
  }
  ExactMatrix<Rational> w = inverse(a);  // column i holds lambda_i's coefficients
  BarycentricForms forms;
  for (unsigned i = 0; i <= d; ++i) {
    Poly lam = Poly::constant(d, w(0, i));
    for (unsigned r = 0; r < d; ++r) {
      Exponents e(d, 0);
      e[r] = 1;
      lam.add_term(std::move(e), w(r + 1, i));
    }
    forms.lambdas.push_back(std::move(lam));
  }
  return forms;
}

/// Integral of a monomial over the reference simplex of matching dimension:
/// prod(a_i!) / (|a| + d)!.
inline Rational reference_moment(const Exponents& exponents) {
  const unsigned d = static_cast<unsigned>(exponents.size());
  BigInt num = 1;
  for (unsigned a : exponents) num *= factorial(a);
  return Rational(num, factorial(total_degree(exponents) + d));
}

/// Exact integral over the reference simplex of the polynomial's dimension.
inline Rational integrate_reference(const Poly& p) {
  Rational sum(0);
  for (const auto& [e, c] : p.terms()) sum += c * reference_moment(e);
  return sum;
}

inline Rational integrate_simplex(const Poly& p, const Simplex& t) {
  if (p.dim() != t.dim()) throw DimensionError("integrate_simplex: dimension mismatch");
  return Rational(factorial(t.dim())) * t.volume() * integrate_reference(t.pullback(p));
}

/// Scaled facet moment: integral over the reference (d-1)-simplex of the
/// pullback of p through facet j's chart. Equals the true surface integral
/// divided by (d-1)!*|F_j|.
inline Rational integrate_facet_scaled(const Poly& p, const Simplex& t, unsigned j) {
  return integrate_reference(t.facet_pullback(p, j));
}

enum class GreenMode { Div, Curl };

/// Exact residual of the Green identity for (v, q) on t. The boundary terms
/// pair the scaled facet moments with the scaled normals/tangents so every
/// quantity stays rational. Returns 0 iff the identity holds; for the 3D
/// curl mode the residual is the sum of the per-axis absolute residuals.
inline Rational green_residual(const VectorField& v, const Poly& q, const Simplex& t,
                               GreenMode mode) {
  const unsigned d = t.dim();
  if (v.dim() != d || q.dim() != d) throw DimensionError("green_residual: dimension mismatch");

  // scaled boundary moments S[j][i] = facet-scaled integral of v_i q
  std::vector<std::vector<Rational>> moments(d + 1, std::vector<Rational>(d));
  std::vector<std::vector<Rational>> normals(d + 1);
  for (unsigned j = 0; j <= d; ++j) {
    normals[j] = t.scaled_facet_normal(j);
    for (unsigned i = 0; i < d; ++i)
      moments[j][i] = integrate_facet_scaled(v.components[i] * q, t, j);
  }

  if (mode == GreenMode::Div) {
    // int (div v) q + int v . grad q - sum_j int_{F_j} (v . n) q
    Rational interior = integrate_simplex(divergence(v) * q, t);
    for (unsigned i = 0; i < d; ++i)
      interior += integrate_simplex(v.components[i] * differentiate(q, i), t);
    Rational boundary(0);
    for (unsigned j = 0; j <= d; ++j)
      for (unsigned i = 0; i < d; ++i) boundary += normals[j][i] * moments[j][i];
    return (interior - boundary).abs();
  }

  if (d == 2) {
    // int (curl v) q - int (v1 dq/dy - v2 dq/dx) - sum_j int_{F_j} (v . tangent) q
    Rational interior = integrate_simplex(curl2d(v) * q, t) -
                        integrate_simplex(v.components[0] * differentiate(q, 1), t) +
                        integrate_simplex(v.components[1] * differentiate(q, 0), t);
    Rational boundary(0);
    for (unsigned j = 0; j <= d; ++j) {
      // tangent = normal rotated a quarter turn
      boundary += -normals[j][1] * moments[j][0] + normals[j][0] * moments[j][1];
    }
    return (interior - boundary).abs();
  }

  // d == 3: per axis e_i, int (curl v)_i q = int v . (grad q x e_i)
  //         + sum_j int_{F_j} ((n x v) . e_i) q
  const VectorField curl = curl3d(v);
  const VectorField grad_q = gradient(q);
  Rational residual(0);
  for (unsigned axis = 0; axis < 3; ++axis) {
    Rational lhs = integrate_simplex(curl.components[axis] * q, t);
    // grad q x e_axis
    const unsigned a1 = (axis + 1) % 3, a2 = (axis + 2) % 3;
    // (grad q x e_axis) has component a1 = +dq/da2, component a2 = -dq/da1
    Rational rhs = integrate_simplex(v.components[a1] * grad_q.components[a2], t) -
                   integrate_simplex(v.components[a2] * grad_q.components[a1], t);
    Rational boundary(0);
    for (unsigned j = 0; j <= d; ++j) {
      // (N x S)_axis
      boundary += normals[j][a1] * moments[j][a2] - normals[j][a2] * moments[j][a1];
    }
    residual += (lhs - rhs - boundary).abs();
  }
  return residual;
}

/// Seeded random nondegenerate simplex; coordinates have numerators in
/// [-9, 9] and denominators in [1, 4].
inline Simplex random_simplex(SeededRng& rng, unsigned dim) {
  for (;;) {
    std::vector<Point> vs(dim + 1, Point(dim));
    for (Point& v : vs)
      for (Rational& c : v) c = rng.next_rational();
    if (auto s = Simplex::try_make(dim, std::move(vs))) return *std::move(s);
  }
}

}  // namespace unisolv
