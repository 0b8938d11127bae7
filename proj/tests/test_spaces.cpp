#include <catch2/catch_amalgamated.hpp>

#include "unisolv/spaces.hpp"
#include "unisolv/zpoly.hpp"

using namespace unisolv;

namespace {

/// Span-equality oracle: both families generate the same column space.
bool same_span(const std::vector<Poly>& a, const std::vector<Poly>& b, unsigned d,
               unsigned degree) {
  auto to_fields = [&](const std::vector<Poly>& polys) {
    std::vector<VectorField> fields;
    for (const Poly& p : polys) {
      VectorField f = VectorField::zero(d);
      f.components[0] = p;
      fields.push_back(std::move(f));
    }
    return fields;
  };
  auto fa = to_fields(a), fb = to_fields(b);
  auto fab = fa;
  fab.insert(fab.end(), fb.begin(), fb.end());
  const auto ra = rank(field_coefficient_matrix(fa, d, degree));
  const auto rb = rank(field_coefficient_matrix(fb, d, degree));
  const auto rab = rank(field_coefficient_matrix(fab, d, degree));
  return ra == rb && ra == rab;
}

/// Re and Im of (x + i y)^m, the classical planar harmonic pair.
std::pair<Poly, Poly> re_im_zm(unsigned m) {
  MultiPoly<GaussianRational> z(2);
  z.add_term({1, 0}, GaussianRational(1));
  z.add_term({0, 1}, GaussianRational::i());
  MultiPoly<GaussianRational> zm = pow(z, m);
  Poly re(2), im(2);
  for (const auto& [e, c] : zm.terms()) {
    re.add_term(e, c.re);
    im.add_term(e, c.im);
  }
  return {re, im};
}

}  // namespace

TEST_CASE("harmonic basis examples") {
  const Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);

  auto h22 = harmonic_basis(2, 2);
  REQUIRE(h22.size() == 2);
  CHECK(same_span(h22, {x * x - y * y, Rational(2) * (x * y)}, 2, 2));

  CHECK(harmonic_basis(4, 3).size() == 9);

  auto h13 = harmonic_basis(1, 3);
  REQUIRE(h13.size() == 3);
  for (unsigned i = 0; i < 3; ++i) CHECK(h13[i] == Poly::variable(3, i));

  CHECK(harmonic_basis(0, 2).size() == 1);
}

TEST_CASE("harmonic basis elements are homogeneous with zero laplacian") {
  for (unsigned d : {2u, 3u}) {
    const unsigned max_m = d == 2 ? 10 : 8;
    for (unsigned m = 0; m <= max_m; ++m) {
      auto basis = harmonic_basis(m, d);
      const unsigned expected = d == 2 ? (m == 0 ? 1 : 2) : 2 * m + 1;
      CHECK(basis.size() == expected);
      for (const Poly& h : basis) {
        CHECK(laplacian(h).is_zero());
        REQUIRE(h.degree().has_value());
        CHECK(*h.degree() == m);
        for (const auto& [e, c] : h.terms()) CHECK(total_degree(e) == m);
      }
    }
  }
}

TEST_CASE("planar harmonic bases match the Re/Im z^m family") {
  for (unsigned m = 1; m <= 6; ++m) {
    auto [re, im] = re_im_zm(m);
    CHECK(same_span(harmonic_basis(m, 2), {re, im}, 2, m));
  }
}

TEST_CASE("space dimension formula") {
  CHECK(space_dimension(1, 2) == 6);
  CHECK(space_dimension(2, 2) == 14);
  CHECK(space_dimension(2, 3) == 39);
  for (unsigned k = 1; k <= 5; ++k) CHECK(space_dimension(k, 2) == k * k + 5 * k);
}

TEST_CASE("build_space counts and direct-sum rank") {
  auto s12 = build_space(1, 2);
  CHECK(s12.count() == 6);
  for (const auto& tag : s12.provenance)
    CHECK(std::holds_alternative<MonomialComponentTag>(tag));

  auto s22 = build_space(2, 2);
  CHECK(s22.count() == 14);
  unsigned gradients = 0;
  for (const auto& tag : s22.provenance)
    if (std::holds_alternative<HarmonicGradientTag>(tag)) ++gradients;
  CHECK(gradients == 2);

  auto s23 = build_space(2, 3);
  CHECK(s23.count() == 39);

  // construction itself verifies the direct-sum rank; spot-check larger cases
  for (unsigned k = 1; k <= 5; ++k) {
    CHECK(build_space(k, 2).count() == space_dimension(k, 2));
    if (k <= 3) CHECK(build_space(k, 3).count() == space_dimension(k, 3));
  }
}

TEST_CASE("membership finds exact coordinates") {
  auto s = build_space(2, 2);
  for (std::size_t j : {std::size_t(0), std::size_t(5), s.count() - 1}) {
    auto coords = membership(s.fields[j], s);
    REQUIRE(coords.has_value());
    for (std::size_t c = 0; c < coords->size(); ++c)
      CHECK((*coords)[c] == Rational(c == j ? 1 : 0));
  }

  // a random combination is recovered exactly
  VectorField combo = Rational(3) * s.fields[1] + Rational(-7, 2) * s.fields[13];
  auto coords = membership(combo, s);
  REQUIRE(coords.has_value());
  CHECK((*coords)[1] == Rational(3));
  CHECK((*coords)[13] == Rational(-7, 2));

  // (x^3, 0, 0) is not in the k=2, d=3 space
  auto s23 = build_space(2, 3);
  const Poly x = Poly::variable(3, 0);
  VectorField cubic = VectorField::zero(3);
  cubic.components[0] = x * x * x;
  CHECK_FALSE(membership(cubic, s23).has_value());

  CHECK_THROWS_AS(membership(VectorField::zero(3), s), DimensionError);
}

TEST_CASE("gradients of planar harmonics complexify to monomials in z") {
  for (unsigned m = 3; m <= 8; ++m) {
    for (const Poly& h : harmonic_basis(m, 2)) {
      ZPoly p = complexify(gradient(h));
      CHECK(p.is_holomorphic());
      REQUIRE(p.degree().has_value());
      CHECK(*p.degree() == m - 1);
      CHECK(p.rep().terms().size() == 1);  // a single z^{m-1} term
    }
  }
}
