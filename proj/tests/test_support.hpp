#pragma once

#include "unisolv/poly.hpp"
#include "unisolv/rng.hpp"

namespace unisolv::testing {

/// Random sparse polynomial of total degree <= max_degree (possibly zero).
inline Poly random_poly(SeededRng& rng, unsigned dim, unsigned max_degree) {
  Poly p(dim);
  for (const auto& e : exponents_up_to(dim, max_degree)) {
    if (rng.next_int(0, 2) != 0) continue;  // keep it sparse
    p.add_term(e, rng.next_rational(-5, 5, 1, 3));
  }
  return p;
}

inline Poly random_nonzero_poly(SeededRng& rng, unsigned dim, unsigned max_degree) {
  for (;;) {
    Poly p = random_poly(rng, dim, max_degree);
    if (!p.is_zero()) return p;
  }
}

inline VectorField random_field(SeededRng& rng, unsigned dim, unsigned max_degree) {
  std::vector<Poly> comps;
  for (unsigned i = 0; i < dim; ++i) comps.push_back(random_poly(rng, dim, max_degree));
  return VectorField(std::move(comps));
}

}  // namespace unisolv::testing
