#pragma once

// Low-order relations transcribed literally from the published source,
// plus a bridge from library expansions to oracle polynomials.

#include "oracles.hpp"
#include "zetalaurent/symbolic.hpp"

namespace fixtures {

// eta_index as a polynomial in gamma_0..gamma_4, index 0..4.
oracle::Poly published_eta(unsigned index);
// gamma_index as a polynomial in eta_0..eta_4, index 0..4.
oracle::Poly published_gamma(unsigned index);
// lambda~_n as a polynomial in gamma_0..gamma_4, n = 1..4.
oracle::Poly published_lambda(unsigned n);

// A symbolic expansion seen as an oracle polynomial in `vars` variables.
oracle::Poly as_poly(const zl::SymbolicExpansion& e, std::size_t vars);

}  // namespace fixtures
