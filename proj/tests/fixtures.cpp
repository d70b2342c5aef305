#include "fixtures.hpp"

namespace fixtures {

oracle::Poly as_poly(const zl::SymbolicExpansion& e, std::size_t vars) {
  oracle::Poly out(vars);
  for (const auto& term : e.terms()) {
    oracle::Exponents k(term.k.k().begin(), term.k.k().end());
    k.resize(vars, 0);
    oracle::Poly t = oracle::Poly::constant(vars, term.coeff.get());
    for (std::size_t j = 0; j < vars; ++j) {
      for (std::uint32_t m = 0; m < k[j]; ++m) t = t * oracle::Poly::variable(vars, j);
    }
    out += t;
  }
  return out;
}

// Literal transcriptions of the published low-order relations.
oracle::Poly published_eta(unsigned index) {
  constexpr std::size_t v = 5;
  switch (index) {
    case 0: return oracle::make_poly(v, {{-1, {1}}});
    case 1: return oracle::make_poly(v, {{1, {2}}, {-2, {0, 1}}});
    case 2: return oracle::make_poly(v, {{-1, {3}}, {3, {1, 1}}, {-3, {0, 0, 1}}});
    case 3: return oracle::make_poly(v, {{1, {4}}, {-4, {2, 1}}, {2, {0, 2}}, {4, {1, 0, 1}}, {-4, {0, 0, 0, 1}}});
    default:
      return oracle::make_poly(v, {{-1, {5}},
                                   {5, {3, 1}},
                                   {-5, {1, 2}},
                                   {-5, {2, 0, 1}},
                                   {5, {0, 1, 1}},
                                   {5, {1, 0, 0, 1}},
                                   {-5, {0, 0, 0, 0, 1}}});
  }
}

oracle::Poly published_gamma(unsigned index) {
  constexpr std::size_t v = 5;
  switch (index) {
    case 0: return oracle::make_poly(v, {{-1, {1}}});
    case 1: return oracle::make_poly(v, {{1, {2}}, {-1, {0, 1}}}, 2);
    case 2: return oracle::make_poly(v, {{-1, {3}}, {3, {1, 1}}, {-2, {0, 0, 1}}}, 6);
    case 3:
      return oracle::make_poly(v, {{1, {4}}, {-6, {2, 1}}, {3, {0, 2}}, {8, {1, 0, 1}}, {-6, {0, 0, 0, 1}}}, 24);
    default:
      return oracle::make_poly(v,
                               {{-1, {5}},
                                {10, {3, 1}},
                                {-15, {1, 2}},
                                {-20, {2, 0, 1}},
                                {20, {0, 1, 1}},
                                {30, {1, 0, 0, 1}},
                                {-24, {0, 0, 0, 0, 1}}},
                               120);
  }
}

oracle::Poly published_lambda(unsigned n) {
  constexpr std::size_t v = 5;
  switch (n) {
    case 1: return oracle::make_poly(v, {{1, {1}}});
    case 2: return oracle::make_poly(v, {{2, {1}}, {-1, {2}}, {2, {0, 1}}});
    case 3: return oracle::make_poly(v, {{3, {1}}, {-3, {2}}, {1, {3}}, {6, {0, 1}}, {-3, {1, 1}}, {3, {0, 0, 1}}});
    default:
      return oracle::make_poly(v, {{4, {1}},
                                   {-6, {2}},
                                   {4, {3}},
                                   {-1, {4}},
                                   {12, {0, 1}},
                                   {-12, {1, 1}},
                                   {4, {2, 1}},
                                   {-2, {0, 2}},
                                   {12, {0, 0, 1}},
                                   {-4, {1, 0, 1}},
                                   {4, {0, 0, 0, 1}}});
  }
}

}  // namespace fixtures
