#include <filesystem>

#include "doctest.h"
#include "oracles.hpp"
#include "zetalaurent/errors.hpp"
#include "zetalaurent/stieltjes.hpp"

using namespace zl;

namespace {

const PrecisionContext kCtx(192, 64);

BigReal series_at(const GammaTable& g, const BigReal& s) {
  BigReal acc(g.precision_bits());
  for (int n = g.n_max(); n >= 0; --n) acc = acc * s + g[static_cast<std::size_t>(n)];
  return acc;
}

// Classic-convention constants as published in standard tables, truncated to 34
// significant digits.
constexpr const char* kLiteratureClassic =
    "# convention=classic\n"
    "# precision_bits=110\n"
    "# n_max=4\n"
    "n,value\n"
    "0,0.5772156649015328606065120900824024\n"
    "1,-0.07281584548367672486058637587490131\n"
    "2,-0.009690363192872318484530386035212529\n"
    "3,0.002053834420303345866160046542753384\n"
    "4,0.002325370065467300057468170177526068\n";

}  // namespace

TEST_SUITE("stieltjes") {
  TEST_CASE("gamma_0 is Euler's constant") {
    const GammaTable g = compute_gamma_table(0, kCtx);
    CHECK(g.convention() == Convention::paper);
    CHECK(g.n_max() == 0);
    const BigReal euler = oracle::euler_gamma(512);
    CHECK(abs(g[0] - euler) < pow2(-192, 512));
  }

  TEST_CASE("table reproduces zeta(1+s) - 1/s from MPFR") {
    const GammaTable g = compute_gamma_table(40, kCtx);
    for (const char* s_text : {"-0.5", "-0.125", "0.25", "0.5"}) {
      const BigReal s = BigReal::parse(s_text, 256);
      const BigReal direct = oracle::zeta_regular_part(s, 256);
      CHECK_MESSAGE(abs(series_at(g, s) - direct) < pow2(-180, 256), "s=" << s_text);
    }
  }

  TEST_CASE("sign convention of gamma_1") {
    const GammaTable g = compute_gamma_table(1, kCtx);
    CHECK(g[1].to_double() == doctest::Approx(0.0728158454836767));
    CHECK(convert_convention(g, Convention::classic)[1].to_double() == doctest::Approx(-0.0728158454836767));
  }

  TEST_CASE("stable under extra guard bits and a doubled summation length") {
    const int n_max = 16;
    const GammaTable base = compute_gamma_table(n_max, kCtx);
    EulerMaclaurinPlan plan = plan_euler_maclaurin(n_max, 192);
    plan.terms *= 2;
    const GammaTable wider = compute_gamma_table(n_max, kCtx.with_extra_guard(64), plan);
    for (int n = 0; n <= n_max; ++n) {
      const auto i = static_cast<std::size_t>(n);
      CHECK_MESSAGE(scaled_difference(base[i], wider[i], wider[i]) < pow2(-192, 320), "n=" << n);
    }
  }

  TEST_CASE("plan meets the truncation target") {
    for (int n_max : {0, 10, 30, 60}) {
      const EulerMaclaurinPlan plan = plan_euler_maclaurin(n_max, 192);
      CHECK(plan.log2_truncation < -200);
      CHECK(plan.terms >= 2);
      CHECK(plan.corrections >= 1);
    }
  }

  TEST_CASE("too few guard bits is precision-infeasible") {
    CHECK_THROWS_AS(compute_gamma_table(30, PrecisionContext(192, 4)), PrecisionInfeasibleError);
    CHECK_THROWS_AS(compute_gamma_table(-1, kCtx), DomainError);
  }

  TEST_CASE("limit definition") {
    const PrecisionContext ctx(128, 64);
    const BigReal g0 = compute_gamma_table(4, kCtx)[0];

    const BigReal ten = gamma_limit_definition(0, 10, ctx);
    CHECK(ten.to_double() == doctest::Approx(0.6263831609742083).epsilon(1e-14));

    const BigReal e5 = abs(gamma_limit_definition(0, 100000, ctx) - g0);
    const BigReal e6 = abs(gamma_limit_definition(0, 1000000, ctx) - g0);
    CHECK(e6 < BigReal::parse("5.1e-7", 128));
    CHECK(e5 > e6);
    CHECK_THROWS_AS(gamma_limit_definition(0, 1, ctx), DomainError);
  }

  TEST_CASE("limit definition approaches the table for n <= 4") {
    const PrecisionContext ctx(128, 64);
    const GammaTable g = compute_gamma_table(4, kCtx);
    for (int n = 0; n <= 4; ++n) {
      const auto i = static_cast<std::size_t>(n);
      const BigReal e3 = abs(gamma_limit_definition(n, 1000, ctx) - g[i]);
      const BigReal e4 = abs(gamma_limit_definition(n, 10000, ctx) - g[i]);
      const BigReal e5 = abs(gamma_limit_definition(n, 100000, ctx) - g[i]);
      CHECK_MESSAGE(e3 > e4, "n=" << n);
      CHECK_MESSAGE(e4 > e5, "n=" << n);
    }
  }

  TEST_CASE("convention conversion") {
    const GammaTable g = compute_gamma_table(12, kCtx);
    const GammaTable classic = convert_convention(g, Convention::classic);
    CHECK(classic.convention() == Convention::classic);
    CHECK(classic[0] == g[0]);
    CHECK(classic[1] == -g[1]);
    const GammaTable back = convert_convention(classic, Convention::paper);
    for (int n = 0; n <= 12; ++n) CHECK(back[static_cast<std::size_t>(n)] == g[static_cast<std::size_t>(n)]);
    CHECK(parse_convention(to_string(Convention::classic)) == Convention::classic);
    CHECK_THROWS_AS(parse_convention("other"), FormatError);
  }

  TEST_CASE("literature table agrees with the computed table") {
    const GammaTable lit = convert_convention(parse_gamma_table(kLiteratureClassic), Convention::paper);
    const GammaTable g = compute_gamma_table(4, kCtx);
    for (std::size_t n = 0; n <= 4; ++n) {
      CHECK_MESSAGE(scaled_difference(lit[n], g[n], g[n]) < BigReal::parse("1e-33", 256), "n=" << n);
    }
  }

  TEST_CASE("save and load round trip") {
    const GammaTable g = compute_gamma_table(6, kCtx);
    const auto dir = std::filesystem::temp_directory_path() / "zetalaurent_test_tables";
    std::filesystem::create_directories(dir);
    for (const char* name : {"g.json", "g.csv"}) {
      const auto path = dir / name;
      save_table(g, path);
      const GammaTable back = load_table(path);
      CHECK(back.convention() == g.convention());
      CHECK(back.precision_bits() == g.precision_bits());
      REQUIRE(back.n_max() == g.n_max());
      for (std::size_t n = 0; n <= 6; ++n) CHECK(back[n] == g[n]);
    }
    std::filesystem::remove_all(dir);
    CHECK_THROWS_AS(load_table(dir / "missing.json"), IoError);
  }

  TEST_CASE("malformed tables") {
    CHECK_THROWS_AS(parse_gamma_table("# convention=paper\n# precision_bits=64\n# n_max=4\nn,value\n"
                                      "0,1\n1,2\n2,3\n3,4\n"),
                    TableError);
    CHECK_THROWS_AS(parse_gamma_table(R"({"convention":"paper","precision_bits":64,"n_max":4,)"
                                      R"("values":["1","2","3","4"]})"),
                    TableError);
    CHECK_THROWS_AS(parse_gamma_table(R"({"convention":"weird","precision_bits":64,"n_max":0,"values":["1"]})"),
                    FormatError);
    CHECK_THROWS_AS(parse_gamma_table("{not json"), FormatError);
    CHECK_THROWS_AS(parse_gamma_table("# convention=paper\n# precision_bits=64\n# n_max=0\nn,value\n0,abc\n"),
                    FormatError);
  }

  TEST_CASE("table requirements") {
    const GammaTable g = compute_gamma_table(3, kCtx);
    CHECK_NOTHROW(g.require(Convention::paper, 3));
    CHECK_THROWS_AS(g.require(Convention::paper, 4), TableError);
    CHECK_THROWS_AS(g.require(Convention::classic, 2), TableError);
  }
}
