#include "doctest.h"
#include "oracles.hpp"
#include "zetalaurent/errors.hpp"
#include "zetalaurent/partitions.hpp"

using namespace zl;

namespace {

std::vector<oracle::Exponents> collect(unsigned n) {
  std::vector<oracle::Exponents> out;
  for (const auto& k : enumerate_constrained(n)) {
    const auto padded = k.resized(n + 1);
    out.emplace_back(padded.k().begin(), padded.k().end());
  }
  return out;
}

}  // namespace

TEST_SUITE("partitions") {
  TEST_CASE("multiplicity vector bookkeeping") {
    const MultiplicityVector k({2, 0, 1});
    CHECK(k.p() == 3);
    CHECK(k.r() == 5);
    CHECK(k.resized(5).size() == 5);
    CHECK(k.resized(5).r() == 5);
    CHECK(k.resized(3) == k);
    CHECK_THROWS_AS(k.resized(2), DomainError);
    CHECK(MultiplicityVector({1, 0, 0}).resized(1) == MultiplicityVector({1}));
  }

  TEST_CASE("small n") {
    const auto one = collect(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == oracle::Exponents{1, 0});

    const auto three = collect(3);
    const std::vector<oracle::Exponents> expected{{0, 0, 1, 0}, {1, 1, 0, 0}, {3, 0, 0, 0}};
    CHECK(three == expected);

    CHECK(collect(5).size() == 7);
  }

  TEST_CASE("every vector satisfies the constraint and the order is strictly ascending") {
    for (unsigned n = 1; n <= 25; ++n) {
      MultiplicityVector previous;
      bool first = true;
      for (const auto& k : enumerate_constrained(n)) {
        CHECK(k.r() == n);
        const auto padded = k.resized(n + 1);
        if (!first) CHECK(previous < padded);
        previous = padded;
        first = false;
      }
    }
  }

  TEST_CASE("enumeration equals an exhaustive box scan") {
    for (unsigned n = 0; n <= 12; ++n) CHECK_MESSAGE(collect(n) == oracle::box_scan_partitions(n), "n=" << n);
  }

  TEST_CASE("partition counts") {
    CHECK(partition_count(0) == 1);
    CHECK(partition_count(5) == 7);
    CHECK(partition_count(100) == BigInt("190569292"));
    const auto p = partition_counts(80);
    for (unsigned n = 0; n <= 80; ++n) CHECK(p[n] == oracle::dp_partition_count(n));
  }

  TEST_CASE("enumeration length equals p(n)") {
    for (unsigned n : {10U, 30U, 50U}) {
      std::size_t count = 0;
      for ([[maybe_unused]] const auto& k : enumerate_constrained(n)) ++count;
      CHECK(BigInt(static_cast<unsigned long>(count)) == partition_count(n));
    }
  }

  TEST_CASE("summatory counts") {
    CHECK(summatory_partition_count(1) == 1);
    CHECK(summatory_partition_count(3) == 6);
    CHECK(summatory_partition_count(10) == 138);
    CHECK_THROWS_AS(summatory_partition_count(0), DomainError);
  }
}
