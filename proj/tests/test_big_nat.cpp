#include <catch2/catch_amalgamated.hpp>

#include "fintopo/big_nat.hpp"

using fintopo::BigNat;

TEST_CASE("construction and decimal output", "[bignat]") {
  REQUIRE(BigNat().to_string() == "0");
  REQUIRE(BigNat(0).to_string() == "0");
  REQUIRE(BigNat(7).to_string() == "7");
  REQUIRE(BigNat(1'000'000'000).to_string() == "1000000000");
  REQUIRE(BigNat(18446744073709551615ull).to_string() ==
          "18446744073709551615");
}

TEST_CASE("powers", "[bignat]") {
  REQUIRE(BigNat::pow(0, 0).to_string() == "1");
  REQUIRE(BigNat::pow(0, 5).to_string() == "0");
  REQUIRE(BigNat::pow(5, 0).to_string() == "1");
  REQUIRE(BigNat::pow(1, 1000).to_string() == "1");
  REQUIRE(BigNat::pow(2, 10).to_string() == "1024");
  REQUIRE(BigNat::pow(2, 64).to_string() == "18446744073709551616");
  REQUIRE(BigNat::pow(10, 20).to_string() == "100000000000000000000");
  REQUIRE(BigNat::pow(3, 40).to_string() == "12157665459056928801");
}

TEST_CASE("multiplication carries across limbs", "[bignat]") {
  BigNat x(999'999'999);
  x *= 2;
  REQUIRE(x.to_string() == "1999999998");
  BigNat y(1);
  y *= 1'000'000'000'000'000'000ull;  // multiplier larger than one limb
  REQUIRE(y.to_string() == "1000000000000000000");
  y *= 0;
  REQUIRE(y.is_zero());
}

TEST_CASE("comparison", "[bignat]") {
  REQUIRE(BigNat(3) == BigNat(3));
  REQUIRE(BigNat(3) < BigNat(4));
  REQUIRE(BigNat(4) <= BigNat(4));
  REQUIRE(BigNat::pow(2, 70) < BigNat::pow(2, 71));
  REQUIRE(BigNat(999'999'999) < BigNat(1'000'000'000));
  REQUIRE(BigNat().cmp(BigNat(1)) == -1);
  REQUIRE(BigNat(1).cmp(BigNat()) == 1);
}

TEST_CASE("pow satisfies the recurrence", "[bignat]") {
  for (std::uint64_t base = 0; base <= 12; ++base) {
    for (std::uint64_t exp = 0; exp <= 24; ++exp) {
      BigNat step = BigNat::pow(base, exp);
      step *= base;
      REQUIRE(step == BigNat::pow(base, exp + 1));
    }
  }
}
