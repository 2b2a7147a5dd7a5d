#include <cstdint>

#include "doctest.h"

#include "inquest/bigint.hpp"
#include "inquest/errors.hpp"

using inquest::BigUint;

TEST_CASE("biguint default is zero") {
  BigUint z;
  CHECK(z.to_string() == "0");
  CHECK(z.fits_u64());
  CHECK(z.to_u64() == 0);
  CHECK(z == BigUint(0));
}

TEST_CASE("biguint round-trips 64-bit values") {
  const std::uint64_t values[] = {1,
                                  999999999,
                                  1000000000,
                                  1000000001,
                                  123456789012345ull,
                                  UINT64_MAX};
  for (std::uint64_t v : values) {
    BigUint b(v);
    CHECK(b.fits_u64());
    CHECK(b.to_u64() == v);
    CHECK(b.to_string() == std::to_string(v));
  }
}

TEST_CASE("biguint addition carries across limbs") {
  BigUint a(999999999);
  a += BigUint(1);
  CHECK(a.to_string() == "1000000000");

  BigUint b(UINT64_MAX);
  b += BigUint(UINT64_MAX);
  CHECK(b.to_string() == "36893488147419103230");
  CHECK_FALSE(b.fits_u64());
  CHECK_THROWS_AS(b.to_u64(), inquest::RangeError);
}

TEST_CASE("biguint accumulates a long sum") {
  BigUint total;
  for (std::uint64_t i = 1; i <= 1000; ++i) total += BigUint(i);
  CHECK(total == BigUint(500500));
  CHECK(total != BigUint(500501));
}

TEST_CASE("biguint addition matches u64 addition on random pairs") {
  std::uint64_t x = 0x243F6A8885A308D3ull;  // simple LCG-style scramble
  for (int i = 0; i < 200; ++i) {
    x = x * 6364136223846793005ull + 1442695040888963407ull;
    const std::uint64_t a = x >> 32;
    x = x * 6364136223846793005ull + 1442695040888963407ull;
    const std::uint64_t b = x >> 32;
    BigUint sum = BigUint(a) + BigUint(b);
    CHECK(sum.to_u64() == a + b);
  }
}
