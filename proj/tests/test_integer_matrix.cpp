#include <random>

#include "doctest.h"
#include "oracle/oracles.hpp"
#include "sgmtopo/errors.hpp"
#include "sgmtopo/int_matrix.hpp"
#include "sgmtopo/integer.hpp"

using namespace sgmtopo;

TEST_SUITE("integer_matrix") {
  TEST_CASE("parse and print integers") {
    CHECK(parse_integer("  -123 ") == -123);
    CHECK(parse_integer("+7") == 7);
    CHECK(to_string(parse_integer("123456789012345678901234567890")) ==
          "123456789012345678901234567890");
    CHECK_THROWS_AS(parse_integer(""), InvalidInput);
    CHECK_THROWS_AS(parse_integer("1.5"), InvalidInput);
    CHECK_THROWS_AS(parse_integer("12a"), InvalidInput);
  }

  TEST_CASE("floor division and modulus") {
    CHECK(floor_div(-7, 2) == -4);
    CHECK(mod_floor(-7, 2) == 1);
    CHECK(mod_floor(7, -2) == -1);
    CHECK(gcd(-12, 18) == 6);
    CHECK(lcm(4, 6) == 12);
  }

  TEST_CASE("fits_int64") {
    std::int64_t v = 0;
    CHECK(fits_int64(Integer("9223372036854775807"), v));
    CHECK(v == INT64_MAX);
    CHECK_FALSE(fits_int64(Integer("9223372036854775808"), v));
    CHECK(fits_int64(Integer("-9223372036854775808"), v));
  }

  TEST_CASE("factorize multiplies back and agrees with trial division primality") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(2, 200000);
    for (int i = 0; i < 300; ++i) {
      long n = d(rng);
      Integer back = 1;
      for (auto [p, e] : factorize(n)) {
        CHECK(is_prime(p));
        for (unsigned j = 0; j < e; ++j) back *= p;
      }
      CHECK(back == n);
      bool trial = true;
      for (long q = 2; q * q <= n; ++q)
        if (n % q == 0) trial = false;
      CHECK(is_prime(n) == trial);
    }
    Integer big = Integer("1000000007") * Integer("998244353") * 4;
    auto f = factorize(big);
    CHECK(f.size() == 3);
    CHECK(f.at(2) == 2);
  }

  TEST_CASE("matrix algebra") {
    IntMatrix a{{1, 2}, {3, 4}};
    IntMatrix b{{0, 1}, {1, 0}};
    CHECK(a * b == IntMatrix{{2, 1}, {4, 3}});
    CHECK(a.transpose() == IntMatrix{{1, 3}, {2, 4}});
    CHECK(a.hconcat(b) == IntMatrix{{1, 2, 0, 1}, {3, 4, 1, 0}});
    std::vector<Integer> x{1, -1};
    CHECK(a * std::span<const Integer>(x) == std::vector<Integer>{-1, -1});
    CHECK(IntMatrix(0, 3).empty());
    CHECK(IntMatrix(2, 3).is_zero());
    CHECK_THROWS_AS(IntMatrix::from_rows({{1, 2}, {3}}), InvalidInput);
  }

  TEST_CASE("matrix product is associative on random input") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
      auto a = oracle::random_matrix(rng, 3, 4, -5, 5);
      auto b = oracle::random_matrix(rng, 4, 2, -5, 5);
      auto c = oracle::random_matrix(rng, 2, 5, -5, 5);
      CHECK((a * b) * c == a * (b * c));
    }
  }

  TEST_CASE("unimodular generator returns an inverse pair") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
      auto [p, inv] = oracle::random_unimodular(rng, 4, 12);
      CHECK(p * inv == IntMatrix::identity(4));
    }
  }
}
