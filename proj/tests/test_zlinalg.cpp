#include <random>

#include "doctest.h"
#include "oracle/oracles.hpp"
#include "sgmtopo/errors.hpp"
#include "sgmtopo/zlinalg.hpp"

using namespace sgmtopo;

namespace {

void check_snf(const IntMatrix& a) {
  auto r = smith_normal_form(a);
  REQUIRE(r.U * a * r.V == r.S);
  CHECK(is_unimodular(r.U));
  CHECK(is_unimodular(r.V));
  for (std::size_t i = 0; i < r.S.rows(); ++i)
    for (std::size_t j = 0; j < r.S.cols(); ++j)
      if (i != j) CHECK(r.S(i, j) == 0);
  auto d = r.diagonal();
  for (const auto& x : d) CHECK(x >= 0);
  // s_{i-1} | s_i, so zeros can only trail
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (d[i - 1] == 0) CHECK(d[i] == 0);
    else CHECK(d[i] % d[i - 1] == 0);
  }
  CHECK(d == oracle::snf_diagonal(a));
  CHECK(r.rank() == oracle::rank_by_minors(a));
}

// Reduce column-vector entries modulo the torsion invariants of g.
IntMatrix reduce_rows(const FinAbGroup& g, IntMatrix m) {
  for (std::size_t i = 0; i < g.torsion_generator_count(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = mod_floor(m(i, j), g.invariant_factors()[i]);
  return m;
}

}  // namespace

TEST_SUITE("zlinalg") {
  TEST_CASE("smith normal form examples") {
    check_snf(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    auto r = smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    CHECK(r.diagonal() == std::vector<Integer>{2, 6, 12});
    CHECK(smith_normal_form(IntMatrix::identity(3)).S == IntMatrix::identity(3));
    check_snf(IntMatrix(0, 3));
    check_snf(IntMatrix(2, 0));
    check_snf(IntMatrix(3, 2));
    check_snf(IntMatrix{{-5}});
  }

  TEST_CASE("smith normal form against the minor-gcd oracle") {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int i = 0; i < 300; ++i) check_snf(oracle::random_matrix(rng, dim(rng), dim(rng), -9, 9));
    for (int i = 0; i < 50; ++i) {
      // low-rank products
      auto a = oracle::random_matrix(rng, 4, 2, -6, 6) * oracle::random_matrix(rng, 2, 5, -6, 6);
      check_snf(a);
    }
  }

  TEST_CASE("smith normal form with large entries") {
    IntMatrix a{{Integer("123456789012345678901"), Integer("2")},
                {Integer("-98765432109876543210"), Integer("4")}};
    check_snf(a);
  }

  TEST_CASE("hermite normal form") {
    std::mt19937_64 rng(103);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int i = 0; i < 200; ++i) {
      auto a = oracle::random_matrix(rng, dim(rng), dim(rng), -9, 9);
      auto h = hermite_normal_form(a);
      REQUIRE(h.U * a == h.H);
      CHECK(is_unimodular(h.U));
      std::size_t last_pivot = 0;
      bool seen_zero_row = false;
      for (std::size_t r = 0; r < h.H.rows(); ++r) {
        std::size_t c = 0;
        while (c < h.H.cols() && h.H(r, c) == 0) ++c;
        if (c == h.H.cols()) {
          seen_zero_row = true;
          continue;
        }
        CHECK_FALSE(seen_zero_row);
        if (r > 0) CHECK(c > last_pivot);
        last_pivot = c;
        CHECK(h.H(r, c) > 0);
        for (std::size_t above = 0; above < r; ++above) {
          CHECK(h.H(above, c) >= 0);
          CHECK(h.H(above, c) < h.H(r, c));
        }
      }
    }
  }

  TEST_CASE("ranks and determinants") {
    std::mt19937_64 rng(107);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int i = 0; i < 200; ++i) {
      auto a = oracle::random_matrix(rng, dim(rng), dim(rng), -4, 4);
      std::size_t r = rank_over_rationals(a);
      CHECK(r == oracle::rank_by_minors(a));
      CHECK(image_rank(a) == r);
      CHECK(kernel_rank(a) == a.cols() - r);
      for (long p : {2, 3, 5, 7}) CHECK(rank_mod_prime(a, p) <= r);
      auto k = kernel_basis(a);
      CHECK(k.cols() == a.cols() - r);
      CHECK((a * k).is_zero());
      if (a.rows() == a.cols()) {
        std::vector<std::vector<Integer>> rows(a.rows(), std::vector<Integer>(a.cols()));
        for (std::size_t x = 0; x < a.rows(); ++x)
          for (std::size_t y = 0; y < a.cols(); ++y) rows[x][y] = a(x, y);
        CHECK(determinant(a) == oracle::laplace_det(rows));
      }
    }
    CHECK(rank_mod_prime(IntMatrix{{2, 0}, {0, 3}}, 2) == 1);
    CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), InvalidInput);
  }

  TEST_CASE("unimodular inverse") {
    std::mt19937_64 rng(109);
    for (int i = 0; i < 100; ++i) {
      auto [p, inv] = oracle::random_unimodular(rng, 5, 15);
      CHECK(unimodular_inverse(p) == inv);
    }
    CHECK_THROWS_AS(unimodular_inverse(IntMatrix{{2}}), InvalidInput);
  }

  TEST_CASE("cokernel and presentations") {
    CHECK(cokernel(IntMatrix{{2, 0}, {0, 3}}) == FinAbGroup::cyclic(6));
    CHECK(cokernel(IntMatrix(2, 0)) == FinAbGroup::free(2));
    CHECK(cokernel(IntMatrix{{0}}) == FinAbGroup::free(1));
    std::mt19937_64 rng(113);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    for (int i = 0; i < 150; ++i) {
      auto rel = oracle::random_matrix(rng, dim(rng), dim(rng), -6, 6);
      auto pres = present_cokernel(rel);
      CHECK(pres.group == cokernel(rel));
      auto d = oracle::snf_diagonal(rel);
      std::vector<Integer> torsion;
      for (const auto& x : d)
        if (x > 1) torsion.push_back(x);
      CHECK(pres.group.invariant_factors() == torsion);
      CHECK(pres.group.rank() == rel.rows() - oracle::rank_by_minors(rel));
      // relations die, and the two coordinate changes are mutually inverse
      CHECK(reduce_rows(pres.group, pres.to_canonical * rel).is_zero());
      CHECK(reduce_rows(pres.group, pres.to_canonical * pres.from_canonical) ==
            reduce_rows(pres.group, IntMatrix::identity(pres.group.generator_count())));
    }
  }

  TEST_CASE("lattice hermite basis is independent of the spanning set") {
    std::mt19937_64 rng(127);
    for (int i = 0; i < 100; ++i) {
      auto gens = oracle::random_matrix(rng, 3, 3, -5, 5);
      auto [p, inv] = oracle::random_unimodular(rng, 3, 10);
      // same lattice: right-multiply by a unimodular matrix, and add a redundant column
      auto other = (gens * p).hconcat(gens * IntMatrix{{1}, {1}, {0}});
      CHECK(lattice_hermite_basis(gens) == lattice_hermite_basis(other));
    }
  }
}
