#include <random>

#include "doctest.h"
#include "oracle/oracles.hpp"
#include "sgmtopo/errors.hpp"
#include "sgmtopo/homology.hpp"

using namespace sgmtopo;

namespace {

FinAbGroup Z(std::size_t r = 1) { return FinAbGroup::free(r); }
FinAbGroup C(long m) { return FinAbGroup::cyclic(m); }

struct KnownComplex {
  ChainComplex complex;
  std::vector<std::size_t> free_ranks;
  std::vector<std::vector<long>> torsion;
};

// Direct sum of elementary complexes (Z, Z --t--> Z, Z --1--> Z) with known
// homology, disguised by a random change of basis in every degree.
KnownComplex random_known_complex(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> top_d(0, 4), small(0, 2), tors(2, 12);
  const int n = top_d(rng);
  std::vector<std::size_t> free_ranks(n + 1);
  std::vector<std::vector<long>> torsion(n + 1);
  std::vector<std::size_t> acyclic(n + 1);
  for (int d = 0; d <= n; ++d) {
    free_ranks[d] = small(rng);
    if (d < n) {
      for (int i = small(rng); i > 0; --i) torsion[d].push_back(tors(rng));
      acyclic[d] = small(rng);
    }
  }
  // layout in degree d: [free | torsion targets | acyclic targets | torsion sources(d-1) | acyclic sources(d-1)]
  std::vector<std::size_t> cells(n + 1);
  for (int d = 0; d <= n; ++d) {
    cells[d] = free_ranks[d] + torsion[d].size() + acyclic[d];
    if (d > 0) cells[d] += torsion[d - 1].size() + acyclic[d - 1];
  }
  std::vector<std::pair<IntMatrix, IntMatrix>> basis;
  for (int d = 0; d <= n; ++d) basis.push_back(oracle::random_unimodular(rng, cells[d], 12));
  std::map<int, IntMatrix> boundaries;
  for (int d = 1; d <= n; ++d) {
    IntMatrix b(cells[d - 1], cells[d]);
    std::size_t tgt = free_ranks[d - 1];
    std::size_t src = free_ranks[d] + torsion[d].size() + acyclic[d];
    for (long t : torsion[d - 1]) b(tgt++, src++) = t;
    for (std::size_t i = 0; i < acyclic[d - 1]; ++i) b(tgt++, src++) = 1;
    boundaries[d] = basis[d - 1].first * b * basis[d].second;
  }
  return {ChainComplex(cells, boundaries), free_ranks, torsion};
}

}  // namespace

TEST_SUITE("homology") {
  TEST_CASE("coefficients") {
    CHECK(Coefficients::parse("Z") == Coefficients::integers());
    CHECK(Coefficients::parse("Q") == Coefficients::rationals());
    CHECK(Coefficients::parse("Fp:7") == Coefficients::prime_field(7));
    CHECK(Coefficients::prime_field(7).to_string() == "Fp:7");
    CHECK_THROWS_AS(Coefficients::parse("Fp:4"), InvalidInput);
    CHECK_THROWS_AS(Coefficients::parse("R"), InvalidInput);
    CHECK_THROWS_AS(Coefficients::prime_field(1), InvalidInput);
  }

  TEST_CASE("complex validation") {
    CHECK_THROWS_AS(ChainComplex({1, 1}, {{1, IntMatrix(2, 1)}}), InvalidInput);
    CHECK_THROWS_AS(ChainComplex({1, 1, 1}, {{1, IntMatrix{{1}}}, {2, IntMatrix{{1}}}}), InvalidInput);
    CHECK_THROWS_AS(ChainComplex({1}, {{3, IntMatrix(1, 1)}}), InvalidInput);
    CHECK_THROWS_AS(ChainComplex({}, {}), InvalidInput);
  }

  TEST_CASE("circle and projective plane") {
    ChainComplex circle({1, 1}, {{1, IntMatrix{{0}}}});
    auto h = homology(circle, Coefficients::integers());
    CHECK(h.at(0) == Z());
    CHECK(h.at(1) == Z());
    ChainComplex rp2({1, 1, 1}, {{1, IntMatrix{{0}}}, {2, IntMatrix{{2}}}});
    auto hz = homology(rp2, Coefficients::integers());
    CHECK(hz.at(1) == C(2));
    CHECK(hz.at(2).is_trivial());
    auto h2 = homology(rp2, Coefficients::prime_field(2));
    CHECK(h2.at(1) == Z());
    CHECK(h2.at(2) == Z());
    auto hq = homology(rp2, Coefficients::rationals());
    CHECK(hq.at(1).is_trivial());
  }

  TEST_CASE("lens model") {
    auto h = homology(lens_chain_complex(5, 3), Coefficients::integers());
    CHECK(h == GradedGroup::from_list({Z(), C(5), {}, C(5), {}, C(5), {}, Z()}));
    auto hq = homology(lens_chain_complex(5, 3), Coefficients::rationals());
    CHECK(hq.at(0) == Z());
    CHECK(hq.at(7) == Z());
    CHECK(hq.at(3).is_trivial());
    for (long m = 2; m <= 12; ++m)
      for (int k = 0; k <= 4; ++k) {
        auto hl = homology(lens_chain_complex(m, k), Coefficients::integers());
        const int n = 2 * k + 1;
        CHECK(hl.top_degree() == n);
        for (int i = 0; i <= n; ++i) {
          FinAbGroup expect = (i == 0 || i == n) ? Z() : (i % 2 == 1 ? C(m) : FinAbGroup());
          CHECK(hl.at(i) == expect);
        }
      }
  }

  TEST_CASE("random complexes with known homology") {
    std::mt19937_64 rng(211);
    for (int iter = 0; iter < 200; ++iter) {
      auto kc = random_known_complex(rng);
      const auto& cx = kc.complex;
      auto hz = homology(cx, Coefficients::integers());
      auto hq = homology(cx, Coefficients::rationals());
      long long chi_cells = 0;
      for (int d = 0; d <= cx.max_degree(); ++d) {
        std::vector<Integer> t(kc.torsion[d].begin(), kc.torsion[d].end());
        CHECK(hz.at(d) == FinAbGroup::canonicalize(kc.free_ranks[d], t));
        CHECK(hq.at(d) == Z(kc.free_ranks[d]));
        chi_cells += (d % 2 ? -1 : 1) * static_cast<long long>(cx.cells(d));
        for (long p : {2, 3, 5}) {
          auto hp = homology(cx, Coefficients::prime_field(p));
          std::size_t expect = kc.free_ranks[d];
          for (long x : kc.torsion[d]) expect += (x % p == 0);
          if (d > 0)
            for (long x : kc.torsion[d - 1]) expect += (x % p == 0);
          CHECK(hp.at(d).rank() == expect);
          CHECK(hp.at(d).is_finite() == (expect == 0));
          CHECK(change_coefficients(hz, Coefficients::prime_field(p)).at(d) == hp.at(d));
        }
      }
      CHECK(euler_characteristic(hz) == chi_cells);
      CHECK(rationalize(hz) == hq);
    }
  }

  TEST_CASE("euler characteristic") {
    CHECK(euler_characteristic(sphere_homology(7)) == 0);
    CHECK(euler_characteristic(GradedGroup::from_list({Z(), {}, Z(), {}, Z()})) == 3);
    CHECK(euler_characteristic(GradedGroup::from_list({Z()})) == 1);
  }

  TEST_CASE("graded group validation") {
    CHECK_THROWS_AS(GradedGroup(2, {{3, C(2)}}), InvalidInput);
    CHECK_THROWS_AS(GradedGroup(2, {{1, C(2)}}, Coefficients::rationals()), InvalidInput);
    CHECK(GradedGroup(2, {{1, FinAbGroup()}}) == GradedGroup(2, {}));
    CHECK_THROWS_AS(change_coefficients(GradedGroup(1, {}, Coefficients::rationals()),
                                        Coefficients::integers()),
                    InvalidInput);
  }

  TEST_CASE("sphere and ball predicates") {
    auto z = Coefficients::integers(), q = Coefficients::rationals();
    auto rp5 = GradedGroup::from_list({Z(), C(2), {}, C(2), {}, Z()});
    CHECK(is_homology_sphere(GradedGroup::from_list({Z(), {}, {}, Z()}), 3, z));
    CHECK_FALSE(is_homology_sphere(rp5, 5, z));
    CHECK(is_homology_sphere(rationalize(rp5), 5, q));
    CHECK(is_homology_sphere(rp5, 5, q));
    CHECK(is_homology_sphere(sphere_homology(0), 0, z));
    CHECK(sphere_homology(0).at(0) == Z(2));
    CHECK_THROWS_AS(is_homology_sphere(rp5, -1, z), InvalidInput);
    auto disk = GradedGroup::from_list({Z()});
    CHECK(is_homology_ball(disk, 3, z));
    auto z3 = GradedGroup::from_list({Z(), C(3)});
    CHECK(is_homology_ball(z3, 2, q));
    CHECK_FALSE(is_homology_ball(z3, 2, z));
    CHECK(is_homology_ball(z3, 2, Coefficients::prime_field(2)));
    CHECK_FALSE(is_homology_ball(z3, 2, Coefficients::prime_field(3)));
    CHECK_FALSE(is_homology_ball(sphere_homology(1), 1, z));
    CHECK_THROWS_AS(is_homology_ball(disk, -1, z), InvalidInput);
  }

  TEST_CASE("boundary sphere consistency") {
    auto z = Coefficients::integers(), q = Coefficients::rationals();
    auto disk = GradedGroup::from_list({Z()});
    CHECK(boundary_sphere_consistency(disk, 4, sphere_homology(3), z).holds);
    auto torus = GradedGroup::from_list({Z(), Z(2), Z()});
    auto bad = boundary_sphere_consistency(disk, 3, torus, z);
    CHECK_FALSE(bad.holds);
    CHECK_FALSE(bad.violation.empty());
    auto z3 = GradedGroup::from_list({Z(), C(3)});
    CHECK(boundary_sphere_consistency(z3, 2, sphere_homology(1, q), q).holds);
    // not a ball: implication is vacuous
    CHECK(boundary_sphere_consistency(torus, 3, torus, z).holds);
  }

  TEST_CASE("integral sphere implies rational sphere") {
    std::mt19937_64 rng(223);
    for (int i = 0; i < 200; ++i) {
      auto kc = random_known_complex(rng);
      auto h = homology(kc.complex, Coefficients::integers());
      int n = kc.complex.max_degree();
      if (is_homology_sphere(h, n, Coefficients::integers()))
        CHECK(is_homology_sphere(rationalize(h), n, Coefficients::rationals()));
    }
  }
}
