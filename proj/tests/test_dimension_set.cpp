#include <random>

#include "doctest.h"
#include "oracle/oracles.hpp"
#include "sgmtopo/dimension_set.hpp"
#include "sgmtopo/errors.hpp"

using namespace sgmtopo;

namespace {

FinAbGroup Z() { return FinAbGroup::free(1); }
FinAbGroup C(long m) { return FinAbGroup::cyclic(m); }

LensSpec lens(long m, std::initializer_list<long> l) {
  std::vector<Integer> v;
  for (long x : l) v.push_back(x);
  return LensSpec(m, v);
}

void expect_statuses(const DimensionSetVerdict& v, int lo, int hi, Status s) {
  for (int p = lo; p <= hi; ++p) CHECK_MESSAGE(v.statuses.at(p).status == s, "p = " << p);
}

}  // namespace

TEST_SUITE("dimension_set") {
  TEST_CASE("specs") {
    CHECK_THROWS_AS(lens(1, {1}), InvalidInput);
    CHECK_THROWS_AS(lens(4, {2}), InvalidInput);
    CHECK_THROWS_AS(LensSpec(5, {}), InvalidInput);
    CHECK_THROWS_AS(BundleSpec(1, 0), InvalidInput);
    CHECK(lens(5, {1, 2, 3, 4}).dimension() == 7);
    CHECK(lens(5, {1, 2, 3, 4}).name() == "L_5(1,2,3,4)");
    CHECK(BundleSpec(1, -2).name() == "M_{1,-2}");
  }

  TEST_CASE("codes round trip") {
    for (auto s : {Status::Exists, Status::Obstructed, Status::Unknown}) CHECK(parse_status(to_string(s)) == s);
    for (auto r : {Reason::SquareObstruction, Reason::EulerParity, Reason::Reeb, Reason::EliashbergSp,
                   Reason::Emss, Reason::CatalogFact, Reason::None})
      CHECK(parse_reason(to_string(r)) == r);
    CHECK_THROWS_AS(parse_reason("BOGUS"), InvalidInput);
  }

  TEST_CASE("perfect squares") {
    CHECK(perfect_square(1) == Integer(1));
    CHECK(perfect_square(36) == Integer(6));
    CHECK_FALSE(perfect_square(5).has_value());
    CHECK_THROWS_AS(perfect_square(0), InvalidInput);
    Integer big("340282366920938463463374607431768211456");  // 2^128
    CHECK(perfect_square(big) == Integer("18446744073709551616"));
    CHECK_FALSE(perfect_square(big + 1).has_value());
  }

  TEST_CASE("square obstruction") {
    auto l5 = lens_homology(lens(5, {1, 1, 1, 1}));
    CHECK(square_obstruction(l5, 7, true).outcome == SquareOutcome::AppliesObstructed);
    auto rp5 = GradedGroup::from_list({Z(), C(2), {}, C(2), {}, Z()});
    CHECK(square_obstruction(rp5, 5, true).outcome == SquareOutcome::AppliesPasses);
    CHECK(square_obstruction(bundle_homology(BundleSpec(1, 4)), 7, true).outcome ==
          SquareOutcome::AppliesPasses);
    CHECK(square_obstruction(l5, 7, false).outcome == SquareOutcome::NotApplicable);
    CHECK(square_obstruction(sphere_homology(6), 6, true).outcome == SquareOutcome::NotApplicable);
    CHECK(square_obstruction(sphere_homology(3), 3, true).outcome == SquareOutcome::NotApplicable);
    auto torus_like = GradedGroup(5, {{0, Z()}, {1, Z()}, {5, Z()}});
    CHECK(square_obstruction(torus_like, 5, true).outcome == SquareOutcome::NotApplicable);
    auto broken = GradedGroup(7, {{0, Z()}, {3, Z()}, {7, Z()}});
    CHECK_THROWS_AS(square_obstruction(broken, 7, true), InconsistencyError);
  }

  TEST_CASE("square obstruction never fires on doubles") {
    std::mt19937_64 rng(307);
    for (int i = 0; i < 200; ++i) {
      auto g = oracle::random_finite_group(rng, 60);
      auto t = oracle::random_finite_group(rng, 3600);
      for (int n : {5, 7, 9}) {
        const int k = (n - 1) / 2;
        auto h = GradedGroup(n, {{0, Z()}, {k, t}, {n, Z()}});
        bool dbl = is_double(t).has_value();
        auto out = square_obstruction(h, n, true).outcome;
        if (dbl) CHECK(out == SquareOutcome::AppliesPasses);
        CHECK((out == SquareOutcome::AppliesObstructed) == !perfect_square(*order(t)).has_value());
        auto hd = GradedGroup(n, {{0, Z()}, {k, direct_sum(g, g)}, {n, Z()}});
        CHECK(square_obstruction(hd, n, true).outcome == SquareOutcome::AppliesPasses);
      }
    }
  }

  TEST_CASE("euler parity") {
    auto cp2 = GradedGroup::from_list({Z(), {}, Z(), {}, Z()});
    auto v = euler_parity_obstruction(cp2, 4);
    CHECK(v.euler_characteristic == 3);
    CHECK(v.obstructed == std::vector<int>{1, 2, 3});
    CHECK(euler_parity_obstruction(sphere_homology(2), 2).obstructed.empty());
    CHECK(euler_parity_obstruction(sphere_homology(7), 7).obstructed.empty());
    auto verdict = classify_homology(cp2, 4, true);
    for (int p = 1; p <= 3; ++p) CHECK(verdict.statuses.at(p).reason == Reason::EulerParity);
    CHECK(verdict.statuses.at(4).status == Status::Unknown);
  }

  TEST_CASE("lens homology and stable parallelizability") {
    CHECK(lens_homology(lens(5, {1, 2, 3, 4})) ==
          GradedGroup::from_list({Z(), C(5), {}, C(5), {}, C(5), {}, Z()}));
    CHECK(lens_homology(lens(2, {1})) == GradedGroup::from_list({Z(), Z()}));
    CHECK(emss_stably_parallelizable(lens(5, {1, 2, 3, 4})) == true);
    CHECK(emss_stably_parallelizable(lens(5, {1, 1, 1, 1})) == false);
    CHECK(emss_stably_parallelizable(lens(3, {1})) == true);
    CHECK(emss_stably_parallelizable(lens(3, {1, 2})) == true);
    CHECK(emss_stably_parallelizable(lens(3, {1, 1, 1, 1})) == false);  // k = 3 >= m
    CHECK_FALSE(emss_stably_parallelizable(lens(4, {1, 1, 1, 1})).has_value());
    CHECK_FALSE(emss_stably_parallelizable(lens(2, {1, 1, 1, 1})).has_value());
    CHECK_FALSE(emss_stably_parallelizable(lens(5, {6, 1, 1, 1})).has_value());
  }

  TEST_CASE("lens verdicts") {
    auto a = lens_dimension_set(lens(5, {1, 1, 1, 1}));
    expect_statuses(a, 1, 6, Status::Obstructed);
    for (int p = 1; p <= 6; ++p) CHECK(a.statuses.at(p).reason == Reason::SquareObstruction);
    CHECK(a.statuses.at(7).status == Status::Obstructed);
    CHECK(a.statuses.at(7).reason == Reason::Emss);
    CHECK(a.summary == std::set<int>{});

    auto b = lens_dimension_set(lens(5, {1, 2, 3, 4}));
    CHECK(b.summary == std::set<int>{7});
    CHECK(b.statuses.at(7).reason == Reason::Emss);

    auto c = lens_dimension_set(lens(4, {1, 1, 1, 1}));
    CHECK(c.statuses.at(1).status == Status::Obstructed);
    CHECK(c.statuses.at(1).reason == Reason::Reeb);
    expect_statuses(c, 2, 7, Status::Unknown);
    CHECK_FALSE(c.summary.has_value());

    auto d = lens_dimension_set(lens(4, {1, 1, 1, 1}), true);
    CHECK(d.statuses.at(7).status == Status::Exists);
    CHECK(d.statuses.at(7).reason == Reason::EliashbergSp);
    CHECK_THROWS_AS(lens_dimension_set(lens(5, {1, 1, 1, 1}), true), InvalidInput);
    CHECK_NOTHROW(lens_dimension_set(lens(5, {1, 1, 1, 1}), false));
  }

  TEST_CASE("lens invariants") {
    for (long m = 2; m <= 30; ++m) {
      bool square_free = true;
      for (long q = 2; q * q <= m; ++q)
        if (m % (q * q) == 0) square_free = false;
      for (int k = 0; k <= 5; ++k) {
        std::vector<Integer> l(static_cast<std::size_t>(k + 1), 1);
        auto v = lens_dimension_set(LensSpec(m, l));
        const int n = 2 * k + 1;
        CHECK(v.statuses.size() == static_cast<std::size_t>(n));
        for (int p = 1; p < n; ++p) CHECK(v.statuses.at(p).status != Status::Exists);
        if (n > 1) CHECK(v.statuses.at(1).status == Status::Obstructed);
        if (k % 2 == 1 && k >= 3 && square_free) expect_statuses(v, 1, n - 1, Status::Obstructed);
      }
    }
  }

  TEST_CASE("bundle verdicts") {
    CHECK(bundle_homology(BundleSpec(1, 2)).at(3) == C(2));
    CHECK(bundle_homology(BundleSpec(3, -6)).at(3) == C(6));
    CHECK(bundle_homology(BundleSpec(0, 1)).at(3).is_trivial());

    CHECK(bundle_dimension_set(BundleSpec(1, 2)).summary == std::set<int>{7});
    CHECK(bundle_dimension_set(BundleSpec(1, 3)).summary == std::set<int>{});
    auto v = bundle_dimension_set(BundleSpec(2, 4));
    CHECK(v.statuses.at(7).status == Status::Exists);
    CHECK(v.statuses.at(1).status == Status::Obstructed);
    expect_statuses(v, 2, 6, Status::Unknown);
    CHECK_FALSE(v.summary.has_value());
  }

  TEST_CASE("bundle p = 7 depends only on 2m mod n") {
    for (long n = -12; n <= 12; ++n) {
      if (n == 0) continue;
      for (long m = -15; m <= 15; ++m) {
        auto v = bundle_dimension_set(BundleSpec(m, n));
        bool divides = (2 * m) % n == 0;
        CHECK((v.statuses.at(7).status == Status::Exists) == divides);
        auto shifted = bundle_dimension_set(BundleSpec(m + 3 * n, n));
        CHECK(shifted.statuses.at(7).status == v.statuses.at(7).status);
        for (int p = 1; p < 7; ++p) CHECK(v.statuses.at(p).status != Status::Exists);
        if (std::abs(n) > 1) CHECK(v.statuses.at(1).status == Status::Obstructed);
        if (std::abs(n) == 1) CHECK(v.statuses.at(1).status == Status::Unknown);
      }
    }
  }

  TEST_CASE("catalog") {
    auto rp5 = catalog_lookup("RP5");
    CHECK(rp5.homology == GradedGroup::from_list({Z(), C(2), {}, C(2), {}, Z()}));
    CHECK(rp5.orientable);
    REQUIRE(rp5.facts.size() == 1);
    CHECK(rp5.facts[0].provenance.find("covering-space Euler argument") != std::string::npos);
    auto v = classify(rp5);
    expect_statuses(v, 1, 4, Status::Obstructed);
    for (int p = 1; p <= 4; ++p) CHECK(v.statuses.at(p).reason == Reason::CatalogFact);
    CHECK(v.statuses.at(5).status == Status::Unknown);

    auto s7 = classify(catalog_lookup("S^7"));
    CHECK(s7.summary == std::set<int>{1, 2, 3, 4, 5, 6, 7});
    CHECK(catalog_lookup("S^7").homology == sphere_homology(7));

    CHECK(classify(catalog_lookup("L_5(1,2,3,4)")).summary == std::set<int>{7});
    CHECK(classify(catalog_lookup("L5(1,1,1,1)")).summary == std::set<int>{});
    CHECK(classify(catalog_lookup("M_{1,2}")).summary == std::set<int>{7});
    CHECK(classify(catalog_lookup("M(1,3)")).summary == std::set<int>{});
    CHECK_THROWS_AS(catalog_lookup("K3"), InvalidInput);
    CHECK_THROWS_AS(catalog_lookup("S^0"), InvalidInput);
    CHECK_THROWS_AS(catalog_lookup("L_4(2)"), InvalidInput);

    CatalogEntry clash = catalog_lookup("L_5(1,1,1,1)");
    clash.facts.push_back({"contradiction", "test", {{2, Status::Exists}}});
    CHECK_THROWS_AS(classify(clash), InconsistencyError);
  }

  TEST_CASE("every p is covered with a reason code") {
    for (const char* name : {"S^3", "RP5", "L_7(1,1,1,1)", "M_{2,4}", "L_3(1)"}) {
      auto v = classify(catalog_lookup(name));
      CHECK(static_cast<int>(v.statuses.size()) == v.dimension);
      for (const auto& [p, st] : v.statuses) {
        CHECK(!to_string(st.reason).empty());
        if (st.status == Status::Unknown) CHECK(st.reason == Reason::None);
        else CHECK(st.reason != Reason::None);
      }
    }
  }
}
