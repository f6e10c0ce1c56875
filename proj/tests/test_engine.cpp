#include <algorithm>

#include "doctest.h"
#include "slat/congruence.hpp"
#include "slat/construct.hpp"
#include "slat/engine.hpp"

using namespace slat;

// S7 ids: o=0 z_l=1 z_r=2 a_l=3 m=4 a_r=5 t=6

TEST_CASE("swing sequences in S7") {
  PlanarLattice L = fixture("S7");

  SUBCASE("direct down-perspectivity wins") {
    auto w = find_swing_sequence(L, {3, 6}, {0, 2});
    REQUIRE(w.has_value());
    REQUIRE(w->steps.size() == 1);
    CHECK(w->steps[0] == StepKind::DownPersp);
    CHECK(w->intervals.front() == PrimeInterval{3, 6});
    CHECK(w->intervals.back() == PrimeInterval{0, 2});
  }

  SUBCASE("swing then descent") {
    auto w = find_swing_sequence(L, {3, 6}, {1, 3});
    REQUIRE(w.has_value());
    REQUIRE(w->steps.size() == 2);
    CHECK(w->steps[0] == StepKind::Swing);
    CHECK(w->steps[1] == StepKind::DownPersp);
    CHECK(w->intervals[1] == PrimeInterval{4, 6});

    auto w2 = find_swing_sequence(L, {3, 6}, {2, 5});
    REQUIRE(w2.has_value());
    CHECK(w2->steps ==
          std::vector<StepKind>{StepKind::Swing, StepKind::DownPersp});
  }

  SUBCASE("initial up-perspectivity") {
    auto w = find_swing_sequence(L, {0, 1}, {5, 6});
    REQUIRE(w.has_value());
    REQUIRE(w->steps.size() == 1);
    CHECK(w->steps[0] == StepKind::UpPersp);
  }

  SUBCASE("uncollapsed targets have no witness") {
    // con(a_l,t) does not collapse [a_r,t] or [o,z_l]
    CHECK_FALSE(find_swing_sequence(L, {3, 6}, {5, 6}).has_value());
    CHECK_FALSE(find_swing_sequence(L, {3, 6}, {0, 1}).has_value());
  }

  SUBCASE("trivial sequence") {
    auto w = find_swing_sequence(L, {4, 6}, {4, 6});
    REQUIRE(w.has_value());
    CHECK(w->steps.empty());
    CHECK(w->intervals == std::vector<PrimeInterval>{{4, 6}});
  }
}

TEST_CASE("prime projectivity search") {
  PlanarLattice n5 = fixture("N5");  // o=0 u=1 v=2 w=3 i=4
  auto w = find_prime_projectivity(n5, {3, 4}, {0, 1});
  REQUIRE(w.has_value());
  REQUIRE(w->steps.size() == 1);
  CHECK(w->steps[0] == StepKind::PrimeDown);

  // [u,i] reaches [v,w] in one prime-down even though no perspectivity holds
  auto w2 = find_prime_projectivity(n5, {1, 4}, {2, 3});
  REQUIRE(w2.has_value());
  CHECK(w2->steps == std::vector<StepKind>{StepKind::PrimeDown});

  // con(v,w) collapses nothing else: no route back up from [v,w] to [u,i]
  CHECK_FALSE(find_prime_projectivity(n5, {2, 3}, {1, 4}).has_value());

  PlanarLattice m3 = fixture("M3");
  auto w3 = find_prime_projectivity(m3, {0, 1}, {2, 4});
  REQUIRE(w3.has_value());
  CHECK(w3->steps.size() == 1);
}

TEST_CASE("witness validation") {
  PlanarLattice L = fixture("S7");
  StepSequence good{{{3, 6}, {1, 4}, {0, 2}},
                    {StepKind::DownPersp, StepKind::DownPersp}};
  CHECK(validate_witness(L, good));

  StepSequence bad = good;
  bad.steps[1] = StepKind::Swing;
  std::string why;
  CHECK_FALSE(validate_witness(L, bad, &why));
  CHECK_FALSE(why.empty());

  StepSequence mislabeled{{{3, 6}, {5, 6}}, {StepKind::DownPersp}};
  CHECK_FALSE(validate_witness(L, mislabeled));
}

TEST_CASE("normalization shortens and checks form") {
  PlanarLattice L = fixture("S7");
  // a valid but redundant route: [a_l,t] -> [z_l,m] -> [o,z_r]
  StepSequence detour{{{3, 6}, {1, 4}, {0, 2}},
                      {StepKind::DownPersp, StepKind::DownPersp}};
  REQUIRE(validate_witness(L, detour));
  StepSequence norm = normalize_witness(L, detour);
  CHECK(norm.steps.size() == 1);
  CHECK(norm.intervals.front() == PrimeInterval{3, 6});
  CHECK(norm.intervals.back() == PrimeInterval{0, 2});

  StepSequence invalid{{{3, 6}, {5, 6}}, {StepKind::DownPersp}};
  CHECK_THROWS_AS(normalize_witness(L, invalid), error);
  try {
    normalize_witness(L, invalid);
  } catch (const error& e) {
    CHECK(e.code() == errc::not_a_witness);
  }
}

TEST_CASE("swing lemma verification reports") {
  for (const auto& g : generate_patch_lattices(2)) {
    Report r = verify_swing_lemma(g.lattice);
    CAPTURE(g.lattice.size());
    CHECK(r.ok());
    CHECK(r.checks > 0);
  }
}

TEST_CASE("prime projectivity lemma verification reports") {
  for (const char* name : {"N5", "M3", "S7", "B2", "C2xC3"}) {
    Report r = verify_prime_projectivity_lemma(fixture(name));
    CAPTURE(name);
    CHECK(r.ok());
  }
}

TEST_CASE("condition (SL)") {
  CHECK(has_sl_property(fixture("B2")));
  CHECK(has_sl_property(fixture("S7")));
  std::string detail;
  CHECK_FALSE(has_sl_property(fixture("C2xC3"), &detail));
  CHECK_FALSE(detail.empty());
  for (const auto& g : generate_patch_lattices(2)) CHECK(has_sl_property(g.lattice));
}

TEST_CASE("lemma suite passes on the generated family") {
  for (const auto& g : generate_patch_lattices(2)) {
    Report r = lemma_suite(g.lattice);
    CAPTURE(g.lattice.size());
    CHECK(r.ok());
  }
  CHECK(lemma_suite(fixture("C2xC3")).ok());
}

TEST_CASE("formatting") {
  PlanarLattice L = fixture("S7");
  CHECK(format_interval(L, {3, 6}) == "[a_l,t]");
  StepSequence seq{{{3, 6}, {4, 6}, {1, 3}}, {StepKind::Swing, StepKind::DownPersp}};
  std::string s = format_sequence(L, seq);
  CHECK(s.find("[a_l,t]") != std::string::npos);
  CHECK(s.find("[z_l,a_l]") != std::string::npos);
  CHECK(std::string(to_string(StepKind::Swing)) == "swing");
  CHECK(std::string(to_string(StepKind::UpPersp)) == "up");
  CHECK(std::string(to_string(StepKind::PrimeDown)) == "pdown");
}
