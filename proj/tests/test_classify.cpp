#include <doctest.h>

#include "mlcif/classify.hpp"
#include "mlcif/counting.hpp"
#include "oracles.hpp"

using namespace mlcif;

TEST_CASE("profile of the named families") {
  FamilyProfile star = profile(build_mlcif(8, 3, PGS(3, {})).gens);
  CHECK(star.rank == 1);
  CHECK(star.max_gen_count == 1);
  CHECK(star.max_gens == std::vector<ZSet>{ZSet{1}});
  CHECK(star.form.tag == FamilyForm::star);

  FamilyProfile a23 = profile(build_mlcif(8, 3, PGS(3, {ZSet{2, 3}})).gens);
  CHECK(a23.rank == 2);
  CHECK(a23.max_gen_count == 1);
  CHECK(a23.max_gens == std::vector<ZSet>{ZSet{2, 3}});
  CHECK(a23.form.tag == FamilyForm::a23);

  FamilyProfile ahm5 = profile(build_mlcif(10, 4, PGS(4, {ZSet{2, 3, 4, 5}})).gens);
  CHECK(ahm5.rank == 2);
  CHECK(ahm5.max_gen_count == 2);
  CHECK(ahm5.max_gens == canonical_sets({ZSet{2, 3, 4, 5}, ZSet{1, 5}}));
  CHECK(ahm5.form.tag == FamilyForm::hilton_milner);  // b = k+1

  FamilyProfile ahm4k4 = profile(build_mlcif(10, 4, PGS(4, {ZSet{2, 3, 4}})).gens);
  CHECK(ahm4k4.form.tag == FamilyForm::ahm);
  CHECK(ahm4k4.form.b == 4);
  CHECK(ahm4k4.max_gen_count == 2);
  CHECK(ahm4k4.rank == 2);
}

TEST_CASE("profile is stable under recovery and extension") {
  for (const PGS& pgs : enumerate_pgs(3)) {
    BuiltFamily built = build_mlcif(6, 3, pgs);
    FamilyProfile base = profile(built.gens);
    RecoveredPgs rec = recover_pgs(extend_family(built.family, 8));
    FamilyProfile again = profile(GeneratingSet{rec.pgs, rec.hgens});
    CHECK(base.rank == again.rank);
    CHECK(base.max_gens == again.max_gens);
    CHECK(base.form.str() == again.form.str());
  }
}

TEST_CASE("match_two_maxgen on interval generating sets") {
  auto hm = match_two_maxgen(build_mlcif(10, 4, PGS(4, {ZSet{2, 3, 4, 5}})).gens);
  REQUIRE(hm.ab.has_value());
  CHECK(*hm.ab == std::pair<int, int>{2, 5});

  // Rank-3 two-generator family: [3,6] plus {1,5,6}.
  auto g36 = build_mlcif(8, 4, PGS(4, {ZSet{3, 4, 5, 6}}));
  FamilyProfile prof = profile(g36.gens);
  CHECK(prof.max_gen_count == 2);
  CHECK(prof.rank == 3);
  CHECK(prof.form.tag == FamilyForm::two_maxgen);
  auto m36 = match_two_maxgen(g36.gens);
  REQUIRE(m36.ab.has_value());
  CHECK(*m36.ab == std::pair<int, int>{3, 6});

  // Wrong maximal-generator count is a contract violation.
  CHECK_THROWS_AS(match_two_maxgen(build_mlcif(6, 3, PGS(3, {})).gens),
                  contract_error);
}

TEST_CASE("interval [a,2a-1] collapses to one maximal generator") {
  // b = 2a-1 = 5: the companion {1,4,5} sits below {3,4,5}.
  FamilyProfile prof = profile(build_mlcif(6, 3, PGS(3, {ZSet{3, 4, 5}})).gens);
  CHECK(prof.max_gen_count == 1);
  CHECK(prof.max_gens == std::vector<ZSet>{ZSet{3, 4, 5}});
  CHECK(prof.form.tag == FamilyForm::other);
}

TEST_CASE("two maximal generators outside the interval pattern") {
  // {2,4,5} keeps only {1,2} and {1,4,5} on the star side, and {1,4,5} is
  // absorbed by {2,4,5}; exactly two maximal generators remain, yet the
  // 1-free one is not an interval, so no (a,b) is reported.
  auto built = build_mlcif(6, 3, PGS(3, {ZSet{2, 4, 5}}));
  CHECK(check_mlcif(built.family).ok);
  FamilyProfile prof = profile(built.gens);
  CHECK(prof.max_gen_count == 2);
  CHECK(prof.max_gens == canonical_sets({ZSet{2, 4, 5}, ZSet{1, 2}}));
  CHECK(prof.rank == 2);
  CHECK(prof.form.tag == FamilyForm::other);
  auto m = match_two_maxgen(built.gens);
  CHECK_FALSE(m.ab.has_value());
  CHECK(m.diagnostic.find("not an interval") != std::string::npos);
}

TEST_CASE("make_named") {
  BuiltFamily star = make_named(NamedFamily::star, 4, 2);
  CHECK(star.family ==
        UniformFamily(4, 2, {ZSet{1, 2}, ZSet{1, 3}, ZSet{1, 4}}));

  // a23 definitional form: at least two elements of {1,2,3}.
  BuiltFamily a23 = make_named(NamedFamily::a23, 6, 3);
  CHECK(a23.family.size() == 10);
  for (const auto& c : oracles::combinations(6, 3)) {
    ZSet s(c, 6);
    CHECK(a23.family.contains(s) == (prefix_count(s, 3) >= 2));
  }

  // Hilton-Milner definitional form: stars meeting [2,k+1], plus [2,k+1].
  BuiltFamily hm = make_named(NamedFamily::hilton_milner, 6, 3);
  std::vector<ZSet> expect{ZSet{2, 3, 4}};
  for (const auto& c : oracles::combinations(6, 3)) {
    ZSet s(c, 6);
    if (s.contains(1) && !disjoint(s, ZSet{2, 3, 4})) expect.push_back(s);
  }
  CHECK(hm.family == UniformFamily(6, 3, expect));

  CHECK(make_named(NamedFamily::ahm, 6, 3, 4).family == hm.family);
  for (int n = 8; n <= 11; ++n)
    for (int b = 4; b <= 5; ++b)
      CHECK(BigInt(make_named(NamedFamily::ahm, n, 4, b).family.size()) ==
            ahm_size(n, 4, b));

  CHECK_THROWS_AS(make_named(NamedFamily::ahm, 6, 3), input_error);
  CHECK_THROWS_AS(make_named(NamedFamily::ahm, 6, 3, 3), input_error);
  CHECK_THROWS_AS(make_named(NamedFamily::ahm, 6, 3, 5), input_error);
}

TEST_CASE("recognized form round trip") {
  for (const char* tag : {"star", "a23", "ahm(5)", "hilton_milner",
                          "two_maxgen(3,6)", "other"})
    CHECK(parse_recognized_form(tag).str() == tag);
  CHECK_THROWS_AS(parse_recognized_form("nope"), input_error);
}
