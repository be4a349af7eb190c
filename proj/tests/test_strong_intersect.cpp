#include <doctest.h>

#include "mlcif/strong_intersect.hpp"

using namespace mlcif;

namespace {

std::vector<ZSet> all_nonempty_subsets(int n) {
  std::vector<ZSet> out;
  for (unsigned m = 1; m < (1u << n); ++m) {
    std::vector<int> e;
    for (int v = 1; v <= n; ++v)
      if (m & (1u << (v - 1))) e.push_back(v);
    out.emplace_back(std::move(e), n);
  }
  return out;
}

}  // namespace

TEST_CASE("strongly_intersecting basics") {
  auto w = strongly_intersecting(ZSet{2, 3}, ZSet{2, 3}, 6);
  REQUIRE(w.has_value());
  CHECK(w->ell == 3);

  CHECK_FALSE(strongly_intersecting(ZSet{2, 4}, ZSet{2, 4}, 6));
  CHECK_FALSE(strongly_intersecting(ZSet{2, 3}, ZSet{2, 4, 5}, 6));

  CHECK_THROWS_AS(strongly_intersecting(ZSet{}, ZSet{2}, 6), input_error);
  CHECK_THROWS_AS(strongly_intersecting(ZSet{2}, ZSet{8}, 6), input_error);
}

TEST_CASE("si_meet_indices") {
  auto [p1, q1] = si_meet_indices(ZSet{2, 3}, ZSet{2, 3});
  CHECK(p1 == 2);
  CHECK(q1 == 2);

  // From the intersecting trio {1,3},{1,4,5},{2,3,5}: minimal level 3.
  auto [p2, q2] = si_meet_indices(ZSet{1, 3}, ZSet{2, 3, 5});
  CHECK(p2 == 2);
  CHECK(q2 == 2);

  auto [p3, q3] = si_meet_indices(ZSet{1, 4}, ZSet{1, 2, 6});
  CHECK(p3 == 1);  // level 1 means both sets start at 1
  CHECK(q3 == 1);

  CHECK_THROWS_AS(si_meet_indices(ZSet{2, 4}, ZSet{2, 4}), contract_error);
}

TEST_CASE("si_meet_indices satisfies g_p = h_q = p + q - 1") {
  auto sets = all_nonempty_subsets(6);
  for (const ZSet& g : sets)
    for (const ZSet& h : sets) {
      if (!strongly_intersecting(g, h, 6)) continue;
      auto [p, q] = si_meet_indices(g, h);
      REQUIRE(p >= 1);
      REQUIRE(p <= g.size());
      REQUIRE(q >= 1);
      REQUIRE(q <= h.size());
      CHECK(g.elems()[p - 1] == p + q - 1);
      CHECK(h.elems()[q - 1] == p + q - 1);
    }
}

TEST_CASE("disjoint_witness") {
  auto w = disjoint_witness(ZSet{2, 4}, ZSet{2, 4});
  REQUIRE(w.has_value());
  CHECK(w->s == ZSet{1, 3});
  CHECK(w->t == ZSet{2, 4});

  CHECK_FALSE(disjoint_witness(ZSet{2, 3}, ZSet{2, 3}));

  auto w2 = disjoint_witness(ZSet{2, 3}, ZSet{2, 4, 5});
  REQUIRE(w2.has_value());
  CHECK(w2->s == ZSet{1, 3});
  CHECK(w2->t == ZSet{2, 4, 5});
}

TEST_CASE("oracle equivalence over [5]") {
  auto sets = all_nonempty_subsets(5);
  for (const ZSet& g : sets)
    for (const ZSet& h : sets) {
      auto si = strongly_intersecting(g, h, 5);
      auto wit = disjoint_witness(g, h);
      CHECK(si.has_value() != wit.has_value());
      if (wit) {
        CHECK(disjoint(wit->s, wit->t));
        CHECK(coordwise_leq(wit->s, g));
        CHECK(coordwise_leq(wit->t, h));
      }
    }
}

TEST_CASE("strongly_intersecting_family") {
  CHECK(strongly_intersecting_family(
      {ZSet{1, 3}, ZSet{1, 4, 5}, ZSet{2, 3, 5}}, 5));
  CHECK_FALSE(strongly_intersecting_family({ZSet{2, 3}, ZSet{2, 4, 5}}, 5));
  CHECK(strongly_intersecting_family({}, 5));
  CHECK_THROWS_AS(strongly_intersecting_family({ZSet{}}, 5), input_error);
}

TEST_CASE("self strong intersection needs an odd-position anchor") {
  for (const ZSet& g : all_nonempty_subsets(6)) {
    bool anchor = false;
    for (int p = 1; p <= g.size(); ++p)
      if (g.elems()[p - 1] == 2 * p - 1) anchor = true;
    CHECK(strongly_intersecting(g, g, 6).has_value() == anchor);
  }
}
