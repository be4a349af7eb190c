#include <doctest.h>

#include <algorithm>

#include "mlcif/zset.hpp"
#include "oracles.hpp"

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

TEST_CASE("zset validation") {
  CHECK_THROWS_AS(ZSet({3, 2}), input_error);
  CHECK_THROWS_AS(ZSet({0, 1}), input_error);
  CHECK_THROWS_AS(ZSet({2, 2, 3}), input_error);
  CHECK_THROWS_AS(ZSet({{5}, 4}), input_error);
  CHECK(ZSet{}.empty());
  CHECK(ZSet({2, 3, 5}).bound() == 5);
  CHECK(ZSet({2, 3, 5}).str() == "{2,3,5}");
}

TEST_CASE("prefix_count") {
  CHECK(prefix_count(ZSet{2, 3, 5}, 4) == 2);
  CHECK(prefix_count(ZSet({}, 7), 7) == 0);
  CHECK(prefix_count(ZSet{1, 2, 3}, 3) == 3);
  CHECK_THROWS_AS(prefix_count(ZSet{2, 3, 5}, 0), input_error);
  CHECK_THROWS_AS(prefix_count(ZSet{2, 3, 5}, 6), input_error);

  // Non-decreasing with unit steps.
  ZSet x({2, 4, 7}, 9);
  int prev = 0;
  for (int ell = 1; ell <= 9; ++ell) {
    int cur = prefix_count(x, ell);
    CHECK(cur >= prev);
    CHECK(cur - prev <= 1);
    prev = cur;
  }
}

TEST_CASE("coordwise order") {
  CHECK(coordwise_leq(ZSet{1, 2}, ZSet{2, 3}));
  CHECK_FALSE(coordwise_leq(ZSet{2, 4}, ZSet{2, 3}));
  CHECK(coordwise_leq(ZSet{2, 4}, ZSet{2, 4}));
  CHECK_THROWS_AS(coordwise_leq(ZSet{1}, ZSet{1, 2}), input_error);
}

TEST_CASE("generated_by order") {
  CHECK(generated_by(ZSet{2, 3, 5}, ZSet{2, 3}));
  CHECK_FALSE(generated_by(ZSet{1, 3}, ZSet{1, 4, 5}));
  CHECK(generated_by(ZSet{1, 2}, ZSet{1, 3}));
  CHECK(generated_by(ZSet{3, 7}, ZSet{}));   // everything sits below the empty set
  CHECK_FALSE(generated_by(ZSet{}, ZSet{3}));
}

TEST_CASE("coordwise_min") {
  CHECK(coordwise_min({ZSet{2, 3}, ZSet{1, 4, 5}}) == ZSet{1, 3, 5});
  CHECK(coordwise_min({ZSet{1, 2, 4}, ZSet{1, 3}}) == ZSet{1, 2, 4});
  CHECK(coordwise_min({ZSet{2, 4, 7}}) == ZSet{2, 4, 7});
  CHECK_THROWS_AS(coordwise_min({}), input_error);
  CHECK_THROWS_AS(coordwise_min({ZSet{1}, ZSet{}}), input_error);
}

TEST_CASE("compression_closure") {
  UniformFamily l23 = compression_closure(ZSet{2, 3});
  CHECK(l23.members() == std::vector<ZSet>{ZSet{1, 2}, ZSet{1, 3}, ZSet{2, 3}});
  CHECK(l23.size() == 3);  // C(3,1)

  CHECK(compression_closure(ZSet{1, 2, 3}).members() ==
        std::vector<ZSet>{ZSet{1, 2, 3}});

  ZSet a{2, 4, 5};
  UniformFamily la = compression_closure(a);
  CHECK(la.contains(a));
  CHECK(la.contains(ZSet{1, 2, 3}));
  for (const ZSet& s : la.members()) CHECK(coordwise_leq(s, a));
}

TEST_CASE("maximal_elements") {
  std::vector<ZSet> fam{ZSet{1, 2}, ZSet{1, 3}, ZSet{2, 3}};
  CHECK(maximal_elements(fam, SetOrder::coordwise) ==
        std::vector<ZSet>{ZSet{2, 3}});
  CHECK(maximal_elements({ZSet{2, 4}}, SetOrder::coordwise) ==
        std::vector<ZSet>{ZSet{2, 4}});
  CHECK(maximal_elements({ZSet{2, 4}}, SetOrder::generated) ==
        std::vector<ZSet>{ZSet{2, 4}});
  CHECK(maximal_elements({ZSet{1, 3}, ZSet{2, 3}}, SetOrder::generated) ==
        std::vector<ZSet>{ZSet{2, 3}});
  CHECK_THROWS_AS(maximal_elements({ZSet{1}, ZSet{1, 2}}, SetOrder::coordwise),
                  input_error);
}

TEST_CASE("is_left_compressed") {
  UniformFamily star(4, 2, {ZSet{1, 2}, ZSet{1, 3}, ZSet{1, 4}});
  CHECK(is_left_compressed(star));
  UniformFamily one(4, 2, {ZSet{2, 3}});
  CHECK_FALSE(is_left_compressed(one));
  UniformFamily empty(4, 2, {});
  CHECK(is_left_compressed(empty));
}

TEST_CASE("left compression: unit decrements match full closure on families") {
  // Every subfamily of C([5],2).
  auto sp = oracles::make_space(5, 2);
  const int sz = static_cast<int>(sp.sets.size());
  for (std::uint32_t fam = 0; fam < (1u << sz); ++fam) {
    std::vector<ZSet> members;
    bool global = true;
    for (int i = 0; i < sz; ++i)
      if (fam & (1u << i)) {
        members.push_back(sp.sets[i]);
        if (sp.closure[i] & ~fam) global = false;
      }
    CHECK(is_left_compressed(UniformFamily(5, 2, members)) == global);
  }
}

TEST_CASE("order axioms and prefix-count monotonicity over [5]") {
  auto sets = all_nonempty_subsets(5);
  for (const ZSet& a : sets)
    for (const ZSet& b : sets) {
      if (generated_by(a, b) && generated_by(b, a)) CHECK(a == b);
      if (a.size() == b.size() && coordwise_leq(a, b))
        CHECK(generated_by(a, b));
      if (generated_by(a, b))
        for (int ell = 1; ell <= 5; ++ell)
          CHECK(prefix_count(a, ell) >= prefix_count(b, ell));
    }
}

TEST_CASE("wedge absorption and meet law on small ground sets") {
  auto sets = all_nonempty_subsets(4);
  for (const ZSet& a : sets)
    for (const ZSet& b : sets) {
      if (generated_by(b, a)) CHECK(coordwise_min({b, a}) == b);
      ZSet w = coordwise_min({a, b});
      for (const ZSet& c : sets)
        CHECK(generated_by(c, w) ==
              (generated_by(c, a) && generated_by(c, b)));
    }
}

TEST_CASE("family parsing and printing") {
  CHECK(parse_zset("2,3,5") == ZSet{2, 3, 5});
  CHECK(parse_zset(" 2 , 3 ") == ZSet{2, 3});
  CHECK(parse_zset("").empty());
  CHECK_THROWS_AS(parse_zset("2,,3"), input_error);
  CHECK_THROWS_AS(parse_zset("3,2"), input_error);
  CHECK_THROWS_AS(parse_zset("a,b"), input_error);

  auto list = parse_set_list("2,3;2,4,5");
  REQUIRE(list.size() == 2);
  CHECK(list[0] == ZSet{2, 3});
  CHECK(list[1] == ZSet{2, 4, 5});
  CHECK(parse_set_list("").empty());
  CHECK(set_list_str(list) == "{2,3} {2,4,5}");
}
