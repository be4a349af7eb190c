#include "mlcif/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

#include "mlcif/build.hpp"
#include "mlcif/catalog.hpp"
#include "mlcif/classify.hpp"
#include "mlcif/counting.hpp"

namespace mlcif {

namespace {

std::vector<ZSet> nonempty_subsets(int n) {
  std::vector<ZSet> out;
  for (unsigned m = 1; m < (1u << n); ++m) {
    std::vector<int> e;
    for (int v = 1; v <= n; ++v)
      if (m & (1u << (v - 1))) e.push_back(v);
    out.emplace_back(std::move(e), n);
  }
  return out;
}

int pcount(const ZSet& x, int ell) {
  int c = 0;
  for (int e : x.elems()) {
    if (e > ell) break;
    ++c;
  }
  return c;
}

bool subset_of(const ZSet& a, const ZSet& b) {
  return (a.mask() & ~b.mask()) == 0;
}

void fail(SuiteResult& r, const std::string& detail) {
  if (r.ok) {
    r.ok = false;
    r.detail = detail;
  }
}

void suite_order_axioms(SuiteResult& r) {
  auto sets = nonempty_subsets(6);
  for (const ZSet& a : sets)
    for (const ZSet& b : sets) {
      bool ab = generated_by(a, b), ba = generated_by(b, a);
      if (ab && ba && a != b)
        return fail(r, "generated-by not antisymmetric at " + a.str() + ", " + b.str());
      if (a.size() == b.size()) {
        bool lab = coordwise_leq(a, b);
        if (lab && coordwise_leq(b, a) && a != b)
          return fail(r, "coordwise not antisymmetric at " + a.str());
        if (lab && !ab)
          return fail(r, "coordwise does not imply generated-by at " + a.str() +
                             " <= " + b.str());
      }
    }
  for (const ZSet& a : sets)
    for (const ZSet& b : sets) {
      if (!generated_by(a, b)) continue;
      for (const ZSet& c : sets)
        if (generated_by(b, c) && !generated_by(a, c))
          return fail(r, "generated-by not transitive at " + a.str() + ", " +
                             b.str() + ", " + c.str());
    }
  r.detail = "orders on all non-empty subsets of [6]";
}

void suite_prefix_count_monotone(SuiteResult& r) {
  auto sets = nonempty_subsets(6);
  for (const ZSet& a : sets)
    for (const ZSet& b : sets)
      for (int ell = 1; ell <= 6; ++ell) {
        if (generated_by(a, b) && pcount(a, ell) < pcount(b, ell))
          return fail(r, "generated_by(" + a.str() + "," + b.str() +
                             ") but prefix counts flip at ell=" +
                             std::to_string(ell));
        if (a.size() == b.size() && coordwise_leq(a, b) &&
            pcount(a, ell) < pcount(b, ell))
          return fail(r, "coordwise case fails at " + a.str());
        if (subset_of(a, b) && pcount(b, ell) < pcount(a, ell))
          return fail(r, "subset case fails at " + a.str());
      }
  r.detail = "prefix-count monotonicity, all pairs over [6], all levels";
}

void suite_wedge_meet_laws(SuiteResult& r) {
  auto sets6 = nonempty_subsets(6);
  for (const ZSet& a : sets6)
    for (const ZSet& b : sets6)
      if (generated_by(b, a) && coordwise_min({b, a}) != b)
        return fail(r, "absorption fails at " + b.str() + " below " + a.str());
  auto sets5 = nonempty_subsets(5);
  for (const ZSet& a : sets5)
    for (const ZSet& b : sets5) {
      ZSet w = coordwise_min({a, b});
      for (const ZSet& c : sets5) {
        bool lhs = generated_by(c, w);
        bool rhs = generated_by(c, a) && generated_by(c, b);
        if (lhs != rhs)
          return fail(r, "meet law fails at " + c.str() + " vs " + a.str() +
                             " ∧ " + b.str());
      }
    }
  r.detail = "absorption over [6] pairs, meet law over [5] triples";
}

void suite_closure_counts(SuiteResult& r) {
  for (const ZSet& a : nonempty_subsets(8)) {
    BigInt direct(compression_closure(a).size());
    if (closure_count(a) != direct)
      return fail(r, "closure count mismatch at " + a.str());
  }
  for (int a = 1; a <= 10; ++a)
    for (int b = a; b <= 10; ++b) {
      std::vector<int> iv;
      for (int v = a; v <= b; ++v) iv.push_back(v);
      BigInt expect = binom(b, a - 1);
      if (interval_closure_count(a, b) != expect ||
          closure_count(ZSet(iv)) != expect)
        return fail(r, "interval closure mismatch at [" + std::to_string(a) +
                           "," + std::to_string(b) + "]");
    }
  r.detail = "recursion vs direct closure for all sets over [8], intervals to 10";
}

// Bitmask sweep: the single-decrement test agrees with full downward closure
// on every family of k-sets of [n].
void suite_left_compression_locality(SuiteResult& r) {
  for (auto [n, k] : std::vector<std::pair<int, int>>{
           {4, 2}, {5, 2}, {6, 2}, {5, 3}, {6, 3}}) {
    std::vector<ZSet> ksets;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i + 1;
    for (;;) {
      ksets.emplace_back(cur, n);
      int i = k - 1;
      while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
      if (i < 0) break;
      ++cur[i];
      for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    const int sz = static_cast<int>(ksets.size());
    std::vector<std::uint32_t> dec(sz, 0), clo(sz, 0);
    for (int i = 0; i < sz; ++i)
      for (int j = 0; j < sz; ++j) {
        if (i == j) continue;
        if (coordwise_leq(ksets[j], ksets[i])) clo[i] |= 1u << j;
      }
    for (int i = 0; i < sz; ++i) {
      std::vector<int> e = ksets[i].elems();
      for (int p = 0; p < k; ++p) {
        int prev = p == 0 ? 0 : e[p - 1];
        if (e[p] - 1 <= prev) continue;
        --e[p];
        ZSet below(e, n);
        ++e[p];
        for (int j = 0; j < sz; ++j)
          if (ksets[j] == below) dec[i] |= 1u << j;
      }
    }
    const std::uint32_t full = sz == 32 ? 0xffffffffu : (1u << sz) - 1;
    int stride = sz > 16 ? 101 : 1;  // library cross-check sampled when large
    for (std::uint32_t fam = 0; fam <= full; ++fam) {
      bool local = true, global = true;
      for (int i = 0; i < sz && (local || global); ++i) {
        if (!(fam & (1u << i))) continue;
        if (dec[i] & ~fam) local = false;
        if (clo[i] & ~fam) global = false;
      }
      if (local != global)
        return fail(r, "locality fails for mask " + std::to_string(fam) +
                           " at n=" + std::to_string(n));
      if (fam % stride == 0) {
        std::vector<ZSet> members;
        for (int i = 0; i < sz; ++i)
          if (fam & (1u << i)) members.push_back(ksets[i]);
        if (is_left_compressed(UniformFamily(n, k, members)) != global)
          return fail(r, "library disagrees for mask " + std::to_string(fam));
      }
      if (fam == full) break;
    }
  }
  r.detail = "all families with n <= 6, k <= 3";
}

void suite_si_oracle(SuiteResult& r) {
  auto sets = nonempty_subsets(7);
  for (const ZSet& g : sets)
    for (const ZSet& h : sets) {
      auto si = strongly_intersecting(g, h, 7);
      auto wit = disjoint_witness(g, h);
      if (si.has_value() == wit.has_value())
        return fail(r, "oracle disagreement at " + g.str() + ", " + h.str());
      if (si && pcount(g, si->ell) + pcount(h, si->ell) <= si->ell)
        return fail(r, "bogus level witness at " + g.str());
      if (wit && (!disjoint(wit->s, wit->t) || !coordwise_leq(wit->s, g) ||
                  !coordwise_leq(wit->t, h)))
        return fail(r, "bogus disjoint witness at " + g.str());
    }
  r.detail = "level vs disjoint-pair oracle, all ordered pairs over [7]";
}

void suite_self_si_diagonal(SuiteResult& r) {
  for (const ZSet& g : nonempty_subsets(7)) {
    bool has_odd_anchor = false;
    for (int p = 1; p <= g.size(); ++p)
      if (g.elems()[p - 1] == 2 * p - 1) has_odd_anchor = true;
    bool si = strongly_intersecting(g, g, 7).has_value();
    if (si != has_odd_anchor)
      return fail(r, "self-si anchor mismatch at " + g.str());
    if (si) {
      auto [p, q] = si_meet_indices(g, g);
      if (p != q || g.elems()[p - 1] != 2 * p - 1)
        return fail(r, "diagonal meet index wrong at " + g.str());
    }
  }
  r.detail = "self strong intersection <=> g_p = 2p-1, all sets over [7]";
}

void suite_companion_blocking(SuiteResult& r) {
  for (int k : {3, 4}) {
    const int n = 2 * k + 2;
    std::vector<ZSet> ksets;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i + 2;  // s_1 >= 2
    for (;;) {
      ksets.emplace_back(cur, n);
      int i = k - 1;
      while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
      if (i < 0) break;
      ++cur[i];
      for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    for (const ZSet& g : generator_universe(k, GkBranch::without1))
      for (int i = 1; i <= g.size(); ++i) {
        ZSet comp = companion(g, i);
        for (const ZSet& s : ksets) {
          if (s.elems()[i - 1] < g.elems()[i - 1] + 1) continue;
          if (strongly_intersecting(s, ZSet(comp.elems(), n), n))
            return fail(r, "companion " + comp.str() + " intersects " +
                               s.str() + " strongly");
        }
      }
  }
  r.detail = "blocked k-sets never strongly intersect companions, k in {3,4}";
}

void suite_si_generated_monotone(SuiteResult& r, unsigned seed) {
  std::mt19937 rng(seed);
  const int n = 10;
  auto random_set = [&](int max_sz) {
    std::uniform_int_distribution<int> szd(1, max_sz);
    int sz = szd(rng);
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i + 1;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> e(pool.begin(), pool.begin() + sz);
    std::sort(e.begin(), e.end());
    return ZSet(std::move(e), n);
  };
  int hits = 0;
  for (int round = 0; round < 4000; ++round) {
    ZSet g = random_set(n), h = random_set(n);
    if (!strongly_intersecting(g, h, n)) continue;
    // Random refinement below g: lower each coordinate, then extend.
    std::vector<int> e(g.size());
    for (int i = 0; i < g.size(); ++i) {
      int lo = i == 0 ? 1 : e[i - 1] + 1;
      std::uniform_int_distribution<int> d(lo, g.elems()[i]);
      e[i] = d(rng);
    }
    std::uniform_int_distribution<int> extra(0, n - e.back());
    int add = extra(rng);
    for (int i = 0; i < add; ++i) e.push_back(e.back() + 1);
    ZSet gp(std::move(e), n);
    ++hits;
    if (!generated_by(gp, g))
      return fail(r, "sampler produced a set not below " + g.str());
    if (!strongly_intersecting(gp, h, n))
      return fail(r, "monotonicity fails: " + gp.str() + " below " + g.str() +
                         " vs " + h.str());
  }
  r.detail = std::to_string(hits) + " sampled refinements stayed intersecting";
}

void suite_build_verifies(SuiteResult& r) {
  for (int k : {2, 3})
    for (int n = 2 * k; n <= 2 * k + 2; ++n)
      for (const PGS& pgs : enumerate_pgs(k)) {
        MlcifCheck chk = check_mlcif(build_mlcif(n, k, pgs).family);
        if (!chk.ok)
          return fail(r, "family of " + set_list_str(pgs.members()) + " at n=" +
                             std::to_string(n) + " is " + chk.describe());
      }
  r.detail = "every built family verifies, k in {2,3}, n up to 2k+2";
}

void suite_recover_round_trip(SuiteResult& r, int max_k) {
  for (int k = 2; k <= std::min(max_k, 4); ++k)
    for (int n : {2 * k, 2 * k + 2})
      for (const PGS& pgs : enumerate_pgs(k)) {
        RecoveredPgs rec = recover_pgs(build_mlcif(n, k, pgs).family);
        if (!(rec.pgs == pgs))
          return fail(r, "round trip lost " + set_list_str(pgs.members()) +
                             " at n=" + std::to_string(n) + ", got " +
                             set_list_str(rec.pgs.members()));
        for (const ZSet& h : rec.hgens)
          if (!h.contains(1))
            return fail(r, "recovered star-side generator without 1");
      }
  r.detail = "recover(build(pgs)) == pgs across catalogs";
}

void suite_normalized_wedge(SuiteResult& r, int max_k) {
  for (int k = 2; k <= std::min(max_k, 4); ++k)
    for (const PGS& pgs : enumerate_pgs(k)) {
      if (pgs.empty()) continue;
      std::vector<int> idx(pgs.members().size(), 1);
      for (;;) {
        std::vector<ZSet> comps;
        for (int j = 0; j < pgs.size(); ++j)
          comps.push_back(companion(pgs.members()[j], idx[j]));
        if (normalized_wedge(pgs, WedgeSelection{idx}) != coordwise_min(comps))
          return fail(r, "normalized wedge deviates for " +
                             set_list_str(pgs.members()));
        int j = static_cast<int>(idx.size()) - 1;
        while (j >= 0 && idx[j] == pgs.members()[j].size()) idx[j--] = 1;
        if (j < 0) break;
        ++idx[j];
      }
    }
  r.detail = "closed form equals raw wedge on every selection, k <= 4";
}

void suite_star_side_invariants(SuiteResult& r, int max_k) {
  for (int k = 2; k <= std::min(max_k, 4); ++k)
    for (const PGS& pgs : enumerate_pgs(k)) {
      std::vector<ZSet> hg = star_side_generators(pgs);
      for (const ZSet& h : hg)
        if (!h.contains(1))
          return fail(r, "star-side generator " + h.str() + " misses 1");
      for (std::size_t i = 0; i < hg.size(); ++i)
        for (std::size_t j = i + 1; j < hg.size(); ++j)
          if (generated_by(hg[i], hg[j]) || generated_by(hg[j], hg[i]))
            return fail(r, "star side is not an antichain for " +
                               set_list_str(pgs.members()));
      GeneratingSet gens{pgs, hg};
      if (!strongly_intersecting_family(gens.all(), 2 * k - 1))
        return fail(r, "combined generating set not strongly intersecting for " +
                           set_list_str(pgs.members()));
    }
  r.detail = "star side contains 1, is an antichain, and keeps the si property";
}

void suite_extension_stability(SuiteResult& r) {
  for (const PGS& pgs : enumerate_pgs(3)) {
    BuiltFamily base = build_mlcif(6, 3, pgs);
    FamilyProfile base_prof = profile(base.gens);
    for (int n2 : {7, 8}) {
      UniformFamily ext = extend_family(base.family, n2);
      MlcifCheck chk = check_mlcif(ext);
      if (!chk.ok) return fail(r, "extension broke: " + chk.describe());
      RecoveredPgs rec = recover_pgs(ext);
      if (!(rec.pgs == pgs))
        return fail(r, "extension changed the generating set of " +
                           set_list_str(pgs.members()));
      FamilyProfile ext_prof = profile(GeneratingSet{rec.pgs, rec.hgens});
      if (ext_prof.rank != base_prof.rank ||
          ext_prof.max_gens != base_prof.max_gens)
        return fail(r, "extension changed the profile of " +
                           set_list_str(pgs.members()));
    }
  }
  r.detail = "k=3 families extend to n=7,8 with stable generators";
}

void suite_binomial_unimodal(SuiteResult& r) {
  for (int n = 1; n <= 40; ++n)
    for (int a = 0; a < n / 2; ++a)
      for (int b = a + 1; b <= n / 2; ++b)
        if (binom(n, a) >= binom(n, b))
          return fail(r, "strict growth fails at n=" + std::to_string(n));
  r.detail = "C(n,a) < C(n,b) for a < b <= n/2, n <= 40";
}

void suite_telescope_identity(SuiteResult& r) {
  for (int n = 8; n <= 30; n += 2)
    for (int b = 4; b <= 8; ++b)
      for (int d = 1; d <= std::min(6, n - b); ++d)
        for (int rr = 0; rr <= 8; ++rr) {
          BigInt lhs = binom(n - b, rr) - binom(n - b - d, rr);
          BigInt rhs = 0;
          for (int j = 0; j < d; ++j) rhs += binom(n - b - d + j, rr - 1);
          if (lhs != rhs)
            return fail(r, "telescope fails at n=" + std::to_string(n) +
                               " b=" + std::to_string(b));
        }
  r.detail = "difference of binomials telescopes along the diagonal";
}

void suite_case2_dominated(SuiteResult& r) {
  for (int k = 3; k <= 5; ++k)
    for (int n = 2 * k; n <= 12; ++n)
      for (int b = 4; b <= k + 1; ++b)
        for (int d = 0; d <= std::min(6, n - b); ++d) {
          BigInt ax = ahm_meet_count_disjoint(n, k, b, d);
          BigInt a0 = ahm_avoid_count_disjoint(n, k, b, d);
          if (ax + a0 != ahm_size(n, k, b))
            return fail(r, "meet + avoid misses the total at n=" +
                               std::to_string(n));
          if (ax > star_meet_count(n, k, d))
            return fail(r, "disjoint case beats the star at n=" +
                               std::to_string(n) + " k=" + std::to_string(k) +
                               " b=" + std::to_string(b) +
                               " d=" + std::to_string(d));
        }
  r.detail = "avoid-case counts never exceed the star, full desk grid";
}

void suite_ratio_threshold(SuiteResult& r) {
  for (int k = 3; k <= 8; ++k)
    for (int b = 4; b <= k + 1; ++b) {
      int threshold = -1;
      for (int n = 10 * k; n >= 2 * k; --n) {
        if (binom(n - b, k - b + 1) < binom(n - b - 1, k - 2))
          threshold = n;
        else
          break;
      }
      if (threshold < 0)
        return fail(r, "no ratio threshold for k=" + std::to_string(k) +
                           " b=" + std::to_string(b));
    }
  r.detail = "C(n-b,k-b+1) < C(n-b-1,k-2) from a threshold to n = 10k";
}

}  // namespace

std::vector<SuiteResult> run_selftest(const SelftestOptions& opt) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  std::vector<std::pair<std::string, std::function<void(SuiteResult&)>>> suites{
      {"order_axioms", suite_order_axioms},
      {"prefix_count_monotone", suite_prefix_count_monotone},
      {"wedge_meet_laws", suite_wedge_meet_laws},
      {"closure_counts", suite_closure_counts},
      {"left_compression_locality", suite_left_compression_locality},
      {"si_oracle", suite_si_oracle},
      {"self_si_diagonal", suite_self_si_diagonal},
      {"companion_blocking", suite_companion_blocking},
      {"si_generated_monotone",
       [&](SuiteResult& r) { suite_si_generated_monotone(r, opt.seed); }},
      {"build_verifies", suite_build_verifies},
      {"recover_round_trip",
       [&](SuiteResult& r) { suite_recover_round_trip(r, opt.max_k); }},
      {"normalized_wedge", [&](SuiteResult& r) { suite_normalized_wedge(r, opt.max_k); }},
      {"star_side_invariants",
       [&](SuiteResult& r) { suite_star_side_invariants(r, opt.max_k); }},
      {"extension_stability", suite_extension_stability},
      {"binomial_unimodal", suite_binomial_unimodal},
      {"telescope_identity", suite_telescope_identity},
      {"case2_dominated", suite_case2_dominated},
      {"ratio_threshold", suite_ratio_threshold},
  };

  std::vector<SuiteResult> results;
  for (auto& [name, fn] : suites) {
    if (opt.time_budget_sec > 0) {
      double elapsed =
          std::chrono::duration<double>(clock::now() - start).count();
      if (elapsed > opt.time_budget_sec)
        throw resource_error("selftest: time budget exhausted before suite " +
                             name);
    }
    SuiteResult res;
    res.name = name;
    auto t0 = clock::now();
    fn(res);
    res.millis = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace mlcif
