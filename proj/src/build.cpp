#include "mlcif/build.hpp"

#include <algorithm>

namespace mlcif {

std::vector<ZSet> generator_universe(int k, GkBranch branch) {
  if (k < 2) throw input_error("generator_universe: need k >= 2");
  std::vector<ZSet> out;
  const int top = 2 * k - 1;
  // DFS over ascending element choices; every prefix is itself a candidate.
  std::vector<int> cur;
  auto emit = [&] {
    if (cur.empty()) return;
    if (cur.back() > k + static_cast<int>(cur.size()) - 1) return;
    bool has1 = cur.front() == 1;
    if (branch == GkBranch::with1 && !has1) return;
    if (branch == GkBranch::without1 && has1) return;
    out.emplace_back(cur, top);
  };
  auto rec = [&](auto&& self, int lo) -> void {
    if (static_cast<int>(cur.size()) == k) return;
    for (int v = lo; v <= top; ++v) {
      cur.push_back(v);
      emit();
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return canonical_sets(std::move(out));
}

namespace {

std::vector<std::string> pgs_violations(int k, const std::vector<ZSet>& raw) {
  std::vector<std::string> v;
  if (k < 2) {
    v.push_back("k must be at least 2");
    return v;
  }
  for (std::size_t i = 0; i + 1 < raw.size(); ++i)
    if (raw[i] == raw[i + 1])
      v.push_back("duplicate member " + raw[i].str());
  const int horizon = 2 * k - 1;
  for (const ZSet& g : raw) {
    if (g.empty()) {
      v.push_back("empty generator");
      continue;
    }
    if (g.contains(1)) v.push_back("member " + g.str() + " contains 1");
    if (g.size() > k)
      v.push_back("member " + g.str() + " has more than k elements");
    else if (g.max_elem() > k + g.size() - 1)
      v.push_back("member " + g.str() + " has max element above k+|G|-1");
    if (!g.empty() && g.max_elem() <= horizon && !g.contains(1) &&
        g.size() <= k &&
        !strongly_intersecting(g, g, horizon))
      v.push_back("member " + g.str() + " is not self strongly intersecting");
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].empty() || raw[i].max_elem() > horizon) continue;
    for (std::size_t j = i + 1; j < raw.size(); ++j) {
      if (raw[j].empty() || raw[j].max_elem() > horizon) continue;
      if (raw[i] == raw[j]) continue;
      if (!strongly_intersecting(raw[i], raw[j], horizon))
        v.push_back("pair " + raw[i].str() + ", " + raw[j].str() +
                    " is not strongly intersecting");
      if (generated_by(raw[i], raw[j]) || generated_by(raw[j], raw[i]))
        v.push_back("pair " + raw[i].str() + ", " + raw[j].str() +
                    " is comparable (not an antichain)");
    }
  }
  return v;
}

}  // namespace

PGS::PGS(int k, std::vector<ZSet> members)
    : k_(k), members_(canonical_sets(std::move(members))) {
  auto v = pgs_violations(k, members_);
  if (!v.empty()) throw input_error("PGS: " + v.front());
}

PgsValidation validate_pgs(int k, std::vector<ZSet> members) {
  PgsValidation out;
  members = canonical_sets(std::move(members));
  out.violations = pgs_violations(k, members);
  if (out.violations.empty()) out.pgs = PGS(k, std::move(members));
  return out;
}

ZSet companion(const ZSet& gen, int i) {
  if (i < 1 || i > gen.size())
    throw input_error("companion: index out of range");
  int gi = gen.elems()[i - 1];
  std::vector<int> out{1};
  for (int v = i + 1; v <= gi; ++v) out.push_back(v);
  return ZSet(std::move(out), std::max(gen.bound(), 1));
}

namespace {

// Drop every companion that is generated by another one (keeping the first of
// equal values), then sort by selection index. The survivors have strictly
// increasing indices and strictly increasing sizes.
std::vector<std::pair<int, ZSet>> reduce_companions(
    const std::vector<std::pair<int, ZSet>>& comps) {
  std::vector<std::pair<int, ZSet>> kept;
  for (std::size_t q = 0; q < comps.size(); ++q) {
    bool drop = false;
    for (std::size_t p = 0; p < comps.size() && !drop; ++p) {
      if (p == q) continue;
      if (generated_by(comps[p].second, comps[q].second) &&
          (comps[p].second != comps[q].second || p < q))
        drop = true;
    }
    if (!drop) kept.push_back(comps[q]);
  }
  std::sort(kept.begin(), kept.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return kept;
}

}  // namespace

ZSet normalized_wedge(const PGS& pgs, const WedgeSelection& sel) {
  if (static_cast<int>(sel.indices.size()) != pgs.size())
    throw input_error("normalized_wedge: one index per member required");
  std::vector<std::pair<int, ZSet>> comps;
  for (int j = 0; j < pgs.size(); ++j)
    comps.emplace_back(sel.indices[j], companion(pgs.members()[j], sel.indices[j]));
  auto kept = reduce_companions(comps);

  std::vector<int> out{1};
  int prev_size = 1;
  for (const auto& [idx, comp] : kept) {
    for (int v = prev_size + idx; v <= comp.size() + idx - 1; ++v)
      out.push_back(v);
    prev_size = comp.size();
  }
  return ZSet(std::move(out), std::max(2 * pgs.k() - 1, 1));
}

std::vector<ZSet> star_side_generators(const PGS& pgs) {
  if (pgs.empty()) return {ZSet({1}, std::max(2 * pgs.k() - 1, 1))};
  // Fold members in one at a time, keeping only maximal partial wedges:
  // a dominated partial wedge stays dominated under further meets.
  std::vector<ZSet> partial;
  for (int j = 0; j < pgs.size(); ++j) {
    const ZSet& g = pgs.members()[j];
    std::vector<ZSet> next;
    for (int i = 1; i <= g.size(); ++i) {
      ZSet c = companion(g, i);
      if (j == 0) {
        next.push_back(std::move(c));
      } else {
        for (const ZSet& w : partial) next.push_back(coordwise_min({w, c}));
      }
    }
    partial = maximal_elements(std::move(next), SetOrder::generated);
  }
  return partial;
}

std::vector<ZSet> GeneratingSet::all() const {
  std::vector<ZSet> out = pgs.members();
  out.insert(out.end(), hgens.begin(), hgens.end());
  return canonical_sets(std::move(out));
}

namespace {

void materialize_rec(int n, int k, const std::vector<ZSet>& gens,
                     std::vector<int>& cur, std::vector<ZSet>& out) {
  int t = static_cast<int>(cur.size());
  bool viable = false;
  for (const ZSet& g : gens) {
    int limit = std::min(t, g.size());
    bool ok = true;
    for (int i = 0; i < limit; ++i)
      if (cur[i] > g.elems()[i]) {
        ok = false;
        break;
      }
    if (ok) {
      viable = true;
      break;
    }
  }
  if (!viable) return;
  if (t == k) {
    out.emplace_back(cur, n);
    return;
  }
  int lo = t == 0 ? 1 : cur[t - 1] + 1;
  int hi = n - (k - t - 1);
  for (int v = lo; v <= hi; ++v) {
    cur.push_back(v);
    materialize_rec(n, k, gens, cur, out);
    cur.pop_back();
  }
}

}  // namespace

UniformFamily materialize(int n, int k, const std::vector<ZSet>& gens) {
  if (k < 2 || n < 2 * k) throw input_error("materialize: need 4 <= 2k <= n");
  for (const ZSet& g : gens)
    if (g.size() > k)
      throw input_error("materialize: generator " + g.str() +
                        " larger than k");
  std::vector<ZSet> out;
  if (!gens.empty()) {
    std::vector<int> cur;
    materialize_rec(n, k, gens, cur, out);
  }
  return UniformFamily(n, k, std::move(out));
}

BuiltFamily build_mlcif(int n, int k, const PGS& pgs) {
  if (pgs.k() != k) throw input_error("build_mlcif: PGS built for different k");
  if (n < 2 * k) throw input_error("build_mlcif: need n >= 2k");
  GeneratingSet gens{pgs, star_side_generators(pgs)};
  UniformFamily fam = family_union(materialize(n, k, pgs.members()),
                                   materialize(n, k, gens.hgens));
  return BuiltFamily{std::move(fam), std::move(gens)};
}

std::string MlcifCheck::describe() const {
  if (ok) return "maximal left-compressed intersecting family";
  std::string s = reason + ", witness:";
  for (const ZSet& w : witness) s += " " + w.str();
  return s;
}

MlcifCheck check_mlcif(const UniformFamily& fam) {
  const auto& mem = fam.members();
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (std::size_t j = i + 1; j < mem.size(); ++j)
      if (disjoint(mem[i], mem[j]))
        return {false, "not intersecting", {mem[i], mem[j]}};

  for (const ZSet& a : mem) {
    std::vector<int> e = a.elems();
    for (std::size_t i = 0; i < e.size(); ++i) {
      int prev = i == 0 ? 0 : e[i - 1];
      if (e[i] - 1 <= prev) continue;
      --e[i];
      ZSet below(e, fam.n());
      if (!fam.contains(below))
        return {false, "not left-compressed", {a, below}};
      ++e[i];
    }
  }

  // Maximality: no outside k-set meets every member.
  std::vector<int> cur(fam.k());
  for (int i = 0; i < fam.k(); ++i) cur[i] = i + 1;
  for (;;) {
    ZSet s(cur, fam.n());
    if (!fam.contains(s)) {
      bool addable = true;
      for (const ZSet& m : mem)
        if (disjoint(s, m)) {
          addable = false;
          break;
        }
      if (addable) return {false, "not maximal", {s}};
    }
    int i = fam.k() - 1;
    while (i >= 0 && cur[i] == fam.n() - (fam.k() - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < fam.k(); ++j) cur[j] = cur[j - 1] + 1;
  }
  return {true, "", {}};
}

namespace {

// Truncate a maximal member at the last index i with a_i < i + k.
ZSet pi_truncate(const ZSet& a, int k) {
  int r = 0;
  for (int i = 1; i <= a.size(); ++i)
    if (a.elems()[i - 1] < i + k) r = i;
  if (r == 0)
    throw contract_error("recover_pgs: member " + a.str() +
                         " has no truncation point");
  std::vector<int> t(a.elems().begin(), a.elems().begin() + r);
  return ZSet(std::move(t), a.bound());
}

}  // namespace

RecoveredPgs recover_pgs(const UniformFamily& fam) {
  MlcifCheck chk = check_mlcif(fam);
  if (!chk.ok)
    throw contract_error("recover_pgs: input is " + chk.describe());
  std::vector<ZSet> maximal = maximal_elements(fam.members(), SetOrder::coordwise);
  std::vector<ZSet> gside, hside;
  for (const ZSet& a : maximal) {
    ZSet t = pi_truncate(a, fam.k());
    (t.contains(1) ? hside : gside).push_back(t);
  }
  gside = maximal_elements(std::move(gside), SetOrder::generated);
  hside = maximal_elements(std::move(hside), SetOrder::generated);
  return RecoveredPgs{PGS(fam.k(), std::move(gside)), std::move(hside)};
}

UniformFamily extend_family(const UniformFamily& fam, int n_new) {
  if (fam.n() < 2 * fam.k())
    throw input_error("extend_family: family ground set below 2k");
  if (n_new < 2 * fam.k())
    throw input_error("extend_family: target ground set below 2k");
  MlcifCheck chk = check_mlcif(fam);
  if (!chk.ok)
    throw input_error("extend_family: input is " + chk.describe());
  RecoveredPgs rec = recover_pgs(fam);
  return build_mlcif(n_new, fam.k(), rec.pgs).family;
}

std::vector<PGS> enumerate_pgs(int k, int max_k_budget) {
  if (k < 2) throw input_error("enumerate_pgs: need k >= 2");
  if (k > max_k_budget)
    throw resource_error("enumerate_pgs: k exceeds the configured budget of " +
                         std::to_string(max_k_budget));
  const int horizon = 2 * k - 1;

  // Lemma-style prefilter: a generator is self strongly intersecting exactly
  // when g_p = 2p - 1 for some index p.
  std::vector<ZSet> pool;
  for (const ZSet& g : generator_universe(k, GkBranch::without1)) {
    bool self_si = false;
    for (int p = 1; p <= g.size(); ++p)
      if (g.elems()[p - 1] == 2 * p - 1) self_si = true;
    if (self_si) pool.push_back(g);
  }

  const int m = static_cast<int>(pool.size());
  std::vector<std::vector<bool>> compat(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      compat[i][j] = compat[j][i] =
          strongly_intersecting(pool[i], pool[j], horizon).has_value() &&
          !generated_by(pool[i], pool[j]) && !generated_by(pool[j], pool[i]);

  std::vector<PGS> out;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int next) -> void {
    std::vector<ZSet> members;
    for (int c : chosen) members.push_back(pool[c]);
    out.emplace_back(k, std::move(members));
    for (int j = next; j < m; ++j) {
      bool ok = true;
      for (int c : chosen)
        if (!compat[c][j]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(j);
      self(self, j + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mlcif
