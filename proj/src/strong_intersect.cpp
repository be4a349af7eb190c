#include "mlcif/strong_intersect.hpp"

#include <algorithm>

namespace mlcif {

namespace {

int pcount(const ZSet& x, int ell) {
  int c = 0;
  for (int e : x.elems()) {
    if (e > ell) break;
    ++c;
  }
  return c;
}

// Past ell = |g| + |h| - 1 the prefix counts are capped by |g| + |h| <= ell,
// so scanning [1, min(n, |g|+|h|-1)] is complete.
std::optional<int> min_witness(const ZSet& g, const ZSet& h, int n) {
  int limit = std::min(n, g.size() + h.size() - 1);
  for (int ell = 1; ell <= limit; ++ell)
    if (pcount(g, ell) + pcount(h, ell) > ell) return ell;
  return std::nullopt;
}

}  // namespace

std::optional<SiWitness> strongly_intersecting(const ZSet& g, const ZSet& h,
                                               int n) {
  if (g.empty() || h.empty())
    throw input_error("strongly_intersecting: empty generator");
  if (n < 1 || g.max_elem() > n || h.max_elem() > n)
    throw input_error("strongly_intersecting: generators must lie in [n]");
  auto ell = min_witness(g, h, n);
  if (!ell) return std::nullopt;
  return SiWitness{*ell};
}

std::pair<int, int> si_meet_indices(const ZSet& g, const ZSet& h) {
  if (g.empty() || h.empty())
    throw input_error("si_meet_indices: empty generator");
  auto ell = min_witness(g, h, g.size() + h.size() - 1);
  if (!ell)
    throw contract_error("si_meet_indices: pair is not strongly intersecting");
  // At the minimal level both prefix counts step up, so ell lies in g ∩ h.
  int p = pcount(g, *ell);
  int q = pcount(h, *ell);
  return {p, q};
}

std::optional<DisjointWitness> disjoint_witness(const ZSet& g, const ZSet& h) {
  if (g.empty() || h.empty())
    throw input_error("disjoint_witness: empty generator");
  const auto ls = compression_closure(g).members();
  const auto lt = compression_closure(h).members();
  for (const ZSet& s : ls)
    for (const ZSet& t : lt)
      if (disjoint(s, t)) return DisjointWitness{s, t};
  return std::nullopt;
}

bool strongly_intersecting_family(const std::vector<ZSet>& gens, int n) {
  for (const ZSet& g : gens)
    if (g.empty())
      throw input_error("strongly_intersecting_family: empty generator");
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j)
      if (!strongly_intersecting(gens[i], gens[j], n)) return false;
  return true;
}

}  // namespace mlcif
