#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mlcif/zset.hpp"

namespace mlcif {

/// A level ell with prefix_count(G, ell) + prefix_count(H, ell) > ell,
/// certifying that every pair below (G, H) meets.
struct SiWitness {
  int ell;
};

/// A pair s <= g, t <= h with s ∩ t = ∅, certifying the opposite.
struct DisjointWitness {
  ZSet s;
  ZSet t;
};

/// Smallest ell in [1, n] whose prefix counts sum past ell, or absent when no
/// level exists. g and h must be non-empty subsets of [n].
std::optional<SiWitness> strongly_intersecting(const ZSet& g, const ZSet& h,
                                               int n);

/// For a strongly intersecting pair, the indices (p, q) with
/// g_p = h_q = p + q - 1, derived from the minimal witness level.
/// Throws contract_error when the pair is not strongly intersecting.
std::pair<int, int> si_meet_indices(const ZSet& g, const ZSet& h);

/// Brute-force search over compression_closure(g) x compression_closure(h)
/// for a disjoint pair; returns the lexicographically least one. This is the
/// independent oracle for strongly_intersecting.
std::optional<DisjointWitness> disjoint_witness(const ZSet& g, const ZSet& h);

/// Every pair of generators, self-pairs included, is strongly intersecting.
/// Vacuously true for the empty list; empty generators are rejected.
bool strongly_intersecting_family(const std::vector<ZSet>& gens, int n);

}  // namespace mlcif
