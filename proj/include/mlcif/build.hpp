#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mlcif/strong_intersect.hpp"
#include "mlcif/zset.hpp"

namespace mlcif {

enum class GkBranch { all, with1, without1 };

/// All generators g ⊆ [2k-1] with 1 <= |g| <= k and max(g) <= k + |g| - 1,
/// filtered by whether they contain 1. Requires k >= 2.
std::vector<ZSet> generator_universe(int k, GkBranch branch);

/// A principal generating set: 1-free generators from the universe that are
/// pairwise (and self) strongly intersecting and form an antichain under the
/// generated-by order. The constructor enforces all invariants.
class PGS {
 public:
  PGS(int k, std::vector<ZSet> members);

  int k() const { return k_; }
  const std::vector<ZSet>& members() const { return members_; }
  bool empty() const { return members_.empty(); }
  int size() const { return static_cast<int>(members_.size()); }

  bool operator==(const PGS& o) const {
    return k_ == o.k_ && members_ == o.members_;
  }
  bool operator<(const PGS& o) const {
    if (members_.size() != o.members_.size())
      return members_.size() < o.members_.size();
    return members_ < o.members_;
  }

 private:
  int k_;
  std::vector<ZSet> members_;
};

struct PgsValidation {
  std::optional<PGS> pgs;               // set when every check passed
  std::vector<std::string> violations;  // one entry per violated condition
  bool ok() const { return pgs.has_value(); }
};

/// Check universe membership, pairwise + self strong intersection, and
/// antichain canonicality. Violations are reported, never repaired.
PgsValidation validate_pgs(int k, std::vector<ZSet> members);

/// The star-side companion of a 1-free generator at index i (1-based):
/// {1} ∪ [i+1, g_i].
ZSet companion(const ZSet& gen, int i);

/// One index per PGS member, each in [1, |member|].
struct WedgeSelection {
  std::vector<int> indices;
};

/// The 1-containing half of the generating set: the generated-by-maximal
/// values of companion wedges over all selections. The empty PGS yields {{1}}
/// (the Star convention).
std::vector<ZSet> star_side_generators(const PGS& pgs);

/// Companion wedge of one selection, evaluated through the reduced
/// closed form (drop dominated companions, then a union of intervals).
/// Equals coordwise_min over the raw companions.
ZSet normalized_wedge(const PGS& pgs, const WedgeSelection& sel);

/// All k-sets of [n] generated by some member of gens, by ascending-prefix
/// enumeration with pruning. Requires 4 <= 2k <= n and |g| <= k for all g.
UniformFamily materialize(int n, int k, const std::vector<ZSet>& gens);

struct GeneratingSet {
  PGS pgs;
  std::vector<ZSet> hgens;  // star-side generators
  std::vector<ZSet> all() const;
};

struct BuiltFamily {
  UniformFamily family;
  GeneratingSet gens;
};

/// The maximal left-compressed intersecting family determined by a PGS:
/// the union of the families generated by the PGS and by its star side.
BuiltFamily build_mlcif(int n, int k, const PGS& pgs);

struct MlcifCheck {
  bool ok = false;
  std::string reason;          // "not intersecting" | "not left-compressed" |
                               // "not maximal" when !ok
  std::vector<ZSet> witness;   // offending pair, missing set, or addable set
  std::string describe() const;
};

/// Definitional check: pairwise intersecting, left-compressed, and no k-set
/// outside the family can be added without breaking the intersecting property.
MlcifCheck check_mlcif(const UniformFamily& fam);

struct RecoveredPgs {
  PGS pgs;
  std::vector<ZSet> hgens;
};

/// Read the PGS back off a family: truncate the coordinatewise-maximal
/// members at the last index i with a_i < i + k, split by membership of 1,
/// and keep the generated-by-maximal sets on each side.
/// Throws contract_error (with the check_mlcif diagnostic) on a non-MLCIF.
RecoveredPgs recover_pgs(const UniformFamily& fam);

/// Rebuild fam's family over the ground set [n_new]; the generating set is
/// unchanged. Requires fam to be an MLCIF and n_new >= 2k.
UniformFamily extend_family(const UniformFamily& fam, int n_new);

/// All canonical PGSs for k, the empty one included, in canonical order
/// (by size, then lexicographically). Requires 2 <= k <= max_k_budget.
std::vector<PGS> enumerate_pgs(int k, int max_k_budget = 5);

}  // namespace mlcif
