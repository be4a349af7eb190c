#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "mlcif/errors.hpp"

namespace mlcif {

/// A finite subset of [1, bound], stored strictly ascending.
///
/// Equality and ordering are defined on the element list alone; the bound is
/// metadata carried for range checks. A bitmask mirror is kept whenever every
/// element fits in 64 bits and is used to speed up disjointness tests.
class ZSet {
 public:
  ZSet() = default;  // empty set over [1]
  ZSet(std::initializer_list<int> elems);
  explicit ZSet(std::vector<int> elems);
  ZSet(std::vector<int> elems, int bound);

  bool empty() const { return elems_.empty(); }
  int size() const { return static_cast<int>(elems_.size()); }
  const std::vector<int>& elems() const { return elems_; }
  int bound() const { return bound_; }
  int max_elem() const { return elems_.empty() ? 0 : elems_.back(); }
  int min_elem() const { return elems_.empty() ? 0 : elems_.front(); }
  bool contains(int e) const;

  bool mask_valid() const { return mask_valid_; }
  std::uint64_t mask() const { return mask_; }

  bool operator==(const ZSet& o) const { return elems_ == o.elems_; }
  bool operator!=(const ZSet& o) const { return elems_ != o.elems_; }
  bool operator<(const ZSet& o) const { return elems_ < o.elems_; }

  std::string str() const;  // "{2,3,5}"
  std::string csv() const;  // "2,3,5"

 private:
  std::vector<int> elems_;
  int bound_ = 1;
  std::uint64_t mask_ = 0;
  bool mask_valid_ = true;

  void init_check();
};

/// A set of k-subsets of [n]; members are kept sorted and unique.
class UniformFamily {
 public:
  UniformFamily(int n, int k, std::vector<ZSet> members);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<ZSet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const ZSet& s) const;

  bool operator==(const UniformFamily& o) const {
    return n_ == o.n_ && k_ == o.k_ && members_ == o.members_;
  }

 private:
  int n_ = 1;
  int k_ = 1;
  std::vector<ZSet> members_;
};

/// |x ∩ [ell]|. Requires 1 <= ell <= x.bound().
int prefix_count(const ZSet& x, int ell);

/// Coordinatewise order on equal-size sets: a_i <= b_i for all i.
bool coordwise_leq(const ZSet& a, const ZSet& b);

/// a is generated by b: |a| >= |b| and a_i <= b_i on the first |b| coordinates.
/// Every set is generated by the empty set.
bool generated_by(const ZSet& a, const ZSet& b);

bool disjoint(const ZSet& a, const ZSet& b);

/// Coordinatewise minimum of non-empty sets, padding short sets with +infinity.
/// The result has the size of the largest input.
ZSet coordwise_min(const std::vector<ZSet>& sets);

/// All |a|-sets coordinatewise below a (the left-compression closure of a).
UniformFamily compression_closure(const ZSet& a);

enum class SetOrder { coordwise, generated };

/// Members of `family` not strictly dominated by another member under the
/// chosen order, in lexicographic order. Duplicates are merged first.
/// Under SetOrder::coordwise all members must have equal size.
std::vector<ZSet> maximal_elements(std::vector<ZSet> family, SetOrder order);

/// Downward closure test under the coordinatewise order. Uses single-coordinate
/// decrements, which generate the order, instead of enumerating full closures.
bool is_left_compressed(const UniformFamily& fam);

/// Sort lexicographically and drop duplicates.
std::vector<ZSet> canonical_sets(std::vector<ZSet> sets);

/// Merge two sorted unique member lists into one family.
UniformFamily family_union(const UniformFamily& a, const UniformFamily& b);

/// Parse "2,3,5" (strictly ascending, positive). Empty string -> empty set.
ZSet parse_zset(const std::string& text, std::optional<int> bound = {});

/// Parse "2,3;2,4,5" into a list of sets. Whitespace is ignored.
std::vector<ZSet> parse_set_list(const std::string& text,
                                 std::optional<int> bound = {});

std::string set_list_str(const std::vector<ZSet>& sets);

}  // namespace mlcif
