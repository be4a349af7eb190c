#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>

#include "mlcif/zset.hpp"

namespace mlcif {

using BigInt = boost::multiprecision::cpp_int;

/// Exact C(n, r); 0 when r < 0, r > n, or n < 0.
BigInt binom(long long n, long long r);

/// |compression_closure(g)| by the first-element recursion
///   |L(g_1..g_r)| = sum_{i=1}^{g_1} |L(g_2-i, ..., g_r-i)|
/// with |L()| = 1 and |L(seq)| = 0 once some coordinate drops below its index.
BigInt closure_count(const ZSet& g);

/// |L([a,b])| = C(b, a-1). Requires a <= b.
BigInt interval_closure_count(int a, int b);

/// Number of k-sets of [n] generated by g, counted exactly as the closure of
/// g padded with the top interval [n-k+|g|+1, n]. The padding must not
/// collide with g.
BigInt generated_count(int n, int k, const ZSet& g);

/// Size of the rank-2 family generated by {[2,b]} together with its star-side
/// companion {1,b}:  C(n-1,k-1) - C(n-b,k-1) + C(n-b,k-b+1).
/// Requires 4 <= b <= k+1 and n >= 2k.
BigInt ahm_size(int n, int k, int b);

/// Star members meeting a d-subset of [2,n]: C(n-1,k-1) - C(n-d-1,k-1).
/// Independent of which d elements form the test set.
BigInt star_meet_count(int n, int k, int d);

/// Members of the ahm family meeting X when X ∩ [2,b] is non-empty;
/// mu_b = |X ∩ [b]| must satisfy 1 <= mu_b <= min(d, b-1).
BigInt ahm_meet_count_overlap(int n, int k, int b, int d, int mu_b);

/// Members of the ahm family meeting X when X ∩ [2,b] is empty (d <= n-b).
BigInt ahm_meet_count_disjoint(int n, int k, int b, int d);

/// Members avoiding X in the same case:
///   C(n-d-1,k-1) - C(n-d-b,k-1) + C(n-b-d,k-b+1).
BigInt ahm_avoid_count_disjoint(int n, int k, int b, int d);

/// Exact partition of fam into (members meeting x, members avoiding x).
std::pair<BigInt, BigInt> partition_by_meet(const UniformFamily& fam,
                                            const ZSet& x);

struct CountReport {
  int n = 0, k = 0, b = 0;
  int d = 0;          // |X|
  int mu_b = 0;       // |X ∩ [b]|
  int si_case = 0;    // 1: X meets [2,b]; 2: X avoids [2,b]
  BigInt a_total, a_x, a0_x, s_x;
  std::string method;  // "formula" or "enumeration"
  char verdict = '?';  // a_x vs s_x: '<', '=', '>'
};

/// Full comparison of the rank-2 family against the Star over a test set
/// X ⊆ [2,n]. Routes to the overlap/disjoint case by |X ∩ [b]|. When
/// by_enumeration is set, every count is produced by materializing the
/// families and filtering instead of by formula.
CountReport compare_with_star(int n, int k, int b, const ZSet& x,
                              bool by_enumeration = false);

}  // namespace mlcif
