#include "mlcif/counting.hpp"

#include <map>

#include "mlcif/build.hpp"

namespace mlcif {

BigInt binom(long long n, long long r) {
  if (r < 0 || n < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  BigInt out = 1;
  for (long long i = 1; i <= r; ++i) {
    out *= n - r + i;
    out /= i;  // exact: the running product of i consecutive terms
  }
  return out;
}

namespace {

BigInt closure_count_rec(const std::vector<int>& seq,
                         std::map<std::vector<int>, BigInt>& memo) {
  if (seq.empty()) return 1;
  for (std::size_t j = 0; j < seq.size(); ++j)
    if (seq[j] < static_cast<int>(j) + 1) return 0;
  auto it = memo.find(seq);
  if (it != memo.end()) return it->second;
  BigInt total = 0;
  std::vector<int> rest(seq.size() - 1);
  for (int i = 1; i <= seq[0]; ++i) {
    for (std::size_t j = 1; j < seq.size(); ++j) rest[j - 1] = seq[j] - i;
    total += closure_count_rec(rest, memo);
  }
  memo[seq] = total;
  return total;
}

BigInt closure_count_seq(const std::vector<int>& seq) {
  thread_local std::map<std::vector<int>, BigInt> memo;
  return closure_count_rec(seq, memo);
}

}  // namespace

BigInt closure_count(const ZSet& g) { return closure_count_seq(g.elems()); }

BigInt interval_closure_count(int a, int b) {
  if (a > b) throw input_error("interval_closure_count: need a <= b");
  return binom(b, a - 1);
}

BigInt generated_count(int n, int k, const ZSet& g) {
  int r = g.size();
  if (r == 0) throw input_error("generated_count: empty generator");
  if (r > k) throw input_error("generated_count: generator larger than k");
  if (k > n || k < 1) throw input_error("generated_count: need 1 <= k <= n");
  if (g.max_elem() > n)
    throw input_error("generated_count: generator exceeds ground set");
  if (g.max_elem() >= n - k + r + 1)
    throw input_error("generated_count: generator " + g.str() +
                      " collides with the padding interval [" +
                      std::to_string(n - k + r + 1) + "," + std::to_string(n) +
                      "]");
  std::vector<int> seq = g.elems();
  for (int v = n - k + r + 1; v <= n; ++v) seq.push_back(v);
  return closure_count_seq(seq);
}

namespace {

void check_ahm_params(int n, int k, int b, const char* who) {
  if (b < 4 || b > k + 1)
    throw input_error(std::string(who) + ": need 4 <= b <= k+1");
  if (n < 2 * k) throw input_error(std::string(who) + ": need n >= 2k");
}

}  // namespace

BigInt ahm_size(int n, int k, int b) {
  check_ahm_params(n, k, b, "ahm_size");
  return binom(n - 1, k - 1) - binom(n - b, k - 1) + binom(n - b, k - b + 1);
}

BigInt star_meet_count(int n, int k, int d) {
  if (k < 1 || k > n) throw input_error("star_meet_count: need 1 <= k <= n");
  if (d < 0 || d > n - 1)
    throw input_error("star_meet_count: need 0 <= d <= n-1");
  return binom(n - 1, k - 1) - binom(n - d - 1, k - 1);
}

BigInt ahm_meet_count_overlap(int n, int k, int b, int d, int mu_b) {
  check_ahm_params(n, k, b, "ahm_meet_count_overlap");
  if (mu_b == 0)
    throw input_error(
        "ahm_meet_count_overlap: X avoids [2,b], use the disjoint case");
  if (mu_b < 0 || mu_b > d || mu_b > b - 1 || d > n - 1)
    throw input_error("ahm_meet_count_overlap: bad (d, mu_b)");
  return binom(n - 1, k - 1) - binom(n - b, k - 1) + binom(n - b, k - b + 1) -
         binom(n - d - 1, k - 1) + binom(n - d - b + mu_b, k - 1);
}

BigInt ahm_meet_count_disjoint(int n, int k, int b, int d) {
  check_ahm_params(n, k, b, "ahm_meet_count_disjoint");
  if (d < 0 || d > n - b)
    throw input_error("ahm_meet_count_disjoint: need 0 <= d <= n-b");
  return binom(n - 1, k - 1) - binom(n - b, k - 1) + binom(n - b, k - b + 1) -
         binom(n - d - 1, k - 1) + binom(n - d - b, k - 1) -
         binom(n - d - b, k - b + 1);
}

BigInt ahm_avoid_count_disjoint(int n, int k, int b, int d) {
  check_ahm_params(n, k, b, "ahm_avoid_count_disjoint");
  if (d < 0 || d > n - b)
    throw input_error("ahm_avoid_count_disjoint: need 0 <= d <= n-b");
  return binom(n - d - 1, k - 1) - binom(n - d - b, k - 1) +
         binom(n - b - d, k - b + 1);
}

std::pair<BigInt, BigInt> partition_by_meet(const UniformFamily& fam,
                                            const ZSet& x) {
  if (x.max_elem() > fam.n())
    throw input_error("partition_by_meet: test set exceeds ground set");
  BigInt meet = 0, avoid = 0;
  for (const ZSet& m : fam.members())
    (disjoint(m, x) ? avoid : meet) += 1;
  return {meet, avoid};
}

CountReport compare_with_star(int n, int k, int b, const ZSet& x,
                              bool by_enumeration) {
  check_ahm_params(n, k, b, "compare_with_star");
  if (x.contains(1))
    throw input_error("compare_with_star: test set must lie in [2,n]");
  if (x.max_elem() > n)
    throw input_error("compare_with_star: test set exceeds ground set");

  CountReport rep;
  rep.n = n;
  rep.k = k;
  rep.b = b;
  rep.d = x.size();
  rep.mu_b = 0;
  for (int e : x.elems())
    if (e <= b) ++rep.mu_b;
  rep.si_case = rep.mu_b >= 1 ? 1 : 2;

  if (by_enumeration) {
    std::vector<int> iv;
    for (int v = 2; v <= b; ++v) iv.push_back(v);
    PGS pgs(k, {ZSet(iv)});
    UniformFamily fam = build_mlcif(n, k, pgs).family;
    UniformFamily star = materialize(n, k, {ZSet{1}});
    rep.a_total = BigInt(fam.size());
    auto [ax, a0x] = partition_by_meet(fam, x);
    rep.a_x = ax;
    rep.a0_x = a0x;
    rep.s_x = partition_by_meet(star, x).first;
    rep.method = "enumeration";
  } else {
    rep.a_total = ahm_size(n, k, b);
    rep.a_x = rep.si_case == 1
                  ? ahm_meet_count_overlap(n, k, b, rep.d, rep.mu_b)
                  : ahm_meet_count_disjoint(n, k, b, rep.d);
    rep.a0_x = rep.a_total - rep.a_x;
    rep.s_x = star_meet_count(n, k, rep.d);
    rep.method = "formula";
  }
  rep.verdict = rep.a_x < rep.s_x ? '<' : (rep.a_x > rep.s_x ? '>' : '=');
  return rep;
}

}  // namespace mlcif
