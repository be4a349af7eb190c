#include "mlcif/zset.hpp"

#include <algorithm>
#include <sstream>

namespace mlcif {

ZSet::ZSet(std::initializer_list<int> elems)
    : ZSet(std::vector<int>(elems)) {}

ZSet::ZSet(std::vector<int> elems) : elems_(std::move(elems)) {
  bound_ = elems_.empty() ? 1 : elems_.back();
  init_check();
}

ZSet::ZSet(std::vector<int> elems, int bound)
    : elems_(std::move(elems)), bound_(bound) {
  init_check();
}

void ZSet::init_check() {
  if (bound_ < 1) throw input_error("ZSet: bound must be positive");
  int prev = 0;
  for (int e : elems_) {
    if (e <= prev)
      throw input_error("ZSet: elements must be strictly ascending and >= 1");
    if (e > bound_) throw input_error("ZSet: element exceeds bound");
    prev = e;
  }
  mask_ = 0;
  mask_valid_ = elems_.empty() || elems_.back() <= 64;
  if (mask_valid_)
    for (int e : elems_) mask_ |= std::uint64_t{1} << (e - 1);
}

bool ZSet::contains(int e) const {
  return std::binary_search(elems_.begin(), elems_.end(), e);
}

std::string ZSet::str() const { return "{" + csv() + "}"; }

std::string ZSet::csv() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) os << ',';
    os << elems_[i];
  }
  return os.str();
}

UniformFamily::UniformFamily(int n, int k, std::vector<ZSet> members)
    : n_(n), k_(k), members_(canonical_sets(std::move(members))) {
  if (n < 1 || k < 1 || k > n)
    throw input_error("UniformFamily: need 1 <= k <= n");
  for (const ZSet& m : members_) {
    if (m.size() != k)
      throw input_error("UniformFamily: member " + m.str() + " is not a " +
                        std::to_string(k) + "-set");
    if (m.max_elem() > n)
      throw input_error("UniformFamily: member " + m.str() +
                        " exceeds ground set [" + std::to_string(n) + "]");
  }
}

bool UniformFamily::contains(const ZSet& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

namespace {

// |x ∩ [ell]| without a bound check; valid for any ell >= 0.
int pcount(const std::vector<int>& xs, int ell) {
  int c = 0;
  for (int e : xs) {
    if (e > ell) break;
    ++c;
  }
  return c;
}

}  // namespace

int prefix_count(const ZSet& x, int ell) {
  if (ell < 1 || ell > x.bound())
    throw input_error("prefix_count: ell out of [1, bound]");
  return pcount(x.elems(), ell);
}

bool coordwise_leq(const ZSet& a, const ZSet& b) {
  if (a.size() != b.size())
    throw input_error("coordwise_leq: sets must have equal size");
  for (int i = 0; i < a.size(); ++i)
    if (a.elems()[i] > b.elems()[i]) return false;
  return true;
}

bool generated_by(const ZSet& a, const ZSet& b) {
  if (a.size() < b.size()) return false;
  for (int i = 0; i < b.size(); ++i)
    if (a.elems()[i] > b.elems()[i]) return false;
  return true;
}

bool disjoint(const ZSet& a, const ZSet& b) {
  if (a.mask_valid() && b.mask_valid()) return (a.mask() & b.mask()) == 0;
  auto ia = a.elems().begin(), ib = b.elems().begin();
  while (ia != a.elems().end() && ib != b.elems().end()) {
    if (*ia == *ib) return false;
    if (*ia < *ib)
      ++ia;
    else
      ++ib;
  }
  return true;
}

ZSet coordwise_min(const std::vector<ZSet>& sets) {
  if (sets.empty()) throw input_error("coordwise_min: empty input list");
  int d = 0, bound = 1;
  for (const ZSet& s : sets) {
    if (s.empty()) throw input_error("coordwise_min: empty member");
    d = std::max(d, s.size());
    bound = std::max(bound, s.bound());
  }
  std::vector<int> out(d);
  for (int i = 0; i < d; ++i) {
    int m = 0;  // 0 stands in for +infinity until a finite coordinate appears
    for (const ZSet& s : sets)
      if (i < s.size() && (m == 0 || s.elems()[i] < m)) m = s.elems()[i];
    out[i] = m;
  }
  return ZSet(std::move(out), bound);
}

namespace {

void closure_rec(const std::vector<int>& bound, std::vector<int>& cur,
                 std::size_t i, std::vector<ZSet>& out) {
  if (i == bound.size()) {
    out.emplace_back(cur);
    return;
  }
  int lo = i == 0 ? 1 : cur[i - 1] + 1;
  for (int v = lo; v <= bound[i]; ++v) {
    cur[i] = v;
    closure_rec(bound, cur, i + 1, out);
  }
}

}  // namespace

UniformFamily compression_closure(const ZSet& a) {
  if (a.empty()) throw input_error("compression_closure: empty set");
  std::vector<ZSet> out;
  std::vector<int> cur(a.size());
  closure_rec(a.elems(), cur, 0, out);
  return UniformFamily(a.bound(), a.size(), std::move(out));
}

std::vector<ZSet> maximal_elements(std::vector<ZSet> family, SetOrder order) {
  family = canonical_sets(std::move(family));
  if (order == SetOrder::coordwise)
    for (const ZSet& s : family)
      if (s.size() != family.front().size())
        throw input_error("maximal_elements: mixed sizes under coordwise order");
  auto below = [&](const ZSet& a, const ZSet& b) {
    return order == SetOrder::coordwise ? coordwise_leq(a, b)
                                        : generated_by(a, b);
  };
  std::vector<ZSet> out;
  for (const ZSet& a : family) {
    bool dominated = false;
    for (const ZSet& b : family)
      if (a != b && below(a, b)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(a);
  }
  return out;
}

bool is_left_compressed(const UniformFamily& fam) {
  for (const ZSet& a : fam.members()) {
    std::vector<int> e = a.elems();
    for (std::size_t i = 0; i < e.size(); ++i) {
      int prev = i == 0 ? 0 : e[i - 1];
      if (e[i] - 1 <= prev) continue;  // decrement not a valid set
      --e[i];
      if (!fam.contains(ZSet(e, fam.n()))) return false;
      ++e[i];
    }
  }
  return true;
}

std::vector<ZSet> canonical_sets(std::vector<ZSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

UniformFamily family_union(const UniformFamily& a, const UniformFamily& b) {
  if (a.n() != b.n() || a.k() != b.k())
    throw input_error("family_union: mismatched n or k");
  std::vector<ZSet> merged = a.members();
  merged.insert(merged.end(), b.members().begin(), b.members().end());
  return UniformFamily(a.n(), a.k(), std::move(merged));
}

ZSet parse_zset(const std::string& text, std::optional<int> bound) {
  std::vector<int> elems;
  std::string tok;
  std::string cleaned;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned += c;
  std::istringstream is(cleaned);
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw input_error("parse_zset: empty element in '" + text + "'");
    std::size_t pos = 0;
    int v;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw input_error("parse_zset: bad element '" + tok + "'");
    }
    if (pos != tok.size()) throw input_error("parse_zset: bad element '" + tok + "'");
    elems.push_back(v);
  }
  if (bound) {
    int b = std::max(*bound, elems.empty() ? 1 : elems.back());
    if (b != *bound) throw input_error("parse_zset: element exceeds bound");
    return ZSet(std::move(elems), *bound);
  }
  return ZSet(std::move(elems));
}

std::vector<ZSet> parse_set_list(const std::string& text,
                                 std::optional<int> bound) {
  std::string cleaned;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned += c;
  std::vector<ZSet> out;
  if (cleaned.empty()) return out;
  std::istringstream is(cleaned);
  std::string tok;
  while (std::getline(is, tok, ';')) out.push_back(parse_zset(tok, bound));
  return out;
}

std::string set_list_str(const std::vector<ZSet>& sets) {
  std::string s;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) s += ' ';
    s += sets[i].str();
  }
  return s.empty() ? "{}" : s;
}

}  // namespace mlcif
