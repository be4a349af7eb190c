#include "mlcif/classify.hpp"

#include <algorithm>

namespace mlcif {

std::string RecognizedForm::str() const {
  switch (tag) {
    case FamilyForm::star: return "star";
    case FamilyForm::a23: return "a23";
    case FamilyForm::ahm: return "ahm(" + std::to_string(b) + ")";
    case FamilyForm::hilton_milner: return "hilton_milner";
    case FamilyForm::two_maxgen:
      return "two_maxgen(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case FamilyForm::other: return "other";
  }
  return "other";
}

RecognizedForm parse_recognized_form(const std::string& s) {
  RecognizedForm f;
  if (s == "star") f.tag = FamilyForm::star;
  else if (s == "a23") f.tag = FamilyForm::a23;
  else if (s == "hilton_milner") f.tag = FamilyForm::hilton_milner;
  else if (s == "other") f.tag = FamilyForm::other;
  else if (s.rfind("ahm(", 0) == 0 && s.back() == ')') {
    f.tag = FamilyForm::ahm;
    f.a = 2;
    f.b = std::stoi(s.substr(4, s.size() - 5));
  } else if (s.rfind("two_maxgen(", 0) == 0 && s.back() == ')') {
    f.tag = FamilyForm::two_maxgen;
    std::string body = s.substr(11, s.size() - 12);
    auto comma = body.find(',');
    if (comma == std::string::npos)
      throw input_error("parse_recognized_form: bad tag '" + s + "'");
    f.a = std::stoi(body.substr(0, comma));
    f.b = std::stoi(body.substr(comma + 1));
  } else {
    throw input_error("parse_recognized_form: unknown tag '" + s + "'");
  }
  return f;
}

namespace {

bool is_interval(const ZSet& g) {
  return !g.empty() && g.max_elem() - g.min_elem() + 1 == g.size();
}

// Try to read two maximal generators as [a,b] plus {1} ∪ [b-a+2, b].
TwoMaxgenForm interval_pair_form(const std::vector<ZSet>& max_gens) {
  const ZSet* free1 = nullptr;  // the generator without 1
  const ZSet* star1 = nullptr;  // the generator containing 1
  for (const ZSet& g : max_gens) (g.contains(1) ? star1 : free1) = &g;
  if (!free1 || !star1)
    return {std::nullopt, "maximal generators do not split into a 1-free and "
                          "a 1-containing one"};
  if (!is_interval(*free1))
    return {std::nullopt,
            "1-free maximal generator " + free1->str() + " is not an interval"};
  int a = free1->min_elem(), b = free1->max_elem();
  if (b <= 2 * a - 1)
    return {std::nullopt, "interval [" + std::to_string(a) + "," +
                              std::to_string(b) + "] needs b > 2a-1"};
  std::vector<int> want{1};
  for (int v = b - a + 2; v <= b; ++v) want.push_back(v);
  if (star1->elems() != want)
    return {std::nullopt, "1-containing maximal generator " + star1->str() +
                              " is not {1} ∪ [" + std::to_string(b - a + 2) +
                              "," + std::to_string(b) + "]"};
  return {std::make_pair(a, b), ""};
}

}  // namespace

FamilyProfile profile(const GeneratingSet& gens) {
  FamilyProfile prof;
  std::vector<ZSet> all = gens.all();
  if (all.empty()) throw input_error("profile: empty generating set");
  prof.rank = all.front().size();
  for (const ZSet& g : all) prof.rank = std::min(prof.rank, g.size());
  prof.max_gens = maximal_elements(all, SetOrder::generated);
  prof.max_gen_count = static_cast<int>(prof.max_gens.size());

  prof.form.tag = FamilyForm::other;
  if (prof.max_gens == std::vector<ZSet>{ZSet{1}}) {
    prof.form.tag = FamilyForm::star;
  } else if (prof.max_gens == std::vector<ZSet>{ZSet{2, 3}}) {
    prof.form.tag = FamilyForm::a23;
    prof.form.a = 2;
    prof.form.b = 3;
  } else if (prof.max_gen_count == 2) {
    TwoMaxgenForm m = interval_pair_form(prof.max_gens);
    if (m.ab) {
      auto [a, b] = *m.ab;
      prof.form.a = a;
      prof.form.b = b;
      if (a == 2)
        prof.form.tag = b == gens.pgs.k() + 1 ? FamilyForm::hilton_milner
                                              : FamilyForm::ahm;
      else
        prof.form.tag = FamilyForm::two_maxgen;
    }
  }
  return prof;
}

TwoMaxgenForm match_two_maxgen(const GeneratingSet& gens) {
  FamilyProfile prof = profile(gens);
  if (prof.max_gen_count != 2)
    throw contract_error("match_two_maxgen: family has " +
                         std::to_string(prof.max_gen_count) +
                         " maximal generators, not 2");
  return interval_pair_form(prof.max_gens);
}

BuiltFamily make_named(NamedFamily name, int n, int k, std::optional<int> b) {
  auto interval_pgs = [&](int lo, int hi) {
    std::vector<int> iv;
    for (int v = lo; v <= hi; ++v) iv.push_back(v);
    return PGS(k, {ZSet(std::move(iv))});
  };
  switch (name) {
    case NamedFamily::star:
      return build_mlcif(n, k, PGS(k, {}));
    case NamedFamily::a23:
      return build_mlcif(n, k, interval_pgs(2, 3));
    case NamedFamily::hilton_milner:
      return build_mlcif(n, k, interval_pgs(2, k + 1));
    case NamedFamily::ahm: {
      if (!b) throw input_error("make_named: ahm requires b");
      if (*b < 4 || *b > k + 1)
        throw input_error("make_named: ahm requires 4 <= b <= k+1");
      return build_mlcif(n, k, interval_pgs(2, *b));
    }
  }
  throw input_error("make_named: unknown family");
}

}  // namespace mlcif
