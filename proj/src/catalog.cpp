#include "mlcif/catalog.hpp"

#include <json.hpp>
#include <ostream>
#include <sstream>

namespace mlcif {

using ordered_json = nlohmann::ordered_json;

bool CatalogRecord::operator==(const CatalogRecord& o) const {
  return k == o.k && pgs == o.pgs && hgens == o.hgens && rank == o.rank &&
         max_gen_count == o.max_gen_count &&
         recognized_form == o.recognized_form && size_at == o.size_at;
}

std::vector<CatalogRecord> build_catalog(int k, const std::vector<int>& ns,
                                         int max_k_budget, int max_n_budget) {
  for (int n : ns) {
    if (n < 2 * k) throw input_error("build_catalog: need n >= 2k");
    if (n > max_n_budget)
      throw resource_error("build_catalog: n exceeds the configured budget of " +
                           std::to_string(max_n_budget));
  }
  std::vector<CatalogRecord> out;
  for (const PGS& pgs : enumerate_pgs(k, max_k_budget)) {
    CatalogRecord rec;
    rec.k = k;
    rec.pgs = pgs.members();
    GeneratingSet gens{pgs, star_side_generators(pgs)};
    rec.hgens = gens.hgens;
    FamilyProfile prof = profile(gens);
    rec.rank = prof.rank;
    rec.max_gen_count = prof.max_gen_count;
    rec.recognized_form = prof.form.str();
    for (int n : ns)
      rec.size_at[n] = BigInt(build_mlcif(n, k, pgs).family.size());
    out.push_back(std::move(rec));
  }
  return out;
}

namespace {

ordered_json sets_to_json(const std::vector<ZSet>& sets) {
  ordered_json arr = ordered_json::array();
  for (const ZSet& s : sets) arr.push_back(s.elems());
  return arr;
}

std::vector<ZSet> sets_from_json(const ordered_json& arr, int bound) {
  std::vector<ZSet> out;
  for (const auto& item : arr)
    out.emplace_back(item.get<std::vector<int>>(), bound);
  return out;
}

ordered_json record_to_ojson(const CatalogRecord& rec) {
  ordered_json j;
  j["k"] = rec.k;
  j["pgs"] = sets_to_json(rec.pgs);
  j["hgens"] = sets_to_json(rec.hgens);
  j["rank"] = rec.rank;
  j["max_gen_count"] = rec.max_gen_count;
  j["recognized_form"] = rec.recognized_form;
  ordered_json sizes = ordered_json::object();
  for (const auto& [n, count] : rec.size_at)
    sizes[std::to_string(n)] = count.str();
  j["size_at"] = sizes;
  return j;
}

CatalogRecord record_from_ojson(const ordered_json& j) {
  CatalogRecord rec;
  rec.k = j.at("k").get<int>();
  int bound = std::max(2 * rec.k - 1, 1);
  rec.pgs = sets_from_json(j.at("pgs"), bound);
  rec.hgens = sets_from_json(j.at("hgens"), bound);
  rec.rank = j.at("rank").get<int>();
  rec.max_gen_count = j.at("max_gen_count").get<int>();
  rec.recognized_form = j.at("recognized_form").get<std::string>();
  parse_recognized_form(rec.recognized_form);  // reject unknown tags
  for (const auto& [key, val] : j.at("size_at").items())
    rec.size_at[std::stoi(key)] = BigInt(val.get<std::string>());
  return rec;
}

}  // namespace

std::string record_to_json(const CatalogRecord& rec) {
  return record_to_ojson(rec).dump();
}

CatalogRecord record_from_json(const std::string& text) {
  try {
    return record_from_ojson(ordered_json::parse(text));
  } catch (const ordered_json::exception& e) {
    throw input_error(std::string("record_from_json: ") + e.what());
  }
}

void write_catalog(std::ostream& os, const std::vector<CatalogRecord>& recs,
                   bool ndjson) {
  if (ndjson) {
    for (const CatalogRecord& rec : recs) os << record_to_json(rec) << '\n';
    return;
  }
  ordered_json arr = ordered_json::array();
  for (const CatalogRecord& rec : recs) arr.push_back(record_to_ojson(rec));
  os << arr.dump(2) << '\n';
}

std::vector<CatalogRecord> read_catalog(std::istream& is, bool revalidate,
                                        int max_n_budget) {
  std::vector<CatalogRecord> out;
  std::string all(std::istreambuf_iterator<char>(is), {});
  std::size_t first = all.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw input_error("read_catalog: empty input");
  try {
    if (all[first] == '[') {
      for (const auto& item : ordered_json::parse(all))
        out.push_back(record_from_ojson(item));
    } else {
      std::istringstream lines(all);
      std::string line;
      while (std::getline(lines, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(record_from_ojson(ordered_json::parse(line)));
      }
    }
  } catch (const ordered_json::exception& e) {
    throw input_error(std::string("read_catalog: ") + e.what());
  }
  if (revalidate) {
    for (const CatalogRecord& rec : out) {
      PGS pgs(rec.k, rec.pgs);
      for (const auto& [n, count] : rec.size_at) {
        if (n > max_n_budget)
          throw resource_error("read_catalog: revalidation at n=" +
                               std::to_string(n) + " exceeds the budget");
        BigInt actual(build_mlcif(n, rec.k, pgs).family.size());
        if (actual != count)
          throw input_error("read_catalog: stored size " + count.str() +
                            " at n=" + std::to_string(n) +
                            " does not match rebuilt size " + actual.str());
      }
    }
  }
  return out;
}

void write_family_file(std::ostream& os, const UniformFamily& fam) {
  os << "n=" << fam.n() << " k=" << fam.k() << '\n';
  for (const ZSet& m : fam.members()) os << m.csv() << '\n';
}

UniformFamily read_family_file(std::istream& is) {
  std::string line;
  int n = 0, k = 0;
  bool have_header = false;
  std::vector<ZSet> members;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    if (!have_header) {
      if (std::sscanf(line.c_str() + start, "n=%d k=%d", &n, &k) != 2)
        throw input_error("read_family_file: expected header 'n=<n> k=<k>'");
      have_header = true;
      continue;
    }
    ZSet s = parse_zset(line.substr(start), n);
    if (s.size() != k)
      throw input_error("read_family_file: " + s.str() + " is not a " +
                        std::to_string(k) + "-set");
    members.push_back(std::move(s));
  }
  if (!have_header) throw input_error("read_family_file: missing header");
  return UniformFamily(n, k, std::move(members));
}

}  // namespace mlcif
