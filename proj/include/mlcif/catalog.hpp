#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "mlcif/classify.hpp"
#include "mlcif/counting.hpp"

namespace mlcif {

/// One catalogued family: its generating set, profile, and exact sizes at the
/// requested ground sets. Sizes are serialized as decimal strings.
struct CatalogRecord {
  int k = 0;
  std::vector<ZSet> pgs;
  std::vector<ZSet> hgens;
  int rank = 0;
  int max_gen_count = 0;
  std::string recognized_form;
  std::map<int, BigInt> size_at;

  bool operator==(const CatalogRecord& o) const;
};

/// Enumerate all PGSs for k and materialize each family at every n in ns.
std::vector<CatalogRecord> build_catalog(int k, const std::vector<int>& ns,
                                         int max_k_budget = 5,
                                         int max_n_budget = 16);

std::string record_to_json(const CatalogRecord& rec);
CatalogRecord record_from_json(const std::string& text);

/// ndjson writes one record per line; otherwise a JSON array is written.
/// Output is byte-stable for identical inputs.
void write_catalog(std::ostream& os, const std::vector<CatalogRecord>& recs,
                   bool ndjson = false);

/// Reads either format back. With revalidate set, every record is rebuilt
/// from its PGS and the stored sizes are checked.
std::vector<CatalogRecord> read_catalog(std::istream& is,
                                        bool revalidate = false,
                                        int max_n_budget = 16);

/// Family files: a header line "n=<n> k=<k>" followed by one ascending
/// comma-separated k-set per line. '#' lines and blank lines are skipped on
/// input and never produced on output.
void write_family_file(std::ostream& os, const UniformFamily& fam);
UniformFamily read_family_file(std::istream& is);

}  // namespace mlcif
