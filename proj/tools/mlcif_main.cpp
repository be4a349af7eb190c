// Command-line front end: construct, verify, enumerate, classify, and count
// maximal left-compressed intersecting families from their generating sets.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "mlcif/build.hpp"
#include "mlcif/catalog.hpp"
#include "mlcif/classify.hpp"
#include "mlcif/counting.hpp"
#include "mlcif/selftest.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;  // invalid PGS, not an MLCIF, failed check
constexpr int kExitUsage = 2;   // bad arguments or parse errors

struct GlobalOpts {
  bool json = false;
  bool oracle = false;
  unsigned seed = 1;
  int max_n = 16;
  int max_k = 5;
};

ordered_json sets_json(const std::vector<mlcif::ZSet>& sets) {
  ordered_json arr = ordered_json::array();
  for (const auto& s : sets) arr.push_back(s.elems());
  return arr;
}

ordered_json profile_json(const mlcif::FamilyProfile& prof) {
  ordered_json j;
  j["rank"] = prof.rank;
  j["max_gen_count"] = prof.max_gen_count;
  j["max_gens"] = sets_json(prof.max_gens);
  j["recognized_form"] = prof.form.str();
  return j;
}

void print_profile(std::ostream& os, const mlcif::FamilyProfile& prof) {
  os << "# rank: " << prof.rank << '\n'
     << "# maximal generators (" << prof.max_gen_count
     << "): " << mlcif::set_list_str(prof.max_gens) << '\n'
     << "# recognized form: " << prof.form.str() << '\n';
}

int cmd_check_pgs(int k, const std::string& gens_arg,
                  const std::string& gens_file, const GlobalOpts& g) {
  std::string text = gens_arg;
  if (!gens_file.empty()) {
    std::ifstream in(gens_file);
    if (!in) throw mlcif::input_error("cannot open " + gens_file);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  std::vector<mlcif::ZSet> members = mlcif::parse_set_list(text);
  mlcif::PgsValidation val = mlcif::validate_pgs(k, members);

  const int horizon = 2 * k - 1;
  ordered_json pairs = ordered_json::array();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i; j < members.size(); ++j) {
      const auto &a = members[i], &b = members[j];
      if (a.empty() || b.empty() || std::max(a.max_elem(), b.max_elem()) > horizon)
        continue;
      auto si = mlcif::strongly_intersecting(a, b, horizon);
      ordered_json p;
      p["g"] = a.elems();
      p["h"] = b.elems();
      if (si) {
        p["strongly_intersecting"] = true;
        p["level"] = si->ell;
        if (!g.json)
          std::cout << a.str() << " ~si " << b.str() << " at level " << si->ell
                    << '\n';
      } else {
        auto wit = mlcif::disjoint_witness(a, b);
        p["strongly_intersecting"] = false;
        p["disjoint_s"] = wit->s.elems();
        p["disjoint_t"] = wit->t.elems();
        if (!g.json)
          std::cout << a.str() << " !si " << b.str() << "  disjoint pair S="
                    << wit->s.str() << " T=" << wit->t.str() << '\n';
      }
      pairs.push_back(std::move(p));
    }

  if (g.json) {
    ordered_json out;
    out["k"] = k;
    out["members"] = sets_json(members);
    out["pairs"] = pairs;
    out["valid"] = val.ok();
    out["violations"] = val.violations;
    std::cout << out.dump(2) << '\n';
  } else {
    for (const std::string& v : val.violations)
      std::cout << "violation: " << v << '\n';
    std::cout << (val.ok() ? "valid principal generating set"
                           : "not a valid principal generating set")
              << '\n';
  }
  return val.ok() ? kExitOk : kExitDomain;
}

int cmd_build(int n, int k, const std::string& pgs_arg, bool verify,
              const std::string& out_path, const GlobalOpts& g) {
  if (n > g.max_n)
    throw mlcif::resource_error("n exceeds --max-n=" + std::to_string(g.max_n));
  std::vector<mlcif::ZSet> members = mlcif::parse_set_list(pgs_arg);
  mlcif::PgsValidation val = mlcif::validate_pgs(k, members);
  if (!val.ok()) {
    for (const std::string& v : val.violations)
      std::cerr << "violation: " << v << '\n';
    return kExitDomain;
  }
  mlcif::BuiltFamily built = mlcif::build_mlcif(n, k, *val.pgs);
  mlcif::FamilyProfile prof = mlcif::profile(built.gens);

  bool verified = true;
  std::string diag;
  if (verify) {
    mlcif::MlcifCheck chk = mlcif::check_mlcif(built.family);
    verified = chk.ok;
    diag = chk.describe();
  }

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw mlcif::input_error("cannot open " + out_path);
    mlcif::write_family_file(out, built.family);
  }

  if (g.json) {
    ordered_json out;
    out["n"] = n;
    out["k"] = k;
    out["pgs"] = sets_json(built.gens.pgs.members());
    out["hgens"] = sets_json(built.gens.hgens);
    out["profile"] = profile_json(prof);
    out["size"] = std::to_string(built.family.size());
    ordered_json fam = ordered_json::array();
    for (const auto& m : built.family.members()) fam.push_back(m.elems());
    out["family"] = fam;
    if (verify) out["verified"] = verified;
    std::cout << out.dump(2) << '\n';
  } else {
    mlcif::write_family_file(std::cout, built.family);
    std::cout << "# pgs: " << mlcif::set_list_str(built.gens.pgs.members())
              << '\n'
              << "# hgens: " << mlcif::set_list_str(built.gens.hgens) << '\n'
              << "# size: " << built.family.size() << '\n';
    print_profile(std::cout, prof);
    if (verify) std::cout << "# verify: " << diag << '\n';
  }
  return verified ? kExitOk : kExitDomain;
}

int cmd_enumerate(int k, const std::string& n_list, const std::string& out_path,
                  bool ndjson, const GlobalOpts& g) {
  std::vector<int> ns;
  std::stringstream ss(n_list);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) ns.push_back(std::stoi(tok));
  if (ns.empty()) ns.push_back(2 * k);
  auto records = mlcif::build_catalog(k, ns, g.max_k, g.max_n);
  if (out_path.empty()) {
    mlcif::write_catalog(std::cout, records, ndjson);
  } else {
    std::ofstream out(out_path);
    if (!out) throw mlcif::input_error("cannot open " + out_path);
    mlcif::write_catalog(out, records, ndjson);
    std::cout << records.size() << " records written to " << out_path << '\n';
  }
  return kExitOk;
}

int cmd_recover(const std::string& family_path, const GlobalOpts& g) {
  std::ifstream in(family_path);
  if (!in) throw mlcif::input_error("cannot open " + family_path);
  mlcif::UniformFamily fam = mlcif::read_family_file(in);
  mlcif::MlcifCheck chk = mlcif::check_mlcif(fam);
  if (!chk.ok) {
    std::cerr << "input family is " << chk.describe() << '\n';
    return kExitDomain;
  }
  mlcif::RecoveredPgs rec = mlcif::recover_pgs(fam);
  mlcif::GeneratingSet gens{rec.pgs, rec.hgens};
  mlcif::FamilyProfile prof = mlcif::profile(gens);
  if (g.json) {
    ordered_json out;
    out["n"] = fam.n();
    out["k"] = fam.k();
    out["pgs"] = sets_json(rec.pgs.members());
    out["hgens"] = sets_json(rec.hgens);
    out["profile"] = profile_json(prof);
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "pgs: " << mlcif::set_list_str(rec.pgs.members()) << '\n'
              << "hgens: " << mlcif::set_list_str(rec.hgens) << '\n';
    print_profile(std::cout, prof);
  }
  return kExitOk;
}

ordered_json report_json(const mlcif::CountReport& rep) {
  ordered_json j;
  j["n"] = rep.n;
  j["k"] = rep.k;
  j["b"] = rep.b;
  j["d"] = rep.d;
  j["mu_b"] = rep.mu_b;
  j["case"] = rep.si_case;
  j["a_total"] = rep.a_total.str();
  j["a_x"] = rep.a_x.str();
  j["a0_x"] = rep.a0_x.str();
  j["s_x"] = rep.s_x.str();
  j["method"] = rep.method;
  j["verdict"] = std::string(1, rep.verdict);
  return j;
}

void print_report(std::ostream& os, const mlcif::CountReport& rep,
                  const mlcif::ZSet& x) {
  os << "n=" << rep.n << " k=" << rep.k << " b=" << rep.b << " X=" << x.str()
     << " d=" << rep.d << " mu_b=" << rep.mu_b << " case=" << rep.si_case
     << " method=" << rep.method << '\n'
     << "|A|     = " << rep.a_total << '\n'
     << "|A(X)|  = " << rep.a_x << '\n'
     << "|A0(X)| = " << rep.a0_x << '\n'
     << "|S(X)|  = " << rep.s_x << '\n'
     << "verdict: |A(X)| " << rep.verdict << " |S(X)|" << '\n';
}

int cmd_compare(int n, int k, int b, const std::string& x_arg,
                const std::string& x_file, const GlobalOpts& g) {
  std::vector<mlcif::ZSet> xs;
  if (!x_file.empty()) {
    std::ifstream in(x_file);
    if (!in) throw mlcif::input_error("cannot open " + x_file);
    std::string line;
    while (std::getline(in, line)) {
      std::size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos || line[start] == '#') continue;
      xs.push_back(mlcif::parse_zset(line.substr(start), n));
    }
  } else {
    xs.push_back(mlcif::parse_zset(x_arg, n));
  }

  if (g.oracle && n > g.max_n)
    throw mlcif::resource_error("oracle verification needs n <= --max-n=" +
                                std::to_string(g.max_n));

  ordered_json batch = ordered_json::array();
  bool all_match = true;
  for (const mlcif::ZSet& x : xs) {
    mlcif::CountReport rep = mlcif::compare_with_star(n, k, b, x);
    ordered_json item = report_json(rep);
    if (g.oracle) {
      mlcif::CountReport oracle = mlcif::compare_with_star(n, k, b, x, true);
      bool match = oracle.a_total == rep.a_total && oracle.a_x == rep.a_x &&
                   oracle.a0_x == rep.a0_x && oracle.s_x == rep.s_x;
      all_match = all_match && match;
      item["oracle"] = report_json(oracle);
      item["oracle_match"] = match;
      if (!g.json) {
        print_report(std::cout, rep, x);
        std::cout << "oracle: " << (match ? "match" : "MISMATCH") << '\n';
      }
    } else if (!g.json) {
      print_report(std::cout, rep, x);
    }
    batch.push_back(std::move(item));
  }
  if (g.json)
    std::cout << (batch.size() == 1 ? batch.front().dump(2) : batch.dump(2))
              << '\n';
  return all_match ? kExitOk : kExitDomain;
}

int cmd_selftest(double time_budget, const GlobalOpts& g) {
  mlcif::SelftestOptions opt;
  opt.seed = g.seed;
  opt.max_k = std::min(g.max_k, 4);
  opt.time_budget_sec = time_budget;
  auto results = mlcif::run_selftest(opt);
  bool all_ok = true;
  for (const auto& res : results) {
    all_ok = all_ok && res.ok;
    std::ostringstream ms;
    ms.precision(1);
    ms << std::fixed << res.millis;
    std::cout << (res.ok ? "[ ok ] " : "[FAIL] ") << res.name << "  ("
              << ms.str() << " ms)";
    if (!res.ok) std::cout << "  " << res.detail;
    std::cout << '\n';
  }
  std::cout << (all_ok ? "selftest passed" : "selftest FAILED") << '\n';
  return all_ok ? kExitOk : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for maximal left-compressed intersecting families"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_flag("--json", g.json, "emit JSON instead of text")->configurable();
  app.add_flag("--oracle", g.oracle, "verify formula output by enumeration");
  app.add_option("--seed", g.seed, "seed for sampled property suites");
  app.add_option("--max-n", g.max_n, "largest ground set to materialize");
  app.add_option("--max-k", g.max_k, "largest k for catalog enumeration");
  app.fallthrough();

  int k = 0, n = 0, b = 0;
  std::string gens_arg, gens_file, pgs_arg, out_path, n_list = "";
  std::string family_path, x_arg, x_file;
  bool verify = false, ndjson = false;
  double time_budget = 0;

  auto* c_check = app.add_subcommand("check-pgs", "validate a generating set");
  c_check->add_option("--k", k, "uniform set size")->required();
  c_check->add_option("--gens", gens_arg, "set list, e.g. \"2,3;2,4,5\"");
  c_check->add_option("--gens-file", gens_file, "file with a set list");

  auto* c_build = app.add_subcommand("build", "materialize a family from a PGS");
  c_build->add_option("--n", n, "ground set size")->required();
  c_build->add_option("--k", k, "uniform set size")->required();
  c_build->add_option("--pgs", pgs_arg, "PGS members; empty for the star");
  c_build->add_flag("--verify", verify, "re-check the result definitionally");
  c_build->add_option("--out", out_path, "write the family file here");

  auto* c_enum = app.add_subcommand("enumerate", "catalog all PGSs for k");
  c_enum->add_option("--k", k, "uniform set size")->required();
  c_enum->add_option("--n", n_list, "comma-separated ground sets, e.g. 6,7,8");
  c_enum->add_option("--out", out_path, "catalog file (stdout if omitted)");
  c_enum->add_flag("--jsonl", ndjson, "newline-delimited records");

  auto* c_rec = app.add_subcommand("recover", "read the PGS back off a family");
  c_rec->add_option("--family", family_path, "family file")->required();

  auto* c_cmp = app.add_subcommand("compare", "count members meeting a test set");
  c_cmp->add_option("--n", n, "ground set size")->required();
  c_cmp->add_option("--k", k, "uniform set size")->required();
  c_cmp->add_option("--b", b, "family parameter b (4 <= b <= k+1)")->required();
  c_cmp->add_option("--x", x_arg, "test set, e.g. \"5,6\"");
  c_cmp->add_option("--x-file", x_file, "file with one test set per line");

  auto* c_self = app.add_subcommand("selftest", "run the invariant suites");
  c_self->add_option("--time-budget", time_budget, "abort after this many seconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c_check->parsed()) return cmd_check_pgs(k, gens_arg, gens_file, g);
    if (c_build->parsed()) return cmd_build(n, k, pgs_arg, verify, out_path, g);
    if (c_enum->parsed()) return cmd_enumerate(k, n_list, out_path, ndjson, g);
    if (c_rec->parsed()) return cmd_recover(family_path, g);
    if (c_cmp->parsed()) return cmd_compare(n, k, b, x_arg, x_file, g);
    if (c_self->parsed()) return cmd_selftest(time_budget, g);
  } catch (const mlcif::input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const mlcif::resource_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const mlcif::contract_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
