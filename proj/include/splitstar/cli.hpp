#pragma once

// Command-line front end: construct covers, validate cover files, run
// sweeps, check the embedded tables, export the graph.  Everything funnels
// through run_cli(args, out, err) so tests can drive the exact binary
// surface without spawning processes.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "splitstar/splitstar.hpp"

namespace splitstar {

// On-disk cover format.  Field names are part of the interface.
struct CoverDocument {
  int n = 0;
  std::string u, v;
  std::uint64_t ell = 0;
  std::vector<std::string> c1, c2;
  std::vector<std::string> case_trace;
};

inline CoverDocument make_document(const DccRequest& req, const DccCover& cover,
                                   const CaseTrace& trace) {
  CoverDocument doc;
  doc.n = req.n;
  doc.u = format_perm(req.u);
  doc.v = format_perm(req.v);
  doc.ell = req.ell;
  for (const Perm& p : cover.c1.vertices) doc.c1.push_back(format_perm(p));
  for (const Perm& p : cover.c2.vertices) doc.c2.push_back(format_perm(p));
  for (const CaseTag& t : trace) doc.case_trace.push_back(format_case_tag(t));
  return doc;
}

inline nlohmann::ordered_json document_json(const CoverDocument& doc) {
  nlohmann::ordered_json j;
  j["n"] = doc.n;
  j["u"] = doc.u;
  j["v"] = doc.v;
  j["ell"] = doc.ell;
  j["c1"] = doc.c1;
  j["c2"] = doc.c2;
  j["case_trace"] = doc.case_trace;
  return j;
}

inline CoverDocument parse_document(const std::string& text) {
  CoverDocument doc;
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    doc.n = j.at("n").get<int>();
    doc.u = j.at("u").get<std::string>();
    doc.v = j.at("v").get<std::string>();
    doc.ell = j.at("ell").get<std::uint64_t>();
    doc.c1 = j.at("c1").get<std::vector<std::string>>();
    doc.c2 = j.at("c2").get<std::vector<std::string>>();
    if (j.contains("case_trace"))
      doc.case_trace = j.at("case_trace").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::BadToken, std::string("cover document: ") + e.what());
  }
  return doc;
}

inline nlohmann::ordered_json report_json(const ValidationReport& rep) {
  nlohmann::ordered_json j;
  j["ok"] = rep.ok;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [code, detail] : rep.violations) {
    nlohmann::ordered_json v;
    v["code"] = to_string(code);
    v["detail"] = detail;
    arr.push_back(v);
  }
  j["violations"] = arr;
  return j;
}

namespace cli_detail {

struct DccArgs {
  int n = 0;
  std::string u, v;
  std::uint64_t len = 0;
  std::string format = "json";
};

inline int cmd_dcc(const DccArgs& a, std::ostream& out, std::ostream& err) {
  DccRequest req;
  try {
    if (a.n < 4)
      fail(ErrorCode::DimensionTooSmall, "--n must be at least 4");
    if (a.n > kMaxN)
      fail(ErrorCode::OutOfRange, "--n must be at most " +
                                      std::to_string(kMaxN));
    req.n = a.n;
    req.u = parse_perm(a.u, a.n);
    req.v = parse_perm(a.v, a.n);
    req.ell = a.len;
    if (req.u == req.v)
      fail(ErrorCode::SameVertex, "u and v must differ");
    if (a.len < 3 || a.len > factorial(a.n) / 2)
      fail(ErrorCode::BadLength,
           "--len must lie in [3, " + std::to_string(factorial(a.n) / 2) +
               "]");
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  DccCover cover;
  CaseTrace trace;
  try {
    std::tie(cover, trace) = dcc_construct(req);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  ValidationReport check = validate_dcc(req.n, cover, req.u, req.v, req.ell);
  if (!check.ok) {
    err << "internal error: constructed cover fails validation\n";
    for (const auto& [code, detail] : check.violations)
      err << "  " << to_string(code) << ": " << detail << "\n";
    return 1;
  }

  if (a.format == "human") {
    out << "n=" << req.n << " u=" << a.u << " v=" << a.v << " len=" << a.len
        << "\n";
    out << "c1 (" << cover.c1.length() << "):";
    for (const Perm& p : cover.c1.vertices) out << " " << format_perm(p);
    out << "\n";
    out << "c2 (" << cover.c2.length() << "):";
    for (const Perm& p : cover.c2.vertices) out << " " << format_perm(p);
    out << "\n";
    out << "trace:";
    for (const CaseTag& t : trace) out << " " << format_case_tag(t);
    out << "\n";
  } else {
    out << document_json(make_document(req, cover, trace)).dump(2) << "\n";
  }
  return 0;
}

struct VerifyArgs {
  std::string file;
};

inline int cmd_verify(const VerifyArgs& a, std::ostream& out,
                      std::ostream& err) {
  std::ifstream in(a.file);
  if (!in) {
    err << "error: cannot open " << a.file << "\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  int n = 0;
  Perm u, v;
  DccCover cover;
  std::uint64_t ell = 0;
  try {
    CoverDocument doc = parse_document(buf.str());
    if (doc.n < 2 || doc.n > kMaxN)
      fail(ErrorCode::OutOfRange, "cover document: dimension " +
                                      std::to_string(doc.n) +
                                      " outside [2, " +
                                      std::to_string(kMaxN) + "]");
    n = doc.n;
    u = parse_perm(doc.u, n);
    v = parse_perm(doc.v, n);
    ell = doc.ell;
    for (const std::string& w : doc.c1)
      cover.c1.vertices.push_back(parse_perm(w, n));
    for (const std::string& w : doc.c2)
      cover.c2.vertices.push_back(parse_perm(w, n));
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  ValidationReport rep = validate_dcc(n, cover, u, v, ell);
  out << report_json(rep).dump(2) << "\n";
  return rep.ok ? 0 : 1;
}

struct SweepArgs {
  int n = 0;
  int sample = 0;
  std::uint32_t seed = 0;
  int jobs = 0;
};

inline int cmd_sweep(const SweepArgs& a, std::ostream& out,
                     std::ostream& err) {
  if (a.n < 4) {
    err << "error: --n must be at least 4\n";
    return 2;
  }
  if (a.n > kMaxN) {
    err << "error: --n must be at most " << kMaxN << "\n";
    return 2;
  }
  if (a.sample < 0) {
    err << "error: --sample must be positive\n";
    return 2;
  }
  if (a.sample == 0 && a.n > 7) {
    err << "error: a full sweep above dimension 7 is impractical; "
           "use --sample\n";
    return 2;
  }

  SweepPolicy policy = a.sample > 0 ? SweepPolicy::Sample(a.sample, a.seed)
                                    : SweepPolicy::Full();
  policy.jobs = a.jobs;
  if (policy.jobs <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    policy.jobs = hw > 0 ? static_cast<int>(hw) : 1;
  }

  std::uint64_t planned =
      a.sample > 0 ? static_cast<std::uint64_t>(a.sample)
                   : (factorial(a.n) - 1) * (factorial(a.n) / 2 - 2);
  err << "sweep n=" << a.n << (a.sample > 0 ? " sampled" : " full") << ", "
      << planned << " instances, jobs " << policy.jobs << "\n";

  auto t0 = std::chrono::steady_clock::now();
  SweepReport rep = pancyclicity_sweep(a.n, policy);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();

  out << rep.passed << "/" << rep.attempted << " pass\n";
  for (const SweepFailure& f : rep.failures)
    out << "fail v=" << format_perm(f.v) << " ell=" << f.ell << ": "
        << f.message << "\n";
  err << "wall time " << ms << " ms\n";
  return rep.failures.empty() ? 0 : 1;
}

// Validating one final table row: both sides simple cycles with the right
// lengths, together covering all 24 vertices exactly once.
inline bool table_row_ok(const BaseRow& row) {
  ValidationReport r1 = validate_cycle(std::nullopt, row.c1);
  ValidationReport r2 = validate_cycle(std::nullopt, row.c2);
  if (!r1.ok || !r2.ok) return false;
  if (row.c1.length() != row.ell || row.c2.length() != 24 - row.ell)
    return false;
  std::set<std::uint64_t> all;
  for (const Perm& p : row.c1.vertices) all.insert(pack_key(p));
  for (const Perm& p : row.c2.vertices)
    if (!all.insert(pack_key(p)).second) return false;
  return all.size() == 24;
}

inline int cmd_tables(std::ostream& out, std::ostream& err) {
  const std::vector<BaseRow>* rows = nullptr;
  try {
    rows = &base_rows();
  } catch (const std::exception& e) {
    err << "error: embedded tables failed to load: " << e.what() << "\n";
    return 1;
  }

  std::vector<std::string> errata;
  int repaired = 0;
  bool all_ok = true;
  for (int table = 1; table <= 3; ++table) {
    const auto& printed = table == 1   ? base_detail::table1_printed()
                          : table == 2 ? base_detail::table2_printed()
                                       : base_detail::table3_printed();
    for (const base_detail::PrintedRow& pr : printed) {
      std::vector<Perm> p1 = base_detail::parse_words(pr.c1);
      std::vector<Perm> p2 = base_detail::parse_words(pr.c2);
      auto d1 = base_detail::sequence_defect(p1, pr.ell, "c1");
      auto d2 = base_detail::sequence_defect(p2, 24 - pr.ell, "c2");
      std::optional<std::string> cross;
      if (!d1 && !d2) {
        std::set<std::uint64_t> seen;
        for (const Perm& p : p1) seen.insert(pack_key(p));
        for (const Perm& p : p2)
          if (!seen.insert(pack_key(p)).second && !cross)
            cross = "sides share " + format_perm(p);
        if (!cross && seen.size() != 24)
          cross = "sides cover " + std::to_string(seen.size()) +
                  " of 24 vertices";
      }

      const BaseRow& row = base_row(table, pr.ell);
      bool printed_ok = !d1 && !d2 && !cross;
      bool row_ok = table_row_ok(row);
      all_ok = all_ok && row_ok;

      out << "table " << table << " ell=" << std::setw(2) << pr.ell << ": ";
      if (printed_ok) {
        out << "printed pass";
      } else {
        std::string why = d1 ? *d1 : d2 ? *d2 : *cross;
        out << "printed fail (" << why << ")";
        errata.push_back("table " + std::to_string(table) +
                         " ell=" + std::to_string(pr.ell) + ": " + why);
      }
      if (row.repaired_c1 || row.repaired_c2) {
        ++repaired;
        out << "; repaired";
        if (row.repaired_c1) out << " c1";
        if (row.repaired_c2) out << " c2";
        out << (row_ok ? " ok" : " FAIL");
      } else if (!row_ok) {
        out << "; FAIL";
      }
      out << "\n";
    }
  }

  out << "errata:\n";
  if (errata.empty()) out << "  none\n";
  for (const std::string& e : errata) out << "  " << e << "\n";
  out << "30 rows checked, " << repaired << " repaired, "
      << (all_ok ? "all rows validate" : "VALIDATION FAILURES") << "\n";
  return all_ok ? 0 : 1;
}

struct ExportArgs {
  int n = 0;
  std::string format = "edgelist";
};

inline int cmd_export(const ExportArgs& a, std::ostream& out,
                      std::ostream& err) {
  if (a.n < 2 || a.n > 5) {
    err << "error: --n must lie in [2, 5]\n";
    return 2;
  }
  std::uint64_t total = factorial(a.n);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  for (std::uint64_t r = 0; r < total; ++r) {
    Perm p = unrank_perm(r, a.n);
    for (const auto& [q, kind] : neighbors(p)) {
      std::uint64_t rq = rank_of(q);
      if (rq > r) edges.emplace_back(r, rq);
    }
  }
  std::sort(edges.begin(), edges.end());

  if (a.format == "dot") {
    out << "graph splitstar_" << a.n << " {\n";
    for (const auto& [r, rq] : edges)
      out << "  \"" << format_perm(unrank_perm(r, a.n)) << "\" -- \""
          << format_perm(unrank_perm(rq, a.n)) << "\";\n";
    out << "}\n";
  } else {
    for (const auto& [r, rq] : edges)
      out << format_perm(unrank_perm(r, a.n)) << " "
          << format_perm(unrank_perm(rq, a.n)) << "\n";
  }
  return 0;
}

}  // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"split-star network toolkit", "splitstar"};
  app.require_subcommand(1);

  cli_detail::DccArgs da;
  CLI::App* dcc = app.add_subcommand(
      "dcc", "construct two disjoint cycles covering all vertices");
  dcc->add_option("--n", da.n, "dimension (at least 4)")->required();
  dcc->add_option("--u", da.u, "vertex on the first cycle")->required();
  dcc->add_option("--v", da.v, "vertex on the second cycle")->required();
  dcc->add_option("--len", da.len, "length of the first cycle")->required();
  dcc->add_option("--format", da.format, "output format (json|human)")
      ->check(CLI::IsMember({"json", "human"}));

  cli_detail::VerifyArgs va;
  CLI::App* verify =
      app.add_subcommand("verify", "validate a cover document");
  verify->add_option("file", va.file, "cover document (JSON)")->required();

  cli_detail::SweepArgs sa;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "construct and validate covers across many instances");
  sweep->add_option("--n", sa.n, "dimension (at least 4)")->required();
  sweep->add_option("--sample", sa.sample,
                    "sample this many instances instead of sweeping all");
  sweep->add_option("--seed", sa.seed, "sampling seed");
  sweep->add_option("--jobs", sa.jobs,
                    "worker threads (default: hardware parallelism)");

  CLI::App* tables =
      app.add_subcommand("tables", "check the embedded dimension-4 tables");
  tables->add_flag("--check", "validate printed and repaired rows")
      ->required();

  cli_detail::ExportArgs ea;
  CLI::App* exp = app.add_subcommand("export", "write the graph as text");
  exp->add_option("--n", ea.n, "dimension (2 to 5)")->required();
  exp->add_option("--format", ea.format, "output format (dot|edgelist)")
      ->check(CLI::IsMember({"dot", "edgelist"}));

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(dcc)) return cli_detail::cmd_dcc(da, out, err);
    if (app.got_subcommand(verify))
      return cli_detail::cmd_verify(va, out, err);
    if (app.got_subcommand(sweep)) return cli_detail::cmd_sweep(sa, out, err);
    if (app.got_subcommand(tables)) return cli_detail::cmd_tables(out, err);
    if (app.got_subcommand(exp)) return cli_detail::cmd_export(ea, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace splitstar
