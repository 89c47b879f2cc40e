#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gluings/deletion.hpp"
#include "gluings/enumerator.hpp"
#include "gluings/formulas.hpp"
#include "gluings/tables.hpp"

namespace {

using namespace gluings;

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& s) {
  const auto dots = s.find("..");
  Range r;
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(s);
    } else {
      r.lo = std::stoi(s.substr(0, dots));
      r.hi = std::stoi(s.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range '" + s + "', expected lo..hi or a single value");
  }
  if (r.hi < r.lo) throw std::invalid_argument("bad range '" + s + "': empty");
  return r;
}

struct CommonOpts {
  std::string format = "text";
  std::string out_path;
  std::string cache_dir;
  int workers = 1;
  int max_arcs = kDefaultMaxArcs;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json", "text"}));
  cmd->add_option("--out", o.out_path, "write output to a file instead of stdout");
  cmd->add_option("--cache-dir", o.cache_dir,
                  "cache directory (default: $GLUINGS_CACHE_DIR if set)");
  cmd->add_option("--workers", o.workers, "number of enumeration workers")->check(CLI::PositiveNumber);
  cmd->add_option("--max-arcs", o.max_arcs, "exhaustion bound override (total arcs)");
}

CacheStore make_cache(const CommonOpts& o) {
  if (!o.cache_dir.empty()) return CacheStore(o.cache_dir);
  if (const char* env = std::getenv("GLUINGS_CACHE_DIR")) return CacheStore(env);
  return CacheStore({});
}

void emit(const CommonOpts& o, const std::string& text) {
  if (o.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out_path);
  if (!f) throw std::invalid_argument("cannot open output file " + o.out_path);
  f << text;
}

std::string render(const CommonOpts& o, const std::vector<TableRow>& rows) {
  if (o.format == "csv") return table_csv(rows);
  if (o.format == "json") return table_json(rows);
  return table_text(rows);
}

BigInt sliced_total(int workers, const std::function<BigInt(WorkerSlice)>& f) {
  if (workers <= 1) return f({});
  std::vector<std::future<BigInt>> parts;
  parts.reserve(workers);
  for (int w = 0; w < workers; ++w)
    parts.push_back(std::async(std::launch::async, [&f, w, workers] { return f({w, workers}); }));
  BigInt sum = 0;
  for (auto& p : parts) sum += p.get();  // merged in worker order
  return sum;
}

struct FamilyQuery {
  std::string family = "eps";
  std::string g_range = "0";
  std::string k_range = "2";
  std::string n_range = "1..5";
  std::string m_range;  // eps-tilde only; empty = full 1..N-1 per N
};

void add_family(CLI::App* cmd, FamilyQuery& q) {
  cmd->add_option("--family", q.family, "count family: eps, B or eps-tilde")
      ->check(CLI::IsMember({"eps", "B", "eps-tilde"}));
  cmd->add_option("--g", q.g_range, "genus (single value or lo..hi)");
  cmd->add_option("--K", q.k_range, "number of faces (single value or lo..hi)");
  cmd->add_option("--N", q.n_range,
                  "inclusive range lo..hi; edges (for eps-tilde: total arcs)");
  cmd->add_option("--M", q.m_range, "face-1 arc range for eps-tilde (default: all)");
}

struct Cell {
  int g, K, N;
  std::optional<int> M;
};

std::vector<Cell> query_cells(const FamilyQuery& q) {
  const Range gs = parse_range(q.g_range);
  const Range ks = parse_range(q.k_range);
  const Range ns = parse_range(q.n_range);
  if (gs.lo < 0) throw std::invalid_argument("genus must be >= 0");
  if (ks.lo < 1) throw std::invalid_argument("K must be >= 1");
  if (q.family == "eps-tilde") {
    if (gs.lo != 0 || gs.hi != 0) throw std::invalid_argument("eps-tilde is a genus-0 family");
  } else if (!q.m_range.empty()) {
    throw std::invalid_argument("--M applies to the eps-tilde family only");
  }
  std::vector<Cell> cells;
  for (int g = gs.lo; g <= gs.hi; ++g)
    for (int K = ks.lo; K <= ks.hi; ++K)
      for (int N = ns.lo; N <= ns.hi; ++N) {
        if (q.family != "eps-tilde") {
          cells.push_back({g, K, N, std::nullopt});
          continue;
        }
        Range m{1, std::max(1, N - 1)};
        if (!q.m_range.empty()) m = parse_range(q.m_range);
        for (int M = m.lo; M <= m.hi; ++M) cells.push_back({g, K, N, M});
      }
  return cells;
}

std::vector<TableRow> formula_rows(const FamilyQuery& q, SequenceCache& cache,
                                   std::string* provenance = nullptr) {
  std::vector<TableRow> rows;
  std::set<std::string> routes;
  for (const Cell& c : query_cells(q)) {
    BigInt v;
    if (q.family == "eps") {
      if (c.K == 1) {
        v = cache.eps_one_face(c.g, c.N);
        routes.insert("recurrence");
      } else if (c.K == 2 && c.g == 0) {
        v = closed_eps0_2(c.N);
        routes.insert("formula");
      } else if (c.K == 2 && c.g == 1) {
        v = closed_eps1_2(c.N);
        routes.insert("formula");
      } else if (c.K == 2 && c.g == 2) {
        v = closed_eps2_2(c.N);
        routes.insert("formula");
      } else if (c.K == 3 && c.g == 0) {
        v = closed_eps0_3(c.N);
        routes.insert("formula");
      } else {
        throw std::invalid_argument("no formula for family eps with g=" + std::to_string(c.g) +
                                    ", K=" + std::to_string(c.K));
      }
    } else if (q.family == "B") {
      if (c.K == 1) {
        v = cache.bicolored_one_face(c.g, c.N);
        routes.insert("recurrence");
      } else if (c.K == 2 && c.g == 0) {
        v = closed_B0_2(c.N);
        routes.insert("formula");
      } else {
        throw std::invalid_argument("no formula for family B with g=" + std::to_string(c.g) +
                                    ", K=" + std::to_string(c.K));
      }
    } else {  // eps-tilde
      if (c.K != 2)
        throw std::invalid_argument("the eps-tilde recurrence is for K=2 only");
      v = cache.rec_eps_tilde(c.N, *c.M);
      routes.insert("recurrence");
    }
    rows.push_back({q.family, c.g, c.N, c.K, c.M, std::move(v)});
  }
  if (provenance) *provenance = routes.size() == 1 ? *routes.begin() : "mixed";
  return rows;
}

std::vector<TableRow> brute_rows(const FamilyQuery& q, const CommonOpts& o) {
  std::vector<TableRow> rows;
  for (const Cell& c : query_cells(q)) {
    BigInt v = sliced_total(o.workers, [&q, &o, c](WorkerSlice slice) {
      CountOptions opts{slice, o.max_arcs};
      if (q.family == "eps") return count_eps(c.g, c.N, c.K, opts);
      if (q.family == "B") return count_bicolored(c.g, c.N, c.K, opts);
      return count_eps_tilde(c.N, *c.M, c.K, opts);
    });
    rows.push_back({q.family, c.g, c.N, c.K, c.M, std::move(v)});
  }
  return rows;
}

std::string cache_key(const std::string& cmd, const FamilyQuery& q) {
  std::string key =
      cmd + "-" + q.family + "-g" + q.g_range + "-K" + q.k_range + "-N" + q.n_range;
  if (!q.m_range.empty()) key += "-M" + q.m_range;
  return key;
}

int run_table_like(const std::string& cmd, const FamilyQuery& q, const CommonOpts& o) {
  const CacheStore cache = make_cache(o);
  const std::string key = cache_key(cmd, q);
  std::vector<TableRow> rows;
  if (auto hit = cache.load(key)) {
    rows = std::move(*hit);
  } else {
    std::string provenance = "brute_force";
    if (cmd == "table") {
      SequenceCache seq;
      rows = formula_rows(q, seq, &provenance);
    } else {
      rows = brute_rows(q, o);
    }
    cache.store(key, rows, provenance);
  }
  emit(o, render(o, rows));
  return 0;
}

int run_verify(const FamilyQuery& q, const CommonOpts& o) {
  SequenceCache seq;
  const std::vector<TableRow> formula = formula_rows(q, seq);
  const std::vector<TableRow> brute = brute_rows(q, o);

  nlohmann::json failures = nlohmann::json::array();
  std::string text;
  int matched = 0;
  for (size_t i = 0; i < formula.size(); ++i) {
    const TableRow& f = formula[i];
    const TableRow& b = brute[i];
    const bool ok = f.value == b.value;
    std::string where = f.family + " g=" + std::to_string(f.g) + " N=" + std::to_string(f.N) +
                        " K=" + std::to_string(f.K) + (f.M ? " M=" + std::to_string(*f.M) : "");
    if (ok) {
      ++matched;
      text += "ok " + where + " value=" + to_decimal(f.value) + "\n";
    } else {
      text += "MISMATCH " + where + " brute=" + to_decimal(b.value) +
              " formula=" + to_decimal(f.value) + "\n";
      failures.push_back({{"family", f.family},
                          {"g", f.g},
                          {"N", f.N},
                          {"K", f.K},
                          {"M", f.M ? nlohmann::json(*f.M) : nlohmann::json(nullptr)},
                          {"brute", to_decimal(b.value)},
                          {"formula", to_decimal(f.value)}});
    }
  }
  text += std::to_string(matched) + "/" + std::to_string(formula.size()) + " matched\n";

  if (o.format == "json") {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["matched"] = matched;
    j["total"] = formula.size();
    j["failures"] = failures;
    emit(o, j.dump(2) + "\n");
  } else {
    emit(o, text);
  }
  if (!failures.empty()) {
    if (o.format != "json") std::cerr << failures.dump() << "\n";
    return 1;
  }
  return 0;
}

struct AuditOpts {
  int g = 0;
  int K = 2;
  std::string n_range = "2..4";
  bool bicolored = false;
};

int run_delete_audit(const AuditOpts& a, const CommonOpts& o) {
  const Range n = parse_range(a.n_range);
  std::string text;
  nlohmann::json reports = nlohmann::json::array();
  bool all_passed = true;
  for (int N = n.lo; N <= n.hi; ++N) {
    const AuditReport report = a.bicolored ? audit_bicolored_deletion(N, o.max_arcs)
                                           : audit_deletion_multiplicities(a.g, N, a.K, o.max_arcs);
    all_passed = all_passed && report.passed();
    reports.push_back(nlohmann::json::parse(audit_report_json(report)));
    text += std::string(report.passed() ? "PASS" : "FAIL") + " g=" + std::to_string(report.g) +
            " N=" + std::to_string(report.edges) + " K=" + std::to_string(report.faces) +
            (report.bicolored ? " bicolored" : "") + " inputs=" + to_decimal(report.inputs);
    for (int c = 0; c < 4; ++c)
      text += " " + std::string(to_string(static_cast<DeletionCase>(c))) + "=" +
              to_decimal(report.case_totals[c]);
    text += "\n";
    for (const auto& audit : report.audits)
      for (const auto& v : audit.violations)
        text += "  violation " + audit.name + ": " + v.witness + " expected=" +
                to_decimal(v.expected) + " actual=" + to_decimal(v.actual) + "\n";
  }
  if (o.format == "json")
    emit(o, reports.dump(2) + "\n");
  else
    emit(o, text);
  if (!all_passed && o.format != "json") {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& r : reports)
      if (!r["passed"].get<bool>()) failures.push_back(r);
    std::cerr << failures.dump() << "\n";
  }
  return all_passed ? 0 : 1;
}

struct IdentityOpts {
  int max_n = 20;
  int brute_max_n = 0;
};

int run_identities(const IdentityOpts& io, const CommonOpts& o) {
  SequenceCache cache;
  const IdentityReport rec = identity_suite(cache, io.max_n);

  nlohmann::json failures = nlohmann::json::array();
  std::string text;
  for (const auto& m : rec.mismatches) {
    failures.push_back({{"route", "recurrence"},
                        {"N", m.N},
                        {"moment", m.moment},
                        {"lhs", to_decimal(m.lhs)},
                        {"rhs", to_decimal(m.rhs)}});
    text += "MISMATCH recurrence N=" + std::to_string(m.N) +
            " moment=" + std::to_string(m.moment) + " lhs=" + to_decimal(m.lhs) +
            " rhs=" + to_decimal(m.rhs) + "\n";
  }
  text += "recurrence identities: N=1.." + std::to_string(io.max_n) + " " +
          (rec.passed() ? "ok" : "FAILED") + "\n";

  for (int N = 1; N <= io.brute_max_n; ++N) {
    BigInt s0 = 0, s1 = 0, s2 = 0;
    for (int i = 1; i <= 2 * N - 1; ++i) {
      const BigInt t = count_eps_tilde(2 * N, i, 2, {{}, o.max_arcs});
      s0 += t;
      s1 += i * t;
      s2 += BigInt(i + 1) * (i + 2) * t;
    }
    const BigInt r0 = closed_eps0_2(N);
    const BigInt r1 = BigInt(N) * N * pow4(N - 1);
    const BigInt r2 = rat_to_int(BigRat(BigInt(N) * (N + 1) * (5 * N + 7)) * pow4_rat(N - 2));
    const BigInt lhs[3] = {s0, s1, s2};
    const BigInt rhs[3] = {r0, r1, r2};
    for (int moment = 0; moment < 3; ++moment) {
      if (lhs[moment] == rhs[moment]) continue;
      failures.push_back({{"route", "brute"},
                          {"N", N},
                          {"moment", moment},
                          {"lhs", to_decimal(lhs[moment])},
                          {"rhs", to_decimal(rhs[moment])}});
      text += "MISMATCH brute N=" + std::to_string(N) + " moment=" + std::to_string(moment) +
              " lhs=" + to_decimal(lhs[moment]) + " rhs=" + to_decimal(rhs[moment]) + "\n";
    }
  }
  if (io.brute_max_n > 0)
    text += "brute identities: N=1.." + std::to_string(io.brute_max_n) + " checked\n";

  if (o.format == "json") {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["recurrence_max_n"] = io.max_n;
    j["brute_max_n"] = io.brute_max_n;
    j["failures"] = failures;
    emit(o, j.dump(2) + "\n");
  } else {
    emit(o, text);
  }
  if (!failures.empty()) {
    if (o.format != "json") std::cerr << failures.dump() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counts of polygon gluings: brute-force enumeration, recurrences and closed forms"};
  app.require_subcommand(1);

  CommonOpts common;
  FamilyQuery query;
  AuditOpts audit;
  IdentityOpts identities;

  CLI::App* table = app.add_subcommand("table", "evaluate recurrences/closed forms over a range");
  add_family(table, query);
  add_common(table, common);

  CLI::App* brute = app.add_subcommand("brute", "count by exhaustive enumeration over a range");
  add_family(brute, query);
  add_common(brute, common);

  CLI::App* verify = app.add_subcommand("verify", "cross-check brute force against the formulas");
  add_family(verify, query);
  add_common(verify, common);

  CLI::App* del = app.add_subcommand("delete-audit", "audit edge-deletion preimage multiplicities");
  del->add_option("--g", audit.g, "genus of the input class");
  del->add_option("--K", audit.K, "faces of the input class");
  del->add_option("--N", audit.n_range, "edge range lo..hi");
  del->add_flag("--bicolored", audit.bicolored, "bicolored sphere variant (forces g=0, K=2)");
  add_common(del, common);

  CLI::App* ident = app.add_subcommand("identities", "weighted eps-tilde sum identities");
  ident->add_option("--max-n", identities.max_n, "check recurrences for N=1..max-n");
  ident->add_option("--brute-max-n", identities.brute_max_n,
                    "also check with brute-force counts for N=1..brute-max-n");
  add_common(ident, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (table->parsed()) return run_table_like("table", query, common);
    if (brute->parsed()) return run_table_like("brute", query, common);
    if (verify->parsed()) return run_verify(query, common);
    if (del->parsed()) return run_delete_audit(audit, common);
    if (ident->parsed()) return run_identities(identities, common);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
