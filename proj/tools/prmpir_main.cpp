// Command-line front end: construct codes, run the shortening machinery,
// print bound reports and reference tables, simulate private retrieval, and
// run the verification suite.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "prmpir/bounds.hpp"
#include "prmpir/pirsim.hpp"
#include "prmpir/prm.hpp"
#include "prmpir/serialize.hpp"
#include "prmpir/shorten.hpp"
#include "prmpir/subsets.hpp"
#include "prmpir/verify.hpp"

namespace {

using nlohmann::json;
using namespace prmpir;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct OutputTarget {
  std::string path;
  std::ofstream file;

  std::ostream& stream() {
    if (path.empty()) return std::cout;
    if (!file.is_open()) {
      file.open(path);
      if (!file) throw std::runtime_error("cannot open output file: " + path);
    }
    return file;
  }
};

PirCode make_code(int m, int r, uint64_t gamma) {
  return gamma == 0 ? build_prm(m, r) : build_sprm(m, r, gamma);
}

std::string rho_string(const std::vector<int>& rho_display) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < rho_display.size(); ++i) {
    if (i) os << ',';
    os << rho_display[i];
  }
  os << ')';
  return os.str();
}

std::string family_string(const std::vector<SubsetMask>& family) {
  if (family.empty()) return "{}";
  std::ostringstream os;
  for (size_t i = 0; i < family.size(); ++i) {
    if (i) os << ", ";
    os << family[i].to_string();
  }
  return os.str();
}

int cmd_construct(int m, int r, uint64_t gamma, bool as_json, OutputTarget& out) {
  PirCode code = make_code(m, r, gamma);
  std::ostream& os = out.stream();
  if (as_json) {
    os << to_json(code).dump(2) << '\n';
    return kExitOk;
  }
  os << "SPRM(r=" << r << ", m-1=" << m - 1 << ", gamma=" << gamma << ")  n=" << code.n()
     << " k=" << code.k() << " tau=" << code.tau() << '\n';
  os << "coordinates:";
  for (const SubsetMask& s : code.coordinates) os << ' ' << s.to_string();
  os << '\n' << "generator:\n";
  for (int i = 0; i < code.generator.rows(); ++i) os << "  " << code.generator.row_string(i) << '\n';
  return kExitOk;
}

int cmd_shorten(int m, int r, uint64_t gamma, bool as_json, OutputTarget& out) {
  ShorteningPlan plan = shortening_plan(m, r, gamma);
  const uint64_t k = binom(m, r) - gamma;
  const uint64_t n = prm_params(m, r).n - plan.gamma_prime;
  std::ostream& os = out.stream();
  if (as_json) {
    json j = to_json(plan);
    j["k"] = k;
    j["n"] = n;
    os << j.dump(2) << '\n';
    return kExitOk;
  }
  std::vector<int> rho_display(plan.rho.rho.rbegin(), plan.rho.rho.rend());
  os << "gamma=" << gamma << "  rho=" << rho_string(rho_display) << "  P=" << family_string(plan.rho.family)
     << "  gamma'=" << plan.gamma_prime << "  k=" << k << "  n=" << n << '\n';
  return kExitOk;
}

int cmd_recovery(int m, int r, uint64_t gamma, std::optional<int> msg, bool as_json,
                 OutputTarget& out) {
  PirCode code = make_code(m, r, gamma);
  int lo = msg.value_or(0), hi = msg ? *msg + 1 : code.k();
  if (lo < 0 || lo >= code.k()) throw CLI::ValidationError("--msg out of range");
  std::ostream& os = out.stream();
  if (as_json) {
    json rows = json::array();
    for (int i = lo; i < hi; ++i) {
      rows.push_back(json{{"message", i},
                          {"symbol", code.message_subset(i).to_string()},
                          {"sets", code.recovery[i]}});
    }
    os << rows.dump(2) << '\n';
    return kExitOk;
  }
  for (int i = lo; i < hi; ++i) {
    os << "message " << i << " = " << code.message_subset(i).to_string() << ":";
    for (const auto& set : code.recovery[i]) {
      os << "  {";
      for (size_t j = 0; j < set.size(); ++j) {
        if (j) os << ',';
        os << code.coordinates[set[j]].to_string();
      }
      os << '}';
    }
    os << '\n';
  }
  return kExitOk;
}

int cmd_encode(int m, int r, uint64_t gamma, const std::string& message, bool as_json,
               OutputTarget& out) {
  PirCode code = make_code(m, r, gamma);
  if (static_cast<int>(message.size()) != code.k()) {
    throw CLI::ValidationError("--message must have exactly k = " + std::to_string(code.k()) +
                               " bits");
  }
  std::vector<uint8_t> msg(code.k());
  for (int i = 0; i < code.k(); ++i) {
    if (message[i] != '0' && message[i] != '1') throw CLI::ValidationError("--message must be 0/1");
    msg[i] = message[i] == '1';
  }
  std::vector<uint8_t> cw = encode(code, msg);
  std::string cw_string(cw.size(), '0');
  for (size_t j = 0; j < cw.size(); ++j) cw_string[j] = cw[j] ? '1' : '0';
  std::ostream& os = out.stream();
  if (as_json) {
    os << json{{"message", message}, {"codeword", cw_string}}.dump(2) << '\n';
  } else {
    os << cw_string << '\n';
  }
  return kExitOk;
}

int cmd_bounds(uint64_t k, int tau, bool as_json, OutputTarget& out) {
  auto [report, code] = best_code(k, tau);
  std::ostream& os = out.stream();
  if (as_json) {
    os << to_json(report).dump(2) << '\n';
    return kExitOk;
  }
  os << "n(" << k << ", " << tau << ") >= " << report.lower << ", achieved " << report.achieved
     << " by SPRM(r=" << report.construction.r << ", m-1=" << report.construction.m - 1
     << ", gamma=" << report.construction.gamma << ")"
     << (report.construction.punctured ? " punctured" : "")
     << (report.optimal ? "  [optimal]" : "") << '\n';
  return kExitOk;
}

int cmd_table(int which, const std::string& format, OutputTarget& out) {
  std::ostream& os = out.stream();
  std::vector<std::string> diffs;
  if (which == 1) {
    Table1Result t = table1();
    diffs = t.diffs;
    if (format == "csv") {
      os << "gamma,rho,family,gamma_prime,k,n\n";
      for (const Table1Row& row : t.rows) {
        os << row.gamma << ',' << rho_string(row.rho) << ",\"" << family_string(row.family)
           << "\"," << row.gamma_prime << ',' << row.k << ',' << row.n << '\n';
      }
    } else {
      os << "| gamma | rho | P | gamma' | k | n |\n|---|---|---|---|---|---|\n";
      for (const Table1Row& row : t.rows) {
        os << "| " << row.gamma << " | " << rho_string(row.rho) << " | "
           << family_string(row.family) << " | " << row.gamma_prime << " | " << row.k << " | "
           << row.n << " |\n";
      }
    }
  } else {
    Table2Result t = table2();
    diffs = t.diffs;
    if (format == "csv") {
      os << "k,tau,n1,n2\n";
      for (const Table2Cell& c : t.cells) {
        os << c.k << ',' << c.tau << ',' << c.n1 << ',' << c.n2 << '\n';
      }
    } else {
      os << "| k | n1(3) | n2(3) | n1(4) | n2(4) | n1(8) | n2(8) | n1(16) | n2(16) |\n";
      os << "|---|---|---|---|---|---|---|---|---|\n";
      for (size_t i = 0; i < t.cells.size(); i += 4) {
        os << "| " << t.cells[i].k;
        for (size_t c = 0; c < 4; ++c) os << " | " << t.cells[i + c].n1 << " | " << t.cells[i + c].n2;
        os << " |\n";
      }
    }
  }
  if (!diffs.empty()) {
    for (const std::string& d : diffs) std::cerr << "table " << which << " diff: " << d << '\n';
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_simulate(int m, int r, uint64_t gamma, int records, int64_t trials, uint64_t seed,
                 bool audit, const std::string& transcript_path, bool as_json) {
  PirCode code = make_code(m, r, gamma);
  std::mt19937_64 rng(seed);

  std::vector<uint64_t> database(code.k());
  const uint64_t mask = records == 64 ? ~uint64_t{0} : (uint64_t{1} << records) - 1;
  for (auto& part : database) part = rng() & mask;
  ServerArray array = setup(code, database, records);

  int64_t correct = 0;
  for (int64_t t = 0; t < trials; ++t) {
    const int msg = static_cast<int>(rng() % code.k());
    const int rec = static_cast<int>(rng() % records);
    QueryPlan plan = make_query_plan(code, msg, rec, records, rng);
    const int got = execute(array, plan);
    if (got == static_cast<int>((database[msg] >> rec) & 1)) ++correct;
  }

  if (!transcript_path.empty()) {
    std::ofstream tf(transcript_path);
    if (!tf) throw std::runtime_error("cannot open transcript file: " + transcript_path);
    for (const TranscriptEntry& entry : array.transcript()) {
      tf << transcript_line(entry, records).dump() << '\n';
    }
  }

  std::optional<AuditReport> audit_report;
  if (audit) {
    array.clear_transcript();
    audit_report = privacy_audit(array, std::max<int64_t>(trials, 1000 * (int64_t{1} << records)),
                                 0.001, rng);
  }

  const bool ok = correct == trials && (!audit_report || audit_report->pass);
  if (as_json) {
    json j{{"m", m},       {"r", r},         {"gamma", gamma},  {"n", code.n()},
           {"k", code.k()}, {"tau", code.tau()}, {"B", records}, {"trials", trials},
           {"seed", seed}, {"correct", correct}};
    if (audit_report) {
      j["audit"] = json{{"pass", audit_report->pass},
                        {"alpha", audit_report->alpha},
                        {"trials_per_target", audit_report->trials_per_target},
                        {"failed_servers", audit_report->failed_servers}};
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "retrieved " << correct << "/" << trials << " bits correctly over " << code.n()
              << " servers (k=" << code.k() << ", tau=" << code.tau() << ", B=" << records
              << ", seed=" << seed << ")\n";
    if (audit_report) {
      std::cout << "privacy audit (alpha=0.001, " << audit_report->trials_per_target
                << " trials/target): " << (audit_report->pass ? "pass" : "FAIL") << '\n';
    }
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_verify(int max_m, int64_t trials, uint64_t seed, bool verbose) {
  VerifyOptions options;
  options.max_m = max_m;
  options.audit_trials = trials;
  options.seed = seed;
  auto results = run_acceptance(options, verbose ? &std::cerr : nullptr);
  for (const CriterionResult& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << r.id << "  ["
              << r.name << "]  " << r.detail << "  (" << std::fixed << std::setprecision(2)
              << r.seconds << "s)\n";
  }
  return all_passed(results) ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Projective Reed-Muller PIR code toolkit"};
  app.require_subcommand(1);

  int m = 0, r = 0, tau = 0, which = 1, records = 1, max_m = 8;
  std::optional<int> msg_index;
  uint64_t gamma = 0, k = 0, seed = 0;
  int64_t trials = 1000;
  std::string message, format = "md", transcript_path;
  bool as_json = false, table_mode = false, audit = false, verbose = false;
  OutputTarget out;

  auto add_code_flags = [&](CLI::App* cmd, bool with_gamma) {
    cmd->add_option("--m", m, "number of variables")->required();
    cmd->add_option("--r", r, "homogeneous degree")->required();
    if (with_gamma) cmd->add_option("--gamma", gamma, "shortening amount");
  };

  CLI::App* construct = app.add_subcommand("construct", "build a code and print its descriptor");
  add_code_flags(construct, true);
  construct->add_flag("--json", as_json, "machine-readable output");
  construct->add_option("--output", out.path, "write to file instead of stdout");

  CLI::App* shorten_cmd = app.add_subcommand("shorten", "shortening plan for gamma");
  add_code_flags(shorten_cmd, false);
  shorten_cmd->add_option("--gamma", gamma, "shortening amount")->required();
  CLI::Option* shorten_json = shorten_cmd->add_flag("--json", as_json, "machine-readable output");
  shorten_cmd->add_flag("--table", table_mode, "table-style row (default)")->excludes(shorten_json);
  shorten_cmd->add_option("--output", out.path, "write to file instead of stdout");

  CLI::App* recovery_cmd = app.add_subcommand("recovery", "print recovery sets");
  add_code_flags(recovery_cmd, true);
  recovery_cmd->add_option("--msg", msg_index, "single message index");
  recovery_cmd->add_flag("--json", as_json, "machine-readable output");
  recovery_cmd->add_option("--output", out.path, "write to file instead of stdout");

  CLI::App* encode_cmd = app.add_subcommand("encode", "encode a message");
  add_code_flags(encode_cmd, true);
  encode_cmd->add_option("--message", message, "k message bits, e.g. 100110")->required();
  encode_cmd->add_flag("--json", as_json, "machine-readable output");
  encode_cmd->add_option("--output", out.path, "write to file instead of stdout");

  CLI::App* bounds_cmd = app.add_subcommand("bounds", "block-length bound and best construction");
  bounds_cmd->add_option("--k", k, "code dimension")->required();
  bounds_cmd->add_option("--tau", tau, "server count (2, 2^l or 2^l - 1)")->required();
  bounds_cmd->add_flag("--json", as_json, "machine-readable output");
  bounds_cmd->add_option("--output", out.path, "write to file instead of stdout");

  CLI::App* table_cmd = app.add_subcommand("table", "print a reference table");
  table_cmd->add_option("--which", which, "1 or 2")->required()->check(CLI::Range(1, 2));
  table_cmd->add_option("--format", format, "md or csv")->check(CLI::IsMember({"md", "csv"}));
  table_cmd->add_option("--output", out.path, "write to file instead of stdout");

  CLI::App* simulate_cmd = app.add_subcommand("simulate", "private retrieval over coded servers");
  add_code_flags(simulate_cmd, true);
  simulate_cmd->add_option("--B", records, "records per part")->required();
  simulate_cmd->add_option("--trials", trials, "number of retrievals");
  simulate_cmd->add_option("--seed", seed, "RNG seed (PIR_SEED overrides)");
  simulate_cmd->add_flag("--audit", audit, "run the per-server privacy audit");
  simulate_cmd->add_option("--transcript", transcript_path, "dump transcript as JSON lines");
  simulate_cmd->add_flag("--json", as_json, "machine-readable output");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the full verification suite");
  verify_cmd->add_option("--max-m", max_m, "cap on the structural sweeps");
  verify_cmd->add_option("--trials", trials, "privacy-audit trials per target")
      ->default_val(int64_t{20000});
  verify_cmd->add_option("--seed", seed, "RNG seed (PIR_SEED overrides)");
  verify_cmd->add_flag("--verbose", verbose, "progress to stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (const char* env_seed = std::getenv("PIR_SEED")) {
    seed = std::strtoull(env_seed, nullptr, 10);
  }

  try {
    if (construct->parsed()) return cmd_construct(m, r, gamma, as_json, out);
    if (shorten_cmd->parsed()) return cmd_shorten(m, r, gamma, as_json && !table_mode, out);
    if (recovery_cmd->parsed()) return cmd_recovery(m, r, gamma, msg_index, as_json, out);
    if (encode_cmd->parsed()) return cmd_encode(m, r, gamma, message, as_json, out);
    if (bounds_cmd->parsed()) return cmd_bounds(k, tau, as_json, out);
    if (table_cmd->parsed()) return cmd_table(which, format, out);
    if (simulate_cmd->parsed()) {
      return cmd_simulate(m, r, gamma, records, trials, seed, audit, transcript_path, as_json);
    }
    if (verify_cmd->parsed()) return cmd_verify(max_m, trials, seed, verbose);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}
