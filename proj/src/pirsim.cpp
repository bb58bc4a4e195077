#include "prmpir/pirsim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace prmpir {

namespace {

constexpr int kMaxRecords = 64;
constexpr int kMaxAuditRecords = 4;

uint64_t record_mask(int records) {
  return records == 64 ? ~uint64_t{0} : (uint64_t{1} << records) - 1;
}

uint64_t uniform_bits(std::mt19937_64& rng, int records) {
  return rng() & record_mask(records);
}

int inner_product(uint64_t a, uint64_t b) { return std::popcount(a & b) & 1; }

// Regularized incomplete gamma Q(a, x) by series / continued fraction
// (Numerical Recipes style); accurate to ~1e-10 for the ranges used here.
double upper_gamma_q(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw std::invalid_argument("upper_gamma_q: bad arguments");
  if (x == 0.0) return 1.0;
  const double lg = std::lgamma(a);
  if (x < a + 1.0) {
    // P(a,x) by series, then Q = 1 - P.
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int i = 0; i < 500; ++i) {
      ap += 1.0;
      term *= x / ap;
      sum += term;
      if (std::fabs(term) < std::fabs(sum) * 1e-15) break;
    }
    double p = sum * std::exp(-x + a * std::log(x) - lg);
    return 1.0 - p;
  }
  // Q(a,x) by Lentz continued fraction.
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-15) break;
  }
  return std::exp(-x + a * std::log(x) - lg) * h;
}

}  // namespace

ServerArray::ServerArray(PirCode code, const std::vector<uint64_t>& database, int records)
    : code_(std::move(code)), records_(records) {
  if (records < 1 || records > kMaxRecords) {
    throw std::invalid_argument("ServerArray: records per part must be in [1, 64]");
  }
  if (static_cast<int>(database.size()) != code_.k()) {
    throw std::invalid_argument("ServerArray: database must have k parts");
  }
  const uint64_t mask = record_mask(records);
  for (uint64_t part : database) {
    if ((part & ~mask) != 0) throw std::invalid_argument("ServerArray: record bits beyond B");
  }
  shares_.assign(code_.n(), 0);
  for (int j = 0; j < code_.n(); ++j) {
    uint64_t share = 0;
    for (int i = 0; i < code_.k(); ++i) {
      if (code_.generator.get(i, j)) share ^= database[i];
    }
    shares_[j] = share;
  }
}

void ServerArray::clear_transcript() { transcript_.clear(); }

ServerArray setup(const PirCode& code, const std::vector<uint64_t>& database, int records) {
  return ServerArray(code, database, records);
}

QueryPlan make_query_plan(const PirCode& code, int msg, int rec, int records,
                          std::mt19937_64& rng, QueryClient client) {
  if (msg < 0 || msg >= code.k()) throw std::out_of_range("make_query_plan: message index");
  if (rec < 0 || rec >= records) throw std::out_of_range("make_query_plan: record index");
  if (records < 1 || records > kMaxRecords) {
    throw std::invalid_argument("make_query_plan: records per part must be in [1, 64]");
  }

  const int tau = code.tau();
  const uint64_t target = uint64_t{1} << rec;

  QueryPlan plan;
  plan.msg = msg;
  plan.rec = rec;
  plan.queries.assign(tau, 0);

  uint64_t acc = 0;
  switch (client) {
    case QueryClient::kHonest:
      // tau uniform shares constrained to XOR to e_rec.
      for (int t = 0; t + 1 < tau; ++t) {
        plan.queries[t] = uniform_bits(rng, records);
        acc ^= plan.queries[t];
      }
      plan.queries[tau - 1] = acc ^ target;
      break;
    case QueryClient::kPlaintext:
      // Broken on purpose: the first share is the plain target indicator.
      plan.queries[0] = target;
      for (int t = 1; t + 1 < tau; ++t) {
        plan.queries[t] = uniform_bits(rng, records);
        acc ^= plan.queries[t];
      }
      if (tau > 1) plan.queries[tau - 1] = acc ^ plan.queries[0] ^ target;
      break;
  }

  plan.assignment.assign(code.n(), -1);
  for (int t = 0; t < tau; ++t) {
    for (int j : code.recovery[msg][t]) plan.assignment[j] = t;
  }
  plan.server_query.assign(code.n(), 0);
  for (int j = 0; j < code.n(); ++j) {
    // Servers outside every recovery set still get one (dummy) query so the
    // traffic pattern carries no information.
    plan.server_query[j] =
        plan.assignment[j] >= 0 ? plan.queries[plan.assignment[j]] : uniform_bits(rng, records);
  }
  return plan;
}

int execute(ServerArray& array, const QueryPlan& plan) {
  const PirCode& code = array.code_;
  if (static_cast<int>(plan.server_query.size()) != code.n()) {
    throw std::invalid_argument("execute: plan does not match code");
  }
  const int64_t id = array.retrievals_++;
  std::vector<int> answers(code.n());
  for (int j = 0; j < code.n(); ++j) {
    answers[j] = inner_product(plan.server_query[j], array.shares_[j]);
    array.transcript_.push_back(TranscriptEntry{id, j, plan.server_query[j], answers[j]});
  }
  int bit = 0;
  for (int t = 0; t < code.tau(); ++t) {
    for (int j : code.recovery[plan.msg][t]) bit ^= answers[j];
  }
  return bit;
}

double chi_square_pvalue(double stat, int df) {
  if (df < 1) throw std::invalid_argument("chi_square_pvalue: df must be positive");
  if (stat <= 0.0) return 1.0;
  return upper_gamma_q(df / 2.0, stat / 2.0);
}

AuditReport privacy_audit(ServerArray& array, int64_t trials_per_target, double alpha,
                          std::mt19937_64& rng, QueryClient client) {
  const PirCode& code = array.code();
  const int records = array.records();
  if (records > kMaxAuditRecords) {
    throw std::invalid_argument("privacy_audit: records per part must be <= 4");
  }
  const int64_t cells = int64_t{1} << records;
  if (trials_per_target < 1000 * cells) {
    throw std::invalid_argument("privacy_audit: too few trials for the test");
  }

  AuditReport report;
  report.records = records;
  report.trials_per_target = trials_per_target;
  report.alpha = alpha;
  report.df = static_cast<int>(cells) - 1;

  const double expected = static_cast<double>(trials_per_target) / static_cast<double>(cells);
  std::vector<int64_t> counts(static_cast<size_t>(code.n()) * cells);
  std::vector<bool> failed(code.n(), false);

  for (int msg = 0; msg < code.k(); ++msg) {
    for (int rec = 0; rec < records; ++rec) {
      std::fill(counts.begin(), counts.end(), 0);
      for (int64_t trial = 0; trial < trials_per_target; ++trial) {
        QueryPlan plan = make_query_plan(code, msg, rec, records, rng, client);
        execute(array, plan);
        for (int j = 0; j < code.n(); ++j) {
          ++counts[static_cast<size_t>(j) * cells + plan.server_query[j]];
        }
      }
      for (int j = 0; j < code.n(); ++j) {
        double chi2 = 0.0;
        for (int64_t q = 0; q < cells; ++q) {
          double diff = static_cast<double>(counts[static_cast<size_t>(j) * cells + q]) - expected;
          chi2 += diff * diff / expected;
        }
        AuditStat stat;
        stat.server = j;
        stat.msg = msg;
        stat.rec = rec;
        stat.chi2 = chi2;
        stat.pvalue = chi_square_pvalue(chi2, report.df);
        if (stat.pvalue < alpha) failed[j] = true;
        report.stats.push_back(stat);
      }
    }
  }
  for (int j = 0; j < code.n(); ++j) {
    if (failed[j]) report.failed_servers.push_back(j);
  }
  report.pass = report.failed_servers.empty();
  return report;
}

}  // namespace prmpir
