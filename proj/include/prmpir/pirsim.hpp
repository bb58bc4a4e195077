#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "prmpir/prm.hpp"

namespace prmpir {

// One logged query/answer exchange. Queries are B-bit masks (bit j = record
// j of the server's share).
struct TranscriptEntry {
  int64_t retrieval = 0;
  int server = 0;
  uint64_t query = 0;
  int answer = 0;
};

// n simulated servers, each holding one coded coordinate of a k x B bit
// database: server j stores the length-B column c_j with
// c_j[b] = XOR_i G[i][j] * db[i][b].
class ServerArray {
 public:
  // database[i] packs the B bits of message part i (bit b = record b).
  ServerArray(PirCode code, const std::vector<uint64_t>& database, int records);

  const PirCode& code() const { return code_; }
  int records() const { return records_; }
  uint64_t share(int server) const { return shares_.at(server); }
  const std::vector<TranscriptEntry>& transcript() const { return transcript_; }
  int64_t retrievals() const { return retrievals_; }
  void clear_transcript();

 private:
  friend int execute(ServerArray& array, const struct QueryPlan& plan);

  PirCode code_;
  int records_;
  std::vector<uint64_t> shares_;
  std::vector<TranscriptEntry> transcript_;
  int64_t retrievals_ = 0;
};

ServerArray setup(const PirCode& code, const std::vector<uint64_t>& database, int records);

enum class QueryClient {
  kHonest,     // additive sharing; every query marginally uniform
  kPlaintext,  // broken: first query is e_rec in the clear (audit negative control)
};

// Queries for retrieving database[msg][rec]: tau shares q_0..q_{tau-1} with
// XOR equal to e_rec, q_t assigned to every server in recovery set t, and an
// independent uniform dummy for every unassigned server.
struct QueryPlan {
  int msg = 0;
  int rec = 0;
  std::vector<uint64_t> queries;       // the tau shares
  std::vector<int> assignment;         // per server: share index, -1 = dummy
  std::vector<uint64_t> server_query;  // per server: the query actually sent
};

QueryPlan make_query_plan(const PirCode& code, int msg, int rec, int records,
                          std::mt19937_64& rng, QueryClient client = QueryClient::kHonest);

// Sends every server its query, logs the exchanges, and combines the
// recovery-set answers: returns XOR_t XOR_{s in R_t} <q_t, share_s>, which
// equals database[msg][rec].
int execute(ServerArray& array, const QueryPlan& plan);

// Upper-tail probability of a chi-square variate with df degrees of freedom.
double chi_square_pvalue(double stat, int df);

struct AuditStat {
  int server = 0;
  int msg = 0;
  int rec = 0;
  double chi2 = 0.0;
  double pvalue = 1.0;
};

// Per-server, per-target chi-square of the received-query distribution
// against uniform on F_2^B. A server fails when any target's p-value drops
// below alpha; privacy requires every conditional view to stay uniform.
struct AuditReport {
  int records = 0;
  int64_t trials_per_target = 0;
  double alpha = 0.0;
  int df = 0;
  std::vector<AuditStat> stats;
  std::vector<int> failed_servers;
  bool pass = false;
};

// Runs trials_per_target retrievals for every target (msg, rec) and tests
// each server's conditional query distribution. Requires records <= 4 (the
// query space is tabulated exhaustively) and trials_per_target >=
// 1000 * 2^records.
AuditReport privacy_audit(ServerArray& array, int64_t trials_per_target, double alpha,
                          std::mt19937_64& rng, QueryClient client = QueryClient::kHonest);

}  // namespace prmpir
