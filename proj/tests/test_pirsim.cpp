#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "prmpir/pirsim.hpp"
#include "prmpir/shorten.hpp"

using namespace prmpir;

namespace {

// The (5, 4) single-parity-check code with two recovery sets per symbol.
PirCode example_code() { return build_prm(4, 3); }

std::vector<uint64_t> random_database(int k, int records, std::mt19937_64& rng) {
  std::vector<uint64_t> db(k);
  const uint64_t mask = (uint64_t{1} << records) - 1;
  for (auto& part : db) part = rng() & mask;
  return db;
}

}  // namespace

TEST_CASE("setup places the parity of the systematic shares on the last server") {
  std::mt19937_64 rng(1);
  PirCode code = example_code();
  auto db = random_database(4, 3, rng);
  ServerArray array = setup(code, db, 3);
  uint64_t parity = 0;
  for (int j = 0; j < 4; ++j) {
    CHECK(array.share(j) == db[j]);  // systematic servers hold the parts
    parity ^= db[j];
  }
  CHECK(array.share(4) == parity);
}

TEST_CASE("setup of the zero database is all-zero") {
  ServerArray array = setup(build_prm(4, 2), std::vector<uint64_t>(6, 0), 4);
  for (int j = 0; j < 11; ++j) CHECK(array.share(j) == 0);
}

TEST_CASE("shares re-encode the database") {
  std::mt19937_64 rng(2);
  PirCode code = build_prm(4, 2);
  auto db = random_database(code.k(), 4, rng);
  ServerArray array = setup(code, db, 4);
  for (int rec = 0; rec < 4; ++rec) {
    std::vector<uint8_t> column(code.k());
    for (int i = 0; i < code.k(); ++i) column[i] = (db[i] >> rec) & 1;
    auto cw = encode(code, column);
    for (int j = 0; j < code.n(); ++j) CHECK(((array.share(j) >> rec) & 1) == cw[j]);
  }
}

TEST_CASE("setup rejects bad dimensions") {
  PirCode code = example_code();
  CHECK_THROWS_AS(setup(code, std::vector<uint64_t>(3, 0), 2), std::invalid_argument);
  CHECK_THROWS_AS(setup(code, std::vector<uint64_t>(4, 0), 0), std::invalid_argument);
  CHECK_THROWS_AS(setup(code, std::vector<uint64_t>(4, 0b100), 2), std::invalid_argument);
}

TEST_CASE("query shares XOR to the record indicator") {
  std::mt19937_64 rng(3);
  PirCode code = build_prm(4, 2);
  for (int trial = 0; trial < 200; ++trial) {
    int msg = static_cast<int>(rng() % code.k());
    int rec = static_cast<int>(rng() % 4);
    QueryPlan plan = make_query_plan(code, msg, rec, 4, rng);
    uint64_t acc = 0;
    for (uint64_t q : plan.queries) acc ^= q;
    CHECK(acc == (uint64_t{1} << rec));
  }
}

TEST_CASE("two-share plans over a single record") {
  std::mt19937_64 rng(4);
  PirCode code = example_code();
  for (int trial = 0; trial < 50; ++trial) {
    QueryPlan plan = make_query_plan(code, 0, 0, 1, rng);
    REQUIRE(plan.queries.size() == 2);
    CHECK((plan.queries[0] ^ plan.queries[1]) == 1);
  }
}

TEST_CASE("assignment follows the recovery sets of the target") {
  std::mt19937_64 rng(5);
  PirCode code = example_code();
  QueryPlan plan = make_query_plan(code, 0, 0, 2, rng);
  // Message 0 recovers from {server 0} and {servers 1..4}.
  CHECK(plan.assignment == std::vector<int>{0, 1, 1, 1, 1});
  for (int j = 0; j < code.n(); ++j) {
    CHECK(plan.server_query[j] == plan.queries[plan.assignment[j]]);
  }
}

TEST_CASE("every coordinate of a shortened code is still assigned") {
  std::mt19937_64 rng(6);
  PirCode code = build_sprm(5, 2, 4);
  for (int msg = 0; msg < code.k(); ++msg) {
    QueryPlan plan = make_query_plan(code, msg, 0, 2, rng);
    for (int j = 0; j < code.n(); ++j) CHECK(plan.assignment[j] >= 0);
  }
}

TEST_CASE("unassigned servers of a punctured code receive dummy queries") {
  std::mt19937_64 rng(6);
  // Puncturing drops one recovery set per symbol; that set's other
  // coordinates are left outside every set and must get dummies.
  PirCode code = puncture(build_prm(4, 2));
  bool saw_dummy = false;
  for (int msg = 0; msg < code.k(); ++msg) {
    QueryPlan plan = make_query_plan(code, msg, 0, 2, rng);
    for (int j = 0; j < code.n(); ++j) {
      if (plan.assignment[j] < 0) saw_dummy = true;
    }
  }
  CHECK(saw_dummy);
}

TEST_CASE("execute retrieves the stored bit exactly") {
  std::mt19937_64 rng(7);
  for (const PirCode& code : {example_code(), build_prm(4, 2), build_sprm(5, 2, 4)}) {
    for (int trial = 0; trial < 300; ++trial) {
      auto db = random_database(code.k(), 3, rng);
      ServerArray array = setup(code, db, 3);
      int msg = static_cast<int>(rng() % code.k());
      int rec = static_cast<int>(rng() % 3);
      QueryPlan plan = make_query_plan(code, msg, rec, 3, rng);
      CHECK(execute(array, plan) == static_cast<int>((db[msg] >> rec) & 1));
    }
  }
}

TEST_CASE("zero database retrieves zero under any plan") {
  std::mt19937_64 rng(8);
  PirCode code = build_prm(4, 2);
  ServerArray array = setup(code, std::vector<uint64_t>(code.k(), 0), 4);
  for (int trial = 0; trial < 100; ++trial) {
    QueryPlan plan = make_query_plan(code, static_cast<int>(rng() % code.k()),
                                     static_cast<int>(rng() % 4), 4, rng);
    CHECK(execute(array, plan) == 0);
  }
}

TEST_CASE("transcript logs one query per server per retrieval") {
  std::mt19937_64 rng(9);
  PirCode code = build_sprm(5, 2, 4);
  ServerArray array = setup(code, random_database(code.k(), 2, rng), 2);
  for (int trial = 1; trial <= 5; ++trial) {
    QueryPlan plan = make_query_plan(code, 0, 0, 2, rng);
    execute(array, plan);
    CHECK(array.transcript().size() == static_cast<size_t>(trial * code.n()));
  }
  array.clear_transcript();
  CHECK(array.transcript().empty());
  CHECK(array.retrievals() == 5);
}

TEST_CASE("identical seeds replay identical transcripts") {
  auto run = [](uint64_t seed) {
    std::mt19937_64 rng(seed);
    PirCode code = build_prm(4, 2);
    ServerArray array = setup(code, random_database(code.k(), 3, rng), 3);
    for (int trial = 0; trial < 20; ++trial) {
      QueryPlan plan = make_query_plan(code, static_cast<int>(rng() % code.k()),
                                       static_cast<int>(rng() % 3), 3, rng);
      execute(array, plan);
    }
    return array;
  };
  ServerArray a = run(123), b = run(123), c = run(124);
  REQUIRE(a.transcript().size() == b.transcript().size());
  for (size_t i = 0; i < a.transcript().size(); ++i) {
    CHECK(a.transcript()[i].server == b.transcript()[i].server);
    CHECK(a.transcript()[i].query == b.transcript()[i].query);
    CHECK(a.transcript()[i].answer == b.transcript()[i].answer);
  }
  bool differs = false;
  for (size_t i = 0; i < std::min(a.transcript().size(), c.transcript().size()); ++i) {
    if (a.transcript()[i].query != c.transcript()[i].query) differs = true;
  }
  CHECK(differs);
}

TEST_CASE("chi-square tail probabilities match reference values") {
  CHECK(chi_square_pvalue(10.8276, 1) == doctest::Approx(0.001).epsilon(1e-3));
  CHECK(chi_square_pvalue(16.2662, 3) == doctest::Approx(0.001).epsilon(1e-3));
  CHECK(chi_square_pvalue(24.3219, 7) == doctest::Approx(0.001).epsilon(1e-3));
  CHECK(chi_square_pvalue(37.6973, 15) == doctest::Approx(0.001).epsilon(1e-3));
  CHECK(chi_square_pvalue(7.8147, 3) == doctest::Approx(0.05).epsilon(1e-3));
  CHECK(chi_square_pvalue(0.5, 3) == doctest::Approx(0.9188914).epsilon(1e-6));
  CHECK(chi_square_pvalue(30.0, 3) == doctest::Approx(1.38006e-6).epsilon(1e-4));
  CHECK(chi_square_pvalue(0.0, 4) == 1.0);
  CHECK_THROWS_AS(chi_square_pvalue(1.0, 0), std::invalid_argument);
}

TEST_CASE("privacy audit passes the honest client and catches the broken one") {
  PirCode code = example_code();
  std::vector<uint64_t> db(code.k(), 0);

  std::mt19937_64 rng(0);
  ServerArray honest = setup(code, db, 2);
  AuditReport report = privacy_audit(honest, 4000, 0.001, rng);
  CHECK(report.pass);
  CHECK(report.df == 3);
  CHECK(report.stats.size() == static_cast<size_t>(code.n() * code.k() * 2));

  std::mt19937_64 rng2(0);
  ServerArray broken = setup(code, db, 2);
  AuditReport bad = privacy_audit(broken, 4000, 0.001, rng2, QueryClient::kPlaintext);
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.failed_servers.empty());
}

TEST_CASE("privacy audit rejects undersized runs") {
  PirCode code = example_code();
  std::vector<uint64_t> db(code.k(), 0);
  ServerArray array = setup(code, db, 2);
  std::mt19937_64 rng(0);
  CHECK_THROWS_AS(privacy_audit(array, 3999, 0.001, rng), std::invalid_argument);

  ServerArray wide = setup(code, db, 5);
  CHECK_THROWS_AS(privacy_audit(wide, 1 << 20, 0.001, rng), std::invalid_argument);
}
