#include "prmpir/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace prmpir {

namespace {

struct GoldenTable1Row {
  int gamma;
  int rho[3];
  const char* family;  // comma-separated element lists
  int gamma_prime, k, n;
};

constexpr GoldenTable1Row kTable1[] = {
    {0, {0, 0, 0}, "", 0, 10, 26},
    {1, {0, 0, 1}, "12", 1, 9, 25},
    {2, {0, 0, 2}, "12,13", 2, 8, 24},
    {3, {0, 1, 0}, "123", 4, 7, 22},
    {4, {0, 1, 1}, "123,14", 5, 6, 21},
    {5, {0, 2, 0}, "123,124", 7, 5, 19},
    {6, {1, 0, 0}, "1234", 11, 4, 15},
    {7, {1, 0, 1}, "1234,15", 12, 3, 14},
    {8, {1, 1, 0}, "1234,125", 14, 2, 12},
    {9, {2, 0, 0}, "1234,1235", 18, 1, 8},
};

// Reference block lengths for k in [2, 32]: four (n1, n2) pairs per row,
// for tau = 3, 4, 8, 16. n2 is the best previously reported value and is
// shipped as static data only.
struct GoldenTable2Row {
  int k;
  int cells[4][2];
};

constexpr int kTable2Taus[4] = {3, 4, 8, 16};

constexpr GoldenTable2Row kTable2[] = {
    {2, {{5, 5}, {6, 6}, {12, 12}, {24, 24}}},
    {3, {{6, 6}, {7, 7}, {14, 14}, {28, 28}}},
    {4, {{8, 8}, {9, 9}, {15, 15}, {30, 30}}},
    {5, {{9, 10}, {10, 11}, {19, 19}, {31, 31}}},
    {6, {{10, 11}, {11, 12}, {21, 21}, {39, 40}}},
    {7, {{12, 12}, {13, 13}, {22, 23}, {43, 43}}},
    {8, {{13, 13}, {14, 14}, {24, 28}, {45, 54}}},
    {9, {{14, 14}, {15, 15}, {25, 30}, {46, 60}}},
    {10, {{15, 17}, {16, 18}, {26, 35}, {50, 61}}},
    {11, {{17, 19}, {18, 20}, {30, 37}, {52, 67}}},
    {12, {{18, 20}, {19, 21}, {32, 39}, {53, 69}}},
    {13, {{19, 21}, {20, 22}, {33, 41}, {55, 71}}},
    {14, {{20, 22}, {21, 23}, {35, 43}, {56, 74}}},
    {15, {{21, 23}, {22, 24}, {36, 44}, {57, 80}}},
    {16, {{23, 24}, {24, 25}, {37, 45}, {65, 84}}},
    {17, {{24, 27}, {25, 28}, {39, 46}, {69, 86}}},
    {18, {{25, 28}, {26, 29}, {40, 47}, {71, 88}}},
    {19, {{26, 29}, {27, 30}, {41, 48}, {72, 90}}},
    {20, {{27, 30}, {28, 31}, {42, 49}, {76, 92}}},
    {21, {{28, 31}, {29, 32}, {46, 50}, {78, 94}}},
    {22, {{30, 32}, {31, 33}, {48, 51}, {79, 100}}},
    {23, {{31, 33}, {32, 34}, {49, 52}, {81, 104}}},
    {24, {{32, 34}, {33, 35}, {51, 53}, {82, 106}}},
    {25, {{33, 35}, {34, 36}, {52, 54}, {83, 108}}},
    {26, {{34, 38}, {35, 39}, {53, 55}, {87, 110}}},
    {27, {{35, 39}, {36, 40}, {55, 56}, {89, 112}}},
    {28, {{36, 40}, {37, 41}, {56, 57}, {90, 114}}},
    {29, {{38, 41}, {39, 42}, {57, 58}, {92, 116}}},
    {30, {{39, 42}, {40, 43}, {58, 59}, {93, 118}}},
    {31, {{40, 43}, {41, 44}, {60, 60}, {94, 120}}},
    {32, {{41, 44}, {42, 45}, {61, 61}, {96, 122}}},
};

std::vector<SubsetMask> parse_family(const char* text, int m) {
  std::vector<SubsetMask> out;
  std::string s(text);
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    std::vector<int> elems;
    for (char c : tok) elems.push_back(c - '0');
    out.push_back(SubsetMask::of(elems, m));
  }
  return out;
}

bool same_family(std::vector<SubsetMask> a, std::vector<SubsetMask> b) {
  auto key = [](const SubsetMask& s) { return s.bits; };
  std::vector<uint32_t> ka, kb;
  for (const auto& s : a) ka.push_back(key(s));
  for (const auto& s : b) kb.push_back(key(s));
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  return ka == kb;
}

}  // namespace

uint64_t isqrt(uint64_t x) {
  if (x == 0) return 0;
  uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r > x / r) --r;
  while ((r + 1) <= x / (r + 1)) ++r;
  return r;
}

uint64_t lb_systematic(uint64_t k, int tau) {
  if (k < 1) throw std::invalid_argument("lb_systematic: k must be positive");
  if (tau == 2) return k + 1;
  if (tau < 3) throw std::invalid_argument("lb_systematic: need tau >= 2");
  if (k > (UINT64_MAX - 1) / 8) throw std::overflow_error("lb_systematic: k too large");

  // ceil((sqrt(8k+1) + 1) / 2) without floating point: s = floor(sqrt(8k+1))
  // is odd exactly when 8k+1 is a perfect square.
  const uint64_t v = 8 * k + 1;
  const uint64_t s = isqrt(v);
  uint64_t ceil_term;
  if (s * s == v) {
    ceil_term = (s + 1) / 2;
  } else if (s % 2 == 1) {
    ceil_term = (s + 3) / 2;
  } else {
    ceil_term = (s + 2) / 2;
  }
  return k + ceil_term + static_cast<uint64_t>(tau - 3);
}

std::pair<BoundReport, PirCode> best_code(uint64_t k, int tau) {
  if (k < 1) throw std::invalid_argument("best_code: k must be positive");
  if (k > (uint64_t{1} << 20)) {
    throw std::invalid_argument("best_code: dimension exceeds the block-length guard");
  }

  int ell;
  bool punctured;
  if (tau == 2) {
    ell = 1;
    punctured = false;
  } else if (tau >= 3 && std::has_single_bit(static_cast<unsigned>(tau) + 1)) {
    ell = std::countr_zero(static_cast<unsigned>(tau) + 1);
    punctured = true;
  } else if (tau >= 4 && std::has_single_bit(static_cast<unsigned>(tau))) {
    ell = std::countr_zero(static_cast<unsigned>(tau));
    punctured = false;
  } else {
    throw std::invalid_argument("best_code: unsupported tau");
  }

  // Smallest admissible m: binom(m, ell) >= k with r = m - ell >= 1.
  int m = ell + 1;
  while (binom(m, ell) < k) ++m;
  const uint64_t gamma = binom(m, ell) - k;

  PirCode code = build_sprm(m, m - ell, gamma);
  if (punctured) code = puncture(code);

  BoundReport report;
  report.k = k;
  report.tau = tau;
  report.lower = lb_systematic(k, tau);
  report.achieved = static_cast<uint64_t>(code.n());
  report.construction = Construction{m, m - ell, gamma, punctured};
  report.optimal = report.lower == report.achieved;
  return {report, std::move(code)};
}

std::pair<uint64_t, uint64_t> ghw_upper(int m, int r, uint64_t gamma) {
  PrmParams params = prm_params(m, r);
  if (gamma >= params.k) throw std::invalid_argument("ghw_upper: gamma out of range");
  ShorteningPlan plan = shortening_plan(m, r, gamma);
  return {params.k - gamma, params.n - plan.gamma_prime};
}

Table1Result table1() {
  Table1Result result;
  for (const GoldenTable1Row& golden : kTable1) {
    ShorteningPlan plan = shortening_plan(5, 2, golden.gamma);

    Table1Row row;
    row.gamma = golden.gamma;
    row.rho.assign(plan.rho.rho.rbegin(), plan.rho.rho.rend());
    row.family = plan.rho.family;
    row.gamma_prime = plan.gamma_prime;
    row.k = binom(5, 2) - golden.gamma;
    row.n = prm_params(5, 2).n - plan.gamma_prime;

    std::ostringstream diff;
    std::vector<int> want_rho(golden.rho, golden.rho + 3);
    if (row.rho != want_rho) diff << " rho";
    if (!same_family(row.family, parse_family(golden.family, 5))) diff << " family";
    if (row.gamma_prime != static_cast<uint64_t>(golden.gamma_prime)) diff << " gamma'";
    if (row.k != static_cast<uint64_t>(golden.k)) diff << " k";
    if (row.n != static_cast<uint64_t>(golden.n)) diff << " n";
    if (!diff.str().empty()) {
      result.diffs.push_back("gamma=" + std::to_string(golden.gamma) + ": mismatch in" + diff.str());
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

Table2Result table2() {
  Table2Result result;
  for (const GoldenTable2Row& golden : kTable2) {
    for (int c = 0; c < 4; ++c) {
      Table2Cell cell;
      cell.k = golden.k;
      cell.tau = kTable2Taus[c];
      cell.n1_expected = golden.cells[c][0];
      cell.n2 = golden.cells[c][1];
      cell.n1 = best_code(golden.k, cell.tau).first.achieved;

      if (cell.n1 != static_cast<uint64_t>(cell.n1_expected)) {
        result.diffs.push_back("k=" + std::to_string(cell.k) + " tau=" + std::to_string(cell.tau) +
                               ": n1=" + std::to_string(cell.n1) + " expected " +
                               std::to_string(cell.n1_expected));
      } else if (cell.n1 > static_cast<uint64_t>(cell.n2)) {
        result.diffs.push_back("k=" + std::to_string(cell.k) + " tau=" + std::to_string(cell.tau) +
                               ": n1 exceeds n2");
      }
      result.cells.push_back(cell);
    }
  }
  return result;
}

}  // namespace prmpir
