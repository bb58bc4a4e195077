#include "prmpir/shorten.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace prmpir {

namespace {

// Rebuilds a code after dropping rows/columns: keep_* are sorted index
// lists into the parent code. Recovery sets are the parent's sets restricted
// to surviving coordinates; each stays nonempty because its column sum is a
// surviving unit vector.
PirCode restrict_code(const PirCode& parent, const std::vector<int>& keep_rows,
                      const std::vector<int>& keep_cols, uint64_t new_gamma) {
  PirCode out{CodeSpec{parent.spec.m, parent.spec.r, new_gamma},
              {},
              parent.generator.select(keep_rows, keep_cols),
              {},
              parent.declared_tau};
  out.coordinates.reserve(keep_cols.size());
  for (int j : keep_cols) out.coordinates.push_back(parent.coordinates[j]);

  std::vector<int> col_map(parent.n(), -1);
  for (size_t j = 0; j < keep_cols.size(); ++j) col_map[keep_cols[j]] = static_cast<int>(j);

  out.recovery.reserve(keep_rows.size());
  for (int i : keep_rows) {
    std::vector<std::vector<int>> sets;
    sets.reserve(parent.recovery[i].size());
    for (const auto& set : parent.recovery[i]) {
      std::vector<int> kept;
      kept.reserve(set.size());
      for (int j : set) {
        if (col_map[j] >= 0) kept.push_back(col_map[j]);
      }
      if (kept.empty()) {
        throw std::logic_error("restrict_code: recovery set vanished");
      }
      sets.push_back(std::move(kept));
    }
    out.recovery.push_back(std::move(sets));
  }
  return out;
}

}  // namespace

uint64_t count_new_messages(int p, int r, int t) {
  if (p < 0 || r < 0 || t < 0) throw std::invalid_argument("count_new_messages: negative argument");
  uint64_t total = 0;
  for (int i = 0; i < p; ++i) total += binom(r + t - i, r - i);
  return total;
}

uint64_t count_new_coordinates(int p, int r, int t) {
  if (p < 0 || r < 0 || t < 0) throw std::invalid_argument("count_new_coordinates: negative argument");
  uint64_t total = 0;
  for (int j = 0; j <= t; ++j) {
    for (int i = 0; i < p; ++i) total += binom(r + t - i, r + j - i);
  }
  return total;
}

RhoDecomposition rho_decompose(uint64_t gamma, int r, int ell) {
  if (r < 0 || ell < 0) throw std::invalid_argument("rho_decompose: negative parameters");
  if (gamma >= binom(r + ell, ell)) throw std::invalid_argument("rho_decompose: gamma out of range");

  RhoDecomposition d;
  d.r = r;
  d.ell = ell;
  d.gamma = gamma;
  d.rho.assign(ell, 0);
  d.r_t.assign(ell, 0);

  uint64_t residual = gamma;
  int r_t = r;
  for (int t = ell - 1; t >= 0; --t) {
    d.r_t[t] = r_t;
    // rho_t is the p with residual in [h(p, r_t, t), h(p+1, r_t, t)).
    int p = 0;
    while (p < r_t && count_new_messages(p + 1, r_t, t) <= residual) ++p;
    d.rho[t] = p;
    residual -= count_new_messages(p, r_t, t);
    r_t -= p;
  }
  if (residual != 0) throw std::logic_error("rho_decompose: nonzero residual");
  return d;
}

std::vector<SubsetMask> set_family(const RhoDecomposition& d, int m) {
  if (d.r + d.ell != m) throw std::invalid_argument("set_family: decomposition does not match m");

  std::vector<SubsetMask> family;
  // Walk the nested chain: level r+t holds sets obtained from the level
  // above by removing a single element; the first rho[t] of them join the
  // family, and the next one seeds the level below.
  SubsetMask base = SubsetMask::full_set(m);  // the single set at level r + ell
  for (int t = d.ell - 1; t >= 0; --t) {
    const int r_t = d.r_t[t];
    // Sets at level r+t: base \ {r_t + (t+1) - 1 - i} for i in [0, r_t + t].
    auto level_set = [&](int i) {
      int removed = r_t + t + 1 - i;
      if (!base.contains(removed)) throw std::logic_error("set_family: removed element missing");
      return base.without(removed);
    };
    for (int i = 0; i < d.rho[t]; ++i) family.push_back(level_set(i));
    if (t > 0) base = level_set(d.rho[t]);
  }
  return family;
}

ShorteningPlan shortening_plan(int m, int r, uint64_t gamma) {
  if (r < 1 || r > m) throw std::invalid_argument("shortening_plan: need 1 <= r <= m");
  const int ell = m - r;
  if (gamma >= binom(m, ell)) throw std::invalid_argument("shortening_plan: gamma out of range");

  ShorteningPlan plan;
  plan.rho = rho_decompose(gamma, r, ell);
  plan.rho.family = set_family(plan.rho, m);

  std::set<uint32_t> zeroed, deleted;
  for (const SubsetMask& member : plan.rho.family) {
    for (const SubsetMask& sub : subsets_of(member, r)) {
      deleted.insert(sub.bits);
      if (sub.weight() == r) zeroed.insert(sub.bits);
    }
  }

  uint64_t gamma_prime = 0;
  for (int t = 0; t < ell; ++t) {
    gamma_prime += count_new_coordinates(plan.rho.rho[t], plan.rho.r_t[t], t);
  }
  if (zeroed.size() != gamma || deleted.size() != gamma_prime) {
    throw std::logic_error("shortening_plan: enumeration disagrees with closed form");
  }
  plan.gamma_prime = gamma_prime;

  for (uint32_t bits : zeroed) plan.zeroed_messages.emplace_back(bits, m);
  for (uint32_t bits : deleted) plan.deleted_coordinates.emplace_back(bits, m);
  std::sort(plan.zeroed_messages.begin(), plan.zeroed_messages.end(), canonical_less);
  std::sort(plan.deleted_coordinates.begin(), plan.deleted_coordinates.end(), canonical_less);
  return plan;
}

PirCode build_sprm(int m, int r, uint64_t gamma) {
  ShorteningPlan plan = shortening_plan(m, r, gamma);
  PirCode prm = build_prm(m, r);

  std::unordered_set<uint32_t> deleted;
  for (const SubsetMask& s : plan.deleted_coordinates) deleted.insert(s.bits);

  std::vector<int> keep_rows, keep_cols;
  for (int i = 0; i < prm.k(); ++i) {
    if (!deleted.count(prm.coordinates[i].bits)) keep_rows.push_back(i);
  }
  for (int j = 0; j < prm.n(); ++j) {
    if (!deleted.count(prm.coordinates[j].bits)) keep_cols.push_back(j);
  }
  if (keep_rows.empty()) throw std::invalid_argument("build_sprm: no message symbols left");
  return restrict_code(prm, keep_rows, keep_cols, gamma);
}

PirCode arbitrary_shorten(const PirCode& code, const std::vector<int>& msg_indices) {
  std::vector<bool> drop_row(code.k(), false);
  for (int i : msg_indices) {
    if (i < 0 || i >= code.k()) throw std::out_of_range("arbitrary_shorten: message index");
    drop_row[i] = true;
  }
  std::vector<int> keep_rows;
  for (int i = 0; i < code.k(); ++i) {
    if (!drop_row[i]) keep_rows.push_back(i);
  }
  if (keep_rows.empty()) throw std::invalid_argument("arbitrary_shorten: cannot zero every message");

  // A column is deleted iff zeroing the rows forces it to zero.
  std::vector<int> keep_cols;
  for (int j = 0; j < code.n(); ++j) {
    bool nonzero = false;
    for (int i : keep_rows) {
      if (code.generator.get(i, j)) { nonzero = true; break; }
    }
    if (nonzero) keep_cols.push_back(j);
  }
  return restrict_code(code, keep_rows, keep_cols, code.spec.gamma + msg_indices.size());
}

PirCode puncture(const PirCode& code) {
  if (code.declared_tau < 2) throw std::invalid_argument("puncture: need tau >= 2");
  const int last = code.n() - 1;
  if (code.coordinates[last].weight() == code.spec.r) {
    throw std::invalid_argument("puncture: no parity coordinate to remove");
  }

  std::vector<int> keep_rows(code.k()), keep_cols(last);
  for (int i = 0; i < code.k(); ++i) keep_rows[i] = i;
  for (int j = 0; j < last; ++j) keep_cols[j] = j;

  PirCode out{code.spec,
              std::vector<SubsetMask>(code.coordinates.begin(), code.coordinates.end() - 1),
              code.generator.select(keep_rows, keep_cols),
              {},
              code.declared_tau - 1};

  // A set containing the removed position can no longer be summed, so it is
  // dropped whole. Sets are disjoint, so each symbol loses at most one; a
  // symbol that loses none (possible under repeated puncturing) is trimmed
  // to the declared count, keeping the systematic singleton in front.
  out.recovery.reserve(code.k());
  for (int i = 0; i < code.k(); ++i) {
    std::vector<std::vector<int>> sets;
    sets.reserve(code.recovery[i].size());
    for (const auto& set : code.recovery[i]) {
      if (std::find(set.begin(), set.end(), last) != set.end()) continue;
      sets.push_back(set);
    }
    if (static_cast<int>(sets.size()) < out.declared_tau) {
      throw std::logic_error("puncture: symbol lost more than one recovery set");
    }
    sets.resize(out.declared_tau);
    out.recovery.push_back(std::move(sets));
  }
  return out;
}

}  // namespace prmpir
