#include "prmpir/serialize.hpp"

#include <stdexcept>

namespace prmpir {

using nlohmann::json;

json to_json(const Gf2Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row_string(i));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(rows)}};
}

Gf2Matrix matrix_from_json(const json& j) {
  const auto& data = j.at("data");
  std::vector<std::string> rows;
  rows.reserve(data.size());
  for (const auto& r : data) rows.push_back(r.get<std::string>());
  Gf2Matrix m = Gf2Matrix::from_rows(rows);
  if (m.rows() != j.at("rows").get<int>() || m.cols() != j.at("cols").get<int>()) {
    throw std::invalid_argument("matrix_from_json: header disagrees with data");
  }
  return m;
}

json to_json(const PirCode& code) {
  json coords = json::array();
  for (const SubsetMask& s : code.coordinates) coords.push_back(s.bits);
  return json{{"m", code.spec.m},
              {"r", code.spec.r},
              {"gamma", code.spec.gamma},
              {"n", code.n()},
              {"k", code.k()},
              {"tau", code.tau()},
              {"coordinates", std::move(coords)},
              {"generator", to_json(code.generator)},
              {"recovery", code.recovery}};
}

json to_json(const ShorteningPlan& plan) {
  json zeroed = json::array(), deleted = json::array(), family = json::array();
  for (const SubsetMask& s : plan.zeroed_messages) zeroed.push_back(s.bits);
  for (const SubsetMask& s : plan.deleted_coordinates) deleted.push_back(s.bits);
  for (const SubsetMask& s : plan.rho.family) family.push_back(s.bits);
  std::vector<int> rho_display(plan.rho.rho.rbegin(), plan.rho.rho.rend());
  return json{{"gamma", plan.rho.gamma},
              {"rho", rho_display},
              {"family", std::move(family)},
              {"gamma_prime", plan.gamma_prime},
              {"zeroed_messages", std::move(zeroed)},
              {"deleted_coordinates", std::move(deleted)}};
}

json to_json(const BoundReport& report) {
  return json{{"k", report.k},
              {"tau", report.tau},
              {"lower", report.lower},
              {"achieved", report.achieved},
              {"construction",
               json{{"m", report.construction.m},
                    {"r", report.construction.r},
                    {"gamma", report.construction.gamma},
                    {"punctured", report.construction.punctured}}},
              {"optimal", report.optimal}};
}

json to_json(const Table1Row& row) {
  json family = json::array();
  for (const SubsetMask& s : row.family) family.push_back(s.bits);
  return json{{"gamma", row.gamma}, {"rho", row.rho},         {"family", std::move(family)},
              {"gamma_prime", row.gamma_prime}, {"k", row.k}, {"n", row.n}};
}

json to_json(const Table2Cell& cell) {
  return json{{"k", cell.k}, {"tau", cell.tau}, {"n1", cell.n1}, {"n2", cell.n2}};
}

std::string query_bits_string(uint64_t query, int records) {
  std::string s(records, '0');
  for (int b = 0; b < records; ++b) {
    if ((query >> b) & 1u) s[b] = '1';
  }
  return s;
}

json transcript_line(const TranscriptEntry& entry, int records) {
  return json{{"server", entry.server},
              {"query", query_bits_string(entry.query, records)},
              {"answer", entry.answer}};
}

}  // namespace prmpir
