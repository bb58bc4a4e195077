// Python bindings for the code-construction, shortening, bound and
// simulation operations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>
#include <sstream>

#include "prmpir/bounds.hpp"
#include "prmpir/pirsim.hpp"
#include "prmpir/prm.hpp"
#include "prmpir/serialize.hpp"
#include "prmpir/shorten.hpp"
#include "prmpir/subsets.hpp"
#include "prmpir/verify.hpp"

namespace py = pybind11;
using namespace prmpir;

namespace {

std::vector<uint8_t> parse_bits(const std::string& bits) {
  std::vector<uint8_t> out(bits.size());
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') throw std::invalid_argument("bits must be 0/1");
    out[i] = bits[i] == '1';
  }
  return out;
}

std::string bits_string(const std::vector<uint8_t>& bits) {
  std::string out(bits.size(), '0');
  for (size_t i = 0; i < bits.size(); ++i) out[i] = bits[i] ? '1' : '0';
  return out;
}

std::vector<std::string> generator_rows(const PirCode& code) {
  std::vector<std::string> rows;
  rows.reserve(code.k());
  for (int i = 0; i < code.k(); ++i) rows.push_back(code.generator.row_string(i));
  return rows;
}

}  // namespace

PYBIND11_MODULE(_prmpir, m) {
  m.doc() = "Projective Reed-Muller PIR codes: construction, shortening, bounds, simulation";

  py::class_<PirCode>(m, "PirCode")
      .def_property_readonly("m", [](const PirCode& c) { return c.spec.m; })
      .def_property_readonly("r", [](const PirCode& c) { return c.spec.r; })
      .def_property_readonly("gamma", [](const PirCode& c) { return c.spec.gamma; })
      .def_property_readonly("n", &PirCode::n)
      .def_property_readonly("k", &PirCode::k)
      .def_property_readonly("tau", &PirCode::tau)
      .def_property_readonly("coordinates",
                             [](const PirCode& c) {
                               std::vector<uint32_t> out;
                               for (const SubsetMask& s : c.coordinates) out.push_back(s.bits);
                               return out;
                             })
      .def_property_readonly("coordinate_labels",
                             [](const PirCode& c) {
                               std::vector<std::string> out;
                               for (const SubsetMask& s : c.coordinates) out.push_back(s.to_string());
                               return out;
                             })
      .def_property_readonly("generator", &generator_rows)
      .def_property_readonly("recovery",
                             [](const PirCode& c) { return c.recovery; })
      .def("encode",
           [](const PirCode& c, const std::string& message) {
             return bits_string(encode(c, parse_bits(message)));
           },
           py::arg("message"))
      .def("retrieve",
           [](const PirCode& c, const std::string& codeword, int msg, int set_index) {
             return retrieve(c, parse_bits(codeword), msg, set_index);
           },
           py::arg("codeword"), py::arg("msg"), py::arg("set_index"))
      .def("to_json", [](const PirCode& c) { return to_json(c).dump(); })
      .def("check_invariants",
           [](const PirCode& c, bool full_coverage) {
             return check_pir_invariants(c, full_coverage);
           },
           py::arg("full_coverage") = false)
      .def("__repr__", [](const PirCode& c) {
        std::ostringstream os;
        os << "PirCode(n=" << c.n() << ", k=" << c.k() << ", tau=" << c.tau() << ")";
        return os.str();
      });

  m.def("prm_params",
        [](int m_, int r) {
          PrmParams p = prm_params(m_, r);
          return py::make_tuple(p.n, p.k, p.tau);
        },
        py::arg("m"), py::arg("r"));
  m.def("build_prm", &build_prm, py::arg("m"), py::arg("r"));
  m.def("build_sprm", &build_sprm, py::arg("m"), py::arg("r"), py::arg("gamma"));
  m.def("arbitrary_shorten", &arbitrary_shorten, py::arg("code"), py::arg("messages"));
  m.def("puncture", &puncture, py::arg("code"));

  m.def("shorten_row",
        [](int m_, int r, uint64_t gamma) {
          ShorteningPlan plan = shortening_plan(m_, r, gamma);
          py::dict row;
          row["gamma"] = gamma;
          row["rho"] = std::vector<int>(plan.rho.rho.rbegin(), plan.rho.rho.rend());
          std::vector<std::string> family;
          for (const SubsetMask& s : plan.rho.family) family.push_back(s.to_string());
          row["family"] = family;
          row["gamma_prime"] = plan.gamma_prime;
          row["k"] = binom(m_, r) - gamma;
          row["n"] = prm_params(m_, r).n - plan.gamma_prime;
          return row;
        },
        py::arg("m"), py::arg("r"), py::arg("gamma"));

  m.def("lb_systematic", &lb_systematic, py::arg("k"), py::arg("tau"));
  m.def("best_code",
        [](uint64_t k, int tau) {
          auto [report, code] = best_code(k, tau);
          py::dict d;
          d["k"] = report.k;
          d["tau"] = report.tau;
          d["lower"] = report.lower;
          d["achieved"] = report.achieved;
          d["optimal"] = report.optimal;
          d["m"] = report.construction.m;
          d["r"] = report.construction.r;
          d["gamma"] = report.construction.gamma;
          d["punctured"] = report.construction.punctured;
          return py::make_tuple(d, code);
        },
        py::arg("k"), py::arg("tau"));
  m.def("ghw_upper", &ghw_upper, py::arg("m"), py::arg("r"), py::arg("gamma"));

  m.def("min_distance",
        [](const std::vector<std::string>& rows) { return min_distance(Gf2Matrix::from_rows(rows)); },
        py::arg("generator_rows"));
  m.def("gf2_rank",
        [](const std::vector<std::string>& rows) { return rank(Gf2Matrix::from_rows(rows)); },
        py::arg("rows"));
  m.def("ghw",
        [](const std::vector<std::string>& rows, int i) { return ghw(Gf2Matrix::from_rows(rows), i); },
        py::arg("generator_rows"), py::arg("i"));

  m.def("table1", []() {
    std::vector<std::string> out;
    for (const Table1Row& row : table1().rows) out.push_back(to_json(row).dump());
    return out;
  });
  m.def("table2", []() {
    std::vector<std::string> out;
    for (const Table2Cell& cell : table2().cells) out.push_back(to_json(cell).dump());
    return out;
  });

  m.def("simulate",
        [](const PirCode& code, int records, int64_t trials, uint64_t seed) {
          std::mt19937_64 rng(seed);
          std::vector<uint64_t> database(code.k());
          const uint64_t mask = records == 64 ? ~uint64_t{0} : (uint64_t{1} << records) - 1;
          for (auto& part : database) part = rng() & mask;
          ServerArray array = setup(code, database, records);
          int64_t correct = 0;
          for (int64_t t = 0; t < trials; ++t) {
            int msg = static_cast<int>(rng() % code.k());
            int rec = static_cast<int>(rng() % records);
            QueryPlan plan = make_query_plan(code, msg, rec, records, rng);
            if (execute(array, plan) == static_cast<int>((database[msg] >> rec) & 1)) ++correct;
          }
          py::dict d;
          d["trials"] = trials;
          d["correct"] = correct;
          return d;
        },
        py::arg("code"), py::arg("records"), py::arg("trials"), py::arg("seed") = 0);

  m.def("privacy_audit",
        [](const PirCode& code, int records, int64_t trials_per_target, double alpha,
           uint64_t seed, bool plaintext_client) {
          std::mt19937_64 rng(seed);
          std::vector<uint64_t> database(code.k(), 0);
          ServerArray array = setup(code, database, records);
          AuditReport report =
              privacy_audit(array, trials_per_target, alpha, rng,
                            plaintext_client ? QueryClient::kPlaintext : QueryClient::kHonest);
          py::dict d;
          d["pass"] = report.pass;
          d["failed_servers"] = report.failed_servers;
          d["df"] = report.df;
          double min_p = 1.0;
          for (const AuditStat& s : report.stats) min_p = std::min(min_p, s.pvalue);
          d["min_pvalue"] = min_p;
          return d;
        },
        py::arg("code"), py::arg("records"), py::arg("trials_per_target"),
        py::arg("alpha") = 0.001, py::arg("seed") = 0, py::arg("plaintext_client") = false);
}
