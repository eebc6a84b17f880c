#pragma once

// Machine-readable reports (JSON, CSV, pretty text) and exact matrix serialization.

#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "spincent/centralizer.hpp"
#include "spincent/rational.hpp"
#include "spincent/real_form.hpp"
#include "spincent/suites.hpp"

namespace spincent {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// ---------------------------------------------------------------------------
// Matrices as grids of "p/q" or "p/q+r/s*i" strings

inline json to_json(const Matrix<Rational>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json to_json(const SparseMatrix<Rational>& m) { return to_json(m.to_dense()); }

inline json to_json(const CMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace detail {

inline std::pair<std::size_t, std::size_t> grid_shape(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix json: expected an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j.at(0).size();
  for (const auto& row : j)
    if (!row.is_array() || row.size() != cols) throw std::invalid_argument("matrix json: ragged rows");
  return {rows, cols};
}

}  // namespace detail

inline SparseMatrix<Rational> rational_matrix_from_json(const json& j) {
  auto [rows, cols] = detail::grid_shape(j);
  SparseMatrix<Rational> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t c = 0; c < cols; ++c) m.push(i, c, parse_rational(j[i][c].get<std::string>()));
  return m;
}

inline CMatrix gaussian_matrix_from_json(const json& j) {
  auto [rows, cols] = detail::grid_shape(j);
  CMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = parse_gaussian(j[i][c].get<std::string>());
  return m;
}

inline json export_real_rep(const RealRep& rep) {
  json gens = json::array();
  for (const auto& g : rep.spin_mats) gens.push_back(to_json(g));
  json pairs = json::array();
  for (auto [i, j] : rep.pairs) pairs.push_back({i, j});
  return {{"schema_version", kSchemaVersion},
          {"kind", "representation"},
          {"r", rep.r},
          {"label", to_string(rep.label)},
          {"dim", rep.dim},
          {"generators", pairs},
          {"matrices", gens}};
}

inline json export_centralizer(const CentralizerBasis& cb) {
  json mats = json::array();
  for (const auto& b : cb.basis) mats.push_back(to_json(b));
  json out = {{"schema_version", kSchemaVersion},
              {"kind", "centralizer"},
              {"N", cb.N},
              {"backend", to_string(cb.backend)},
              {"dim", cb.size()},
              {"matrices", mats}};
  if (cb.source) {
    out["r"] = cb.source->r;
    out["shape"] = cb.source->shape.to_string();
  }
  return out;
}

inline std::vector<SparseMatrix<Rational>> matrices_from_export(const json& j) {
  std::vector<SparseMatrix<Rational>> out;
  for (const auto& m : j.at("matrices")) out.push_back(rational_matrix_from_json(m));
  return out;
}

// ---------------------------------------------------------------------------
// Reports

struct ReportRow {
  std::string key;
  std::string source;
  std::string expected_type;
  std::optional<std::size_t> expected_dim;
  std::optional<std::size_t> computed_dim;
  std::optional<std::size_t> center;
  std::optional<std::size_t> derived;
  std::string killing;
  std::string expected;
  std::string computed;
  bool pass = false;
  double seconds = 0.0;
  std::string note;
};

struct Report {
  int schema_version = kSchemaVersion;
  std::string command;
  json args = json::object();
  std::vector<ReportRow> rows;
  double seconds = 0.0;

  bool pass() const {
    for (const auto& r : rows)
      if (!r.pass) return false;
    return true;
  }
};

inline ReportRow to_report_row(const CaseRow& c) {
  ReportRow r;
  r.key = c.key;
  r.source = c.source;
  r.expected_type = c.expected_type;
  r.expected_dim = c.expected_dim;
  r.computed_dim = c.computed_dim;
  r.center = c.center;
  r.derived = c.derived;
  r.killing = signature_string(c.killing);
  r.expected = c.expected_type;
  r.computed = c.identified;
  r.pass = c.pass;
  r.seconds = c.seconds;
  r.note = c.note;
  return r;
}

inline ReportRow to_report_row(const CheckRow& c) {
  ReportRow r;
  r.key = c.key;
  r.source = c.source;
  r.expected = c.expected;
  r.computed = c.computed;
  r.pass = c.pass;
  r.seconds = c.seconds;
  r.note = c.note;
  return r;
}

template <class Row>
void append_rows(Report& rep, const std::vector<Row>& rows) {
  for (const auto& r : rows) rep.rows.push_back(to_report_row(r));
}

inline json to_json(const ReportRow& r) {
  json j = {{"case", r.key},          {"source", r.source}, {"expected", r.expected}, {"computed", r.computed},
            {"pass", r.pass},         {"seconds", r.seconds}};
  if (!r.expected_type.empty()) j["expected_type"] = r.expected_type;
  if (r.expected_dim) j["expected_dim"] = *r.expected_dim;
  if (r.computed_dim) j["computed_dim"] = *r.computed_dim;
  if (r.center) j["center"] = *r.center;
  if (r.derived) j["derived"] = *r.derived;
  if (!r.killing.empty()) j["killing"] = r.killing;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline ReportRow report_row_from_json(const json& j) {
  ReportRow r;
  r.key = j.at("case").get<std::string>();
  r.source = j.value("source", "");
  r.expected = j.value("expected", "");
  r.computed = j.value("computed", "");
  r.pass = j.at("pass").get<bool>();
  r.seconds = j.value("seconds", 0.0);
  r.expected_type = j.value("expected_type", "");
  if (j.contains("expected_dim")) r.expected_dim = j["expected_dim"].get<std::size_t>();
  if (j.contains("computed_dim")) r.computed_dim = j["computed_dim"].get<std::size_t>();
  if (j.contains("center")) r.center = j["center"].get<std::size_t>();
  if (j.contains("derived")) r.derived = j["derived"].get<std::size_t>();
  r.killing = j.value("killing", "");
  r.note = j.value("note", "");
  return r;
}

inline json to_json(const Report& rep) {
  json rows = json::array();
  for (const auto& r : rep.rows) rows.push_back(to_json(r));
  return {{"schema_version", rep.schema_version}, {"command", rep.command}, {"args", rep.args},
          {"rows", rows},                         {"pass", rep.pass()},     {"seconds", rep.seconds}};
}

inline Report report_from_json(const json& j) {
  Report rep;
  rep.schema_version = j.at("schema_version").get<int>();
  if (rep.schema_version != kSchemaVersion)
    throw std::invalid_argument("report: unsupported schema_version " + std::to_string(rep.schema_version));
  rep.command = j.at("command").get<std::string>();
  rep.args = j.value("args", json::object());
  for (const auto& r : j.at("rows")) rep.rows.push_back(report_row_from_json(r));
  rep.seconds = j.value("seconds", 0.0);
  return rep;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string opt(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : ""; }

}  // namespace detail

inline std::string to_csv(const Report& rep) {
  std::ostringstream os;
  os << "case,expected_type,expected_dim,computed_dim,center,derived,killing,pass\n";
  for (const auto& r : rep.rows) {
    const std::string type = r.expected_type.empty() ? r.expected : r.expected_type;
    os << detail::csv_field(r.key) << ',' << detail::csv_field(type) << ',' << detail::opt(r.expected_dim) << ','
       << detail::opt(r.computed_dim) << ',' << detail::opt(r.center) << ',' << detail::opt(r.derived) << ','
       << detail::csv_field(r.killing) << ',' << (r.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

inline std::string to_pretty(const Report& rep) {
  std::ostringstream os;
  os << rep.command << "  (schema " << rep.schema_version << ")\n";
  for (const auto& r : rep.rows) {
    os << (r.pass ? "  PASS  " : "  FAIL  ") << std::left << std::setw(22) << r.key;
    if (r.expected_dim) {
      os << " expected " << r.expected_type << " dim " << *r.expected_dim << ", computed " << r.computed << " dim "
         << detail::opt(r.computed_dim);
      if (r.center) os << ", center " << *r.center;
      if (r.derived) os << ", derived " << *r.derived;
      if (!r.killing.empty()) os << ", killing " << r.killing;
    } else {
      os << " expected " << r.expected << " | computed " << r.computed;
    }
    os << "  [" << r.source << "]";
    if (!r.note.empty()) os << "  " << r.note;
    os << '\n';
  }
  os << (rep.pass() ? "all rows pass" : "some rows fail") << " in " << std::fixed << std::setprecision(2) << rep.seconds
     << " s\n";
  return os.str();
}

}  // namespace spincent
