#pragma once

// Command implementations behind the spincent executable.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "spincent/centralizer.hpp"
#include "spincent/report.hpp"
#include "spincent/suites.hpp"

namespace spincent {

/// Bad arguments or a violated size guard (exit code 2).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class OutputFormat { json, csv, pretty };

inline OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "pretty") return OutputFormat::pretty;
  throw UsageError("unknown format '" + s + "' (json|csv|pretty)");
}

inline Backend parse_backend(const std::string& s) {
  if (s == "exact") return Backend::exact;
  if (s == "float") return Backend::floating;
  throw UsageError("unknown backend '" + s + "' (exact|float)");
}

inline constexpr std::size_t kDefaultMaxN = 128;

struct RunConfig {
  std::string command;
  std::string suite;                 // verify
  std::string target;                // export: rep | centralizer
  unsigned r = 0;
  unsigned r_max = 0;                // dims, decomp; 0 selects the default
  std::size_t m = 1;
  std::optional<std::size_t> m2;
  std::string label;                 // export rep for r = 0 (mod 4): "+" or "-"
  Backend backend = Backend::exact;
  std::optional<std::size_t> max_n;
  OutputFormat format = OutputFormat::pretty;
  std::string out;
  std::uint64_t seed = 20240611;
};

/// --max-n, else SPINCENT_MAX_N, else 128.
inline std::size_t resolve_max_n(const RunConfig& cfg) {
  if (cfg.max_n) return *cfg.max_n;
  if (const char* env = std::getenv("SPINCENT_MAX_N")) {
    std::string s(env);
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &pos);
    } catch (const std::exception&) {
      throw UsageError("SPINCENT_MAX_N is not a number: '" + s + "'");
    }
    if (pos != s.size() || v == 0) throw UsageError("SPINCENT_MAX_N is not a positive integer: '" + s + "'");
    return static_cast<std::size_t>(v);
  }
  return kDefaultMaxN;
}

inline Shape shape_of(const RunConfig& cfg) {
  if (cfg.r < 1) throw UsageError("--r must be positive");
  if (cfg.r % 4 == 0) {
    if (!cfg.m2) throw UsageError("r = 0 (mod 4) needs two multiplicities: --m and --m2");
    if (cfg.m + *cfg.m2 == 0) throw UsageError("--m + --m2 must be positive");
    return Shape::pair(cfg.m, *cfg.m2);
  }
  if (cfg.m2) throw UsageError("--m2 applies only to r = 0 (mod 4)");
  if (cfg.m < 1) throw UsageError("--m must be positive");
  return Shape::single(cfg.m);
}

/// Ambient dimension of the embedding, from the dimension formula alone.
inline std::size_t embedding_dim(unsigned r, const Shape& s) {
  if (r > 40) throw UsageError("r too large");
  return d_dim(r) * (s.kind == ShapeKind::single ? s.m1 : s.m1 + s.m2);
}

inline void check_guard(unsigned r, const Shape& s, const RunConfig& cfg) {
  const std::size_t n = embedding_dim(r, s);
  const std::size_t limit = resolve_max_n(cfg);
  const std::size_t backend_limit = cfg.backend == Backend::exact ? kMaxExactN : kMaxFloatN;
  if (n > limit)
    throw UsageError("N = " + std::to_string(n) + " exceeds the size guard " + std::to_string(limit) +
                     " (raise with --max-n or SPINCENT_MAX_N)");
  if (n > backend_limit)
    throw UsageError("N = " + std::to_string(n) + " exceeds the " + to_string(cfg.backend) + " backend limit " +
                     std::to_string(backend_limit));
}

inline EmbeddedSpin build_embedding(unsigned r, const Shape& s) {
  return s.kind == ShapeKind::single ? build_embedding_t1(r, s.m1) : build_embedding_t2(r, s.m1, s.m2);
}

namespace detail {

class Timer {
 public:
  explicit Timer(Report& rep) : rep_(rep), t0_(std::chrono::steady_clock::now()) {}
  ~Timer() { rep_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }
  Timer(const Timer&) = delete;
  Timer& operator=(const Timer&) = delete;

 private:
  Report& rep_;
  std::chrono::steady_clock::time_point t0_;
};

inline json args_of(const RunConfig& cfg) {
  json a = json::object();
  if (cfg.r) a["r"] = cfg.r;
  if (cfg.command == "centralize") {
    a["m"] = cfg.m;
    if (cfg.m2) a["m2"] = *cfg.m2;
    a["backend"] = to_string(cfg.backend);
  }
  if (!cfg.suite.empty()) a["suite"] = cfg.suite;
  if (!cfg.target.empty()) a["target"] = cfg.target;
  if (cfg.r_max) a["r_max"] = cfg.r_max;
  a["seed"] = cfg.seed;
  return a;
}

/// Collapses per-r rows of the m = 1 centralizer suite into the five residue rows 0, +-1, +-2, +-3, 4.
inline std::vector<ReportRow> residue_rows(const std::vector<CaseRow>& rows) {
  const std::vector<std::string> order = {"0", "+-1", "+-2", "+-3", "4"};
  std::map<std::string, std::vector<const CaseRow*>> groups;
  for (const auto& c : rows) {
    const std::string tag = c.source.substr(c.source.rfind(' ') + 1);
    groups[tag].push_back(&c);
  }
  std::vector<ReportRow> out;
  for (const auto& tag : order) {
    auto it = groups.find(tag);
    if (it == groups.end()) continue;
    const auto& g = it->second;
    ReportRow r = to_report_row(*g.front());
    std::string keys;
    for (const CaseRow* c : g) {
      keys += (keys.empty() ? "" : ",") + c->key.substr(2, c->key.find(',') == std::string::npos ? std::string::npos
                                                                                            : c->key.find(',') - 2);
      r.pass = r.pass && c->pass;
      if (c->computed_dim != g.front()->computed_dim) r.computed_dim.reset();
      r.seconds += c == g.front() ? 0.0 : c->seconds;
    }
    r.key = "residue " + tag + " (r=" + keys + ")";
    out.push_back(r);
  }
  return out;
}

}  // namespace detail

inline Report cmd_dims(const RunConfig& cfg) {
  Report rep;
  rep.command = "dims";
  rep.args = detail::args_of(cfg);
  detail::Timer t(rep);
  const unsigned r_max = cfg.r_max ? cfg.r_max : 16;
  if (r_max > 40) throw UsageError("dims: --r-max must be at most 40");
  append_rows(rep, dims_suite(r_max));
  return rep;
}

inline Report cmd_centralize(const RunConfig& cfg) {
  const Shape shape = shape_of(cfg);
  check_guard(cfg.r, shape, cfg);
  Report rep;
  rep.command = "centralize";
  rep.args = detail::args_of(cfg);
  detail::Timer t(rep);
  const CatalogEntry expected = expected_centralizer(cfg.r, shape);
  const std::string key = "r=" + std::to_string(cfg.r) + "," + shape.to_string();
  const std::string source =
      std::string(shape.kind == ShapeKind::single ? "single-block" : "two-block") + " table, residue " +
      detail::residue_tag(cfg.r);
  EmbeddedSpin emb = build_embedding(cfg.r, shape);
  if (cfg.backend == Backend::floating) {
    auto t0 = std::chrono::steady_clock::now();
    CentralizerBasis cb = so_centralizer(emb, Backend::floating);
    ReportRow row;
    row.key = key;
    row.source = source;
    row.expected_type = expected.name();
    row.expected = expected.name();
    row.expected_dim = expected.dim();
    row.computed_dim = cb.size();
    row.computed = "dimension only";
    row.pass = cb.size() == expected.dim();
    std::ostringstream note;
    note << "float backend, rank tolerance " << cb.tolerance << "; exploratory";
    row.note = note.str();
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.rows.push_back(row);
    return rep;
  }
  CaseRow row = detail::run_case(emb, expected, key, source, shape.kind == ShapeKind::single && cfg.r > 1);
  rep.rows.push_back(to_report_row(row));
  return rep;
}

inline const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> s = {"prop1", "thm1",      "thm2",    "lemma", "table2", "decomp",
                                             "gamma", "structure", "trivial", "phi",   "dims"};
  return s;
}

inline Report cmd_verify(const RunConfig& cfg) {
  if (cfg.backend != Backend::exact) throw UsageError("verify runs on the exact backend only");
  const std::string& s = cfg.suite;
  if (std::find(verify_suites().begin(), verify_suites().end(), s) == verify_suites().end())
    throw UsageError("unknown suite '" + s + "'");
  const std::size_t limit = resolve_max_n(cfg);
  Report rep;
  rep.command = "verify " + s;
  rep.args = detail::args_of(cfg);
  detail::Timer t(rep);
  if (s == "prop1") {
    for (const auto& row : detail::residue_rows(basic_centralizer_suite())) rep.rows.push_back(row);
  } else if (s == "thm1") {
    auto cases = single_block_default_cases();
    for (auto [r, m] : cases)
      if (embedding_dim(r, Shape::single(m)) > limit)
        throw UsageError("thm1: case r=" + std::to_string(r) + ",m=" + std::to_string(m) + " exceeds the size guard " +
                         std::to_string(limit));
    append_rows(rep, single_block_suite(cases));
  } else if (s == "thm2") {
    auto cases = two_block_default_cases();
    for (const auto& c : cases)
      if (embedding_dim(c.r, Shape::pair(c.m1, c.m2)) > limit)
        throw UsageError("thm2: case exceeds the size guard " + std::to_string(limit));
    append_rows(rep, two_block_suite(cases));
  } else if (s == "lemma") {
    append_rows(rep, lemma_suite(7));
  } else if (s == "table2") {
    append_rows(rep, table2_suite(2, 9));
  } else if (s == "decomp") {
    const unsigned r_max = cfg.r_max ? cfg.r_max : 7;
    if (r_max > 10) throw UsageError("decomp: --r-max must be at most 10");
    append_rows(rep, decomp_suite(r_max));
  } else if (s == "gamma") {
    append_rows(rep, gamma_suite(11));
  } else if (s == "structure") {
    append_rows(rep, structure_suite(12));
  } else if (s == "trivial") {
    append_rows(rep, trivial_suite(2, 11));
  } else if (s == "phi") {
    PhiSuiteOptions opt;
    opt.seed = cfg.seed;
    append_rows(rep, phi_suite(opt));
  } else {
    append_rows(rep, dims_suite(cfg.r_max ? cfg.r_max : 16));
  }
  return rep;
}

/// Writes the JSON export to cfg.out (or returns it when cfg.out is empty).
inline json cmd_export(const RunConfig& cfg) {
  json j;
  if (cfg.target == "rep") {
    if (cfg.r < 1) throw UsageError("--r must be positive");
    FormLabel label = FormLabel::none;
    if (cfg.r % 4 == 0) {
      if (cfg.label == "+") label = FormLabel::plus;
      else if (cfg.label == "-") label = FormLabel::minus;
      else throw UsageError("r = 0 (mod 4) needs --label + or --label -");
    } else if (!cfg.label.empty()) {
      throw UsageError("--label applies only to r = 0 (mod 4)");
    }
    if (d_dim(cfg.r) > resolve_max_n(cfg)) throw UsageError("representation dimension exceeds the size guard");
    if (real_form_ambient(cfg.r) > kMaxCliffordDim) throw UsageError("r too large for the real-form construction");
    j = export_real_rep(realize_rep(cfg.r, label));
  } else if (cfg.target == "centralizer") {
    const Shape shape = shape_of(cfg);
    RunConfig exact = cfg;
    exact.backend = Backend::exact;
    check_guard(cfg.r, shape, exact);
    j = export_centralizer(so_centralizer(build_embedding(cfg.r, shape)));
  } else {
    throw UsageError("export target must be 'rep' or 'centralizer'");
  }
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out);
    if (!f) throw UsageError("cannot open '" + cfg.out + "' for writing");
    f << j.dump(2) << '\n';
  }
  return j;
}

inline std::string render(const Report& rep, OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return to_json(rep).dump(2) + "\n";
    case OutputFormat::csv: return to_csv(rep);
    default: return to_pretty(rep);
  }
}

}  // namespace spincent
