// Copyright 2026 The Complementarity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "complementarity/dataio.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "complementarity/errors.hpp"
#include "json_io.hpp"

namespace complementarity::dataio {

using relations::RelationReport;
using relations::ScenarioDescriptor;

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string where(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

double parse_double(std::string_view field, std::size_t line_no, const char* what) {
  double v = 0.0;
  // from_chars rejects a leading '+'.
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw DataError(where(line_no) + "cannot parse " + what + " '" + std::string(field) + "'");
  }
  return v;
}

int parse_int(std::string_view field, std::size_t line_no, const char* what) {
  int v = 0;
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw DataError(where(line_no) + "cannot parse " + what + " '" + std::string(field) + "'");
  }
  return v;
}

int parse_outcome(std::string_view field, std::size_t line_no, const char* what) {
  const int v = parse_int(field, line_no, what);
  if (v != 1 && v != -1) {
    throw DataError(where(line_no) + what + " must be +1 or -1, got " + std::to_string(v));
  }
  return v;
}

struct Lines {
  Metadata metadata;
  // (line number, content) of non-comment, non-blank lines.
  std::vector<std::pair<std::size_t, std::string_view>> body;
};

Lines read_lines(std::string_view text) {
  Lines out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const std::string_view line =
        trim(text.substr(start, end == std::string_view::npos ? text.npos : end - start));
    ++line_no;
    if (!line.empty()) {
      if (line.front() == '#') {
        const std::string_view comment = trim(line.substr(1));
        const auto eq = comment.find('=');
        if (eq != std::string_view::npos) {
          out.metadata[std::string(trim(comment.substr(0, eq)))] =
              std::string(trim(comment.substr(eq + 1)));
        }
      } else {
        out.body.emplace_back(line_no, line);
      }
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::optional<double> metadata_number(const Metadata& md, const char* key) {
  const auto it = md.find(key);
  if (it == md.end()) return std::nullopt;
  return parse_double(it->second, 0, key);
}

std::string join_csv(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += fields[i];
  }
  return out;
}

std::string opt_number(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

std::string flag(bool b) { return b ? "true" : "false"; }

const std::vector<std::string>& report_columns() {
  static const std::vector<std::string> cols = {
      "state_source", "gamma_deg",   "r_h",          "r_v",         "theta_deg",
      "phi_deg",      "estimator",   "eps_a",        "eps_b",       "delta_a",
      "delta_b",      "delta_a_est", "delta_b_est",  "c",           "bound",
      "lhs_ak",       "lhs_hall",    "lhs_ozawa",    "lhs_new",     "ak_satisfied",
      "hall_satisfied", "ozawa_satisfied", "new_satisfied"};
  return cols;
}

std::vector<std::string> report_fields(const RelationReport& r) {
  const ScenarioDescriptor& s = r.scenario;
  const relations::RelationInputs& in = r.inputs;
  return {s.state_source,
          opt_number(s.gamma_deg),
          opt_number(s.r_h),
          opt_number(s.r_v),
          opt_number(s.theta_deg),
          opt_number(s.phi_deg),
          s.estimator,
          format_number(in.eps_a),
          format_number(in.eps_b),
          format_number(in.delta_a),
          format_number(in.delta_b),
          format_number(in.delta_a_est),
          format_number(in.delta_b_est),
          format_number(in.c),
          format_number(r.bound),
          format_number(r.lhs_ak),
          format_number(r.lhs_hall),
          format_number(r.lhs_ozawa),
          format_number(r.lhs_new),
          flag(r.ak_satisfied),
          flag(r.hall_satisfied),
          flag(r.ozawa_satisfied),
          flag(r.new_satisfied)};
}

}  // namespace

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace detail {

double rounded(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(format_number(v).c_str(), nullptr);
}

namespace {
Json opt_json(const std::optional<double>& v) { return v ? Json(rounded(*v)) : Json(nullptr); }

std::optional<double> opt_from(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}
}  // namespace

Json to_json(const ScenarioDescriptor& s) {
  Json j;
  j["state_source"] = s.state_source;
  j["gamma_deg"] = opt_json(s.gamma_deg);
  j["r_h"] = opt_json(s.r_h);
  j["r_v"] = opt_json(s.r_v);
  j["theta_deg"] = opt_json(s.theta_deg);
  j["phi_deg"] = opt_json(s.phi_deg);
  j["estimator"] = s.estimator;
  return j;
}

Json to_json(const RelationReport& r) {
  Json j;
  j["scenario"] = to_json(r.scenario);
  Json in;
  in["eps_a"] = rounded(r.inputs.eps_a);
  in["eps_b"] = rounded(r.inputs.eps_b);
  in["delta_a"] = rounded(r.inputs.delta_a);
  in["delta_b"] = rounded(r.inputs.delta_b);
  in["delta_a_est"] = rounded(r.inputs.delta_a_est);
  in["delta_b_est"] = rounded(r.inputs.delta_b_est);
  in["c"] = rounded(r.inputs.c);
  j["inputs"] = in;
  j["bound"] = rounded(r.bound);
  j["lhs_ak"] = rounded(r.lhs_ak);
  j["lhs_hall"] = rounded(r.lhs_hall);
  j["lhs_ozawa"] = rounded(r.lhs_ozawa);
  j["lhs_new"] = rounded(r.lhs_new);
  Json flags;
  flags["ak_satisfied"] = r.ak_satisfied;
  flags["hall_satisfied"] = r.hall_satisfied;
  flags["ozawa_satisfied"] = r.ozawa_satisfied;
  flags["new_satisfied"] = r.new_satisfied;
  j["flags"] = flags;
  return j;
}

RelationReport report_from_json(const Json& j) {
  RelationReport r;
  const Json& s = j.at("scenario");
  r.scenario.state_source = s.at("state_source").get<std::string>();
  r.scenario.gamma_deg = opt_from(s, "gamma_deg");
  r.scenario.r_h = opt_from(s, "r_h");
  r.scenario.r_v = opt_from(s, "r_v");
  r.scenario.theta_deg = opt_from(s, "theta_deg");
  r.scenario.phi_deg = opt_from(s, "phi_deg");
  r.scenario.estimator = s.at("estimator").get<std::string>();
  const Json& in = j.at("inputs");
  r.inputs.eps_a = in.at("eps_a").get<double>();
  r.inputs.eps_b = in.at("eps_b").get<double>();
  r.inputs.delta_a = in.at("delta_a").get<double>();
  r.inputs.delta_b = in.at("delta_b").get<double>();
  r.inputs.delta_a_est = in.at("delta_a_est").get<double>();
  r.inputs.delta_b_est = in.at("delta_b_est").get<double>();
  r.inputs.c = in.at("c").get<double>();
  r.bound = j.at("bound").get<double>();
  r.lhs_ak = j.at("lhs_ak").get<double>();
  r.lhs_hall = j.at("lhs_hall").get<double>();
  r.lhs_ozawa = j.at("lhs_ozawa").get<double>();
  r.lhs_new = j.at("lhs_new").get<double>();
  const Json& flags = j.at("flags");
  r.ak_satisfied = flags.at("ak_satisfied").get<bool>();
  r.hall_satisfied = flags.at("hall_satisfied").get<bool>();
  r.ozawa_satisfied = flags.at("ozawa_satisfied").get<bool>();
  r.new_satisfied = flags.at("new_satisfied").get<bool>();
  return r;
}

}  // namespace detail

std::optional<double> DistributionFile::theta_deg() const { return metadata_number(metadata, "theta"); }
std::optional<double> DistributionFile::phi_deg() const { return metadata_number(metadata, "phi"); }
std::optional<double> DistributionFile::r_h() const { return metadata_number(metadata, "r_H"); }
std::optional<double> DistributionFile::r_v() const { return metadata_number(metadata, "r_V"); }

double DistributionFile::total() const {
  return std::accumulate(records.begin(), records.end(), 0.0,
                         [](double acc, const DistributionRecord& r) { return acc + r.p; });
}

DistributionFile parse_distribution_file(std::string_view text) {
  const Lines lines = read_lines(text);
  if (lines.body.empty()) throw DataError("distribution file has no header");
  const auto [header_line, header] = lines.body.front();
  const auto cols = split(header, ',');
  const bool with_sigma = cols.size() == 5 && cols[4] == "sigma";
  if (!(cols.size() >= 4 && cols[0] == "m" && cols[1] == "y" && cols[2] == "w" &&
        cols[3] == "p" && (cols.size() == 4 || with_sigma))) {
    throw DataError(where(header_line) + "expected header 'm,y,w,p,sigma', got '" +
                    std::string(header) + "'");
  }

  DistributionFile file;
  file.metadata = lines.metadata;
  std::array<bool, 8> seen{};
  for (std::size_t i = 1; i < lines.body.size(); ++i) {
    const auto [line_no, line] = lines.body[i];
    const auto fields = split(line, ',');
    if (fields.size() != cols.size()) {
      throw DataError(where(line_no) + "expected " + std::to_string(cols.size()) +
                      " fields, got " + std::to_string(fields.size()));
    }
    DistributionRecord rec;
    rec.m = parse_outcome(fields[0], line_no, "m");
    rec.y = parse_outcome(fields[1], line_no, "y");
    rec.w = parse_outcome(fields[2], line_no, "w");
    rec.p = parse_double(fields[3], line_no, "p");
    if (with_sigma && !fields[4].empty()) rec.sigma = parse_double(fields[4], line_no, "sigma");
    const std::size_t idx = scenario::JointDistribution::index(rec.m, rec.y, rec.w);
    if (seen[idx]) {
      std::ostringstream os;
      os << where(line_no) << "duplicate outcome row (m,y,w) = (" << rec.m << "," << rec.y
         << "," << rec.w << ")";
      throw DataError(os.str());
    }
    seen[idx] = true;
    file.records[idx] = rec;
  }
  for (int m : scenario::kBinaryOutcomes) {
    for (int y : scenario::kBinaryOutcomes) {
      for (int w : scenario::kBinaryOutcomes) {
        if (!seen[scenario::JointDistribution::index(m, y, w)]) {
          std::ostringstream os;
          os << "missing outcome row (m,y,w) = (" << m << "," << y << "," << w << ")";
          throw DataError(os.str());
        }
      }
    }
  }
  return file;
}

scenario::JointDistribution to_joint_distribution(const DistributionFile& file,
                                                  const ToleranceProfile& tol) {
  std::array<double, 8> p{};
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = file.records[i].p;
  std::optional<qcore::BlochObservable> w;
  const auto theta = file.theta_deg();
  const auto phi = file.phi_deg();
  if (theta && phi) w = qcore::BlochObservable::from_degrees(*theta, *phi);
  return scenario::JointDistribution(p, scenario::Provenance::measured, w, tol);
}

scenario::JointDistribution parse_distribution(std::string_view text,
                                               const ToleranceProfile& tol) {
  return to_joint_distribution(parse_distribution_file(text), tol);
}

DistributionFile make_distribution_file(const scenario::JointDistribution& dist,
                                        Metadata metadata) {
  DistributionFile file;
  file.metadata = std::move(metadata);
  for (int m : scenario::kBinaryOutcomes) {
    for (int y : scenario::kBinaryOutcomes) {
      for (int w : scenario::kBinaryOutcomes) {
        file.records[scenario::JointDistribution::index(m, y, w)] =
            DistributionRecord{m, y, w, dist(m, y, w), std::nullopt};
      }
    }
  }
  return file;
}

std::string write_distribution(const DistributionFile& file) {
  std::string out;
  for (const auto& [key, value] : file.metadata) out += "# " + key + "=" + value + "\n";
  out += "m,y,w,p,sigma\n";
  for (const DistributionRecord& r : file.records) {
    out += join_csv({std::to_string(r.m), std::to_string(r.y), std::to_string(r.w),
                     format_number(r.p), opt_number(r.sigma)});
    out += '\n';
  }
  return out;
}

DensityMatrixFile parse_density_matrix_file(std::string_view text) {
  const Lines lines = read_lines(text);
  DensityMatrixFile file;
  file.metadata = lines.metadata;
  std::array<bool, 16> seen{};
  std::size_t count = 0;
  for (std::size_t i = 0; i < lines.body.size(); ++i) {
    const auto [line_no, line] = lines.body[i];
    const auto fields = split(line, ',');
    if (i == 0 && fields.size() == 4 && fields[0] == "row") continue;
    if (fields.size() != 4) {
      throw DataError(where(line_no) + "expected 'row,col,re,im', got '" + std::string(line) + "'");
    }
    const int row = parse_int(fields[0], line_no, "row");
    const int col = parse_int(fields[1], line_no, "col");
    if (row < 0 || row > 3 || col < 0 || col > 3) {
      throw DataError(where(line_no) + "matrix index out of range 0..3");
    }
    const std::size_t idx = static_cast<std::size_t>(row * 4 + col);
    if (seen[idx]) {
      throw DataError(where(line_no) + "duplicate entry (" + std::to_string(row) + "," +
                      std::to_string(col) + ")");
    }
    seen[idx] = true;
    ++count;
    file.entries(row, col) = qcore::Complex(parse_double(fields[2], line_no, "re"),
                                            parse_double(fields[3], line_no, "im"));
  }
  if (count != 16) {
    throw DataError("density matrix file has " + std::to_string(count) +
                    " entries, expected 16");
  }
  return file;
}

qcore::DensityMatrix parse_density_matrix(std::string_view text, const ToleranceProfile& tol) {
  const DensityMatrixFile file = parse_density_matrix_file(text);
  try {
    return qcore::DensityMatrix(file.entries, tol);
  } catch (const ValidationError& e) {
    throw DataError(std::string("invalid density matrix: ") + e.what());
  }
}

std::string write_density_matrix(const qcore::DensityMatrix& rho, const Metadata& metadata) {
  if (rho.dim() != 4) throw DimensionError("density matrix files hold two-qubit states");
  std::string out;
  for (const auto& [key, value] : metadata) out += "# " + key + "=" + value + "\n";
  out += "row,col,re,im\n";
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const qcore::Complex v = rho.matrix()(r, c);
      out += join_csv({std::to_string(r), std::to_string(c), format_number(v.real()),
                       format_number(v.imag())});
      out += '\n';
    }
  }
  return out;
}

Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw DomainError("unknown output format '" + std::string(name) + "' (expected json or csv)");
}

std::string emit_report(const RelationReport& report, Format format) {
  if (format == Format::json) return detail::to_json(report).dump(2) + "\n";
  return join_csv(report_columns()) + "\n" + join_csv(report_fields(report)) + "\n";
}

std::string emit_reports(const std::vector<RelationReport>& reports, Format format) {
  if (format == Format::json) {
    detail::Json arr = detail::Json::array();
    for (const RelationReport& r : reports) arr.push_back(detail::to_json(r));
    return arr.dump(2) + "\n";
  }
  std::string out = join_csv(report_columns()) + "\n";
  for (const RelationReport& r : reports) out += join_csv(report_fields(r)) + "\n";
  return out;
}

RelationReport parse_report_json(std::string_view text) {
  try {
    return detail::report_from_json(detail::Json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed report JSON: ") + e.what());
  }
}

std::string emit_sweep(const std::vector<SweepRow>& rows, Format format) {
  if (format == Format::json) {
    detail::Json arr = detail::Json::array();
    for (const SweepRow& row : rows) {
      detail::Json j;
      j["theta_deg"] = detail::rounded(row.theta_deg);
      j["phi_deg"] = detail::rounded(row.phi_deg);
      j["report"] = detail::to_json(row.report);
      j["eps_x_simple"] = detail::rounded(row.eps_x_simple);
      j["eps_x_opt"] = detail::rounded(row.eps_x_opt);
      j["delta_x_opt"] = detail::rounded(row.delta_x_opt);
      j["delta_x"] = detail::rounded(row.delta_x);
      j["dispersion_root"] = detail::rounded(row.dispersion_root);
      arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
  }
  std::vector<std::string> header = report_columns();
  for (const char* extra :
       {"eps_x_simple", "eps_x_opt", "delta_x_opt", "delta_x", "dispersion_root"}) {
    header.emplace_back(extra);
  }
  std::string out = join_csv(header) + "\n";
  for (const SweepRow& row : rows) {
    std::vector<std::string> fields = report_fields(row.report);
    for (double v : {row.eps_x_simple, row.eps_x_opt, row.delta_x_opt, row.delta_x,
                     row.dispersion_root}) {
      fields.push_back(format_number(v));
    }
    out += join_csv(fields) + "\n";
  }
  return out;
}

}  // namespace complementarity::dataio
