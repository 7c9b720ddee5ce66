#include "tricop/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <string_view>

#include "tricop/error.hpp"

namespace tricop {

using nlohmann::json;

void to_json(json& j, const CorrelationMatrix3& m) { j = json{{"p", m.p}, {"q", m.q}, {"r", m.r}}; }

void from_json(const json& j, CorrelationMatrix3& m) {
  m.p = j.at("p").get<double>();
  m.q = j.at("q").get<double>();
  m.r = j.at("r").get<double>();
}

void to_json(json& j, const ExtremePoint3& e) { j = json{{"a", e.a()}, {"b", e.b()}, {"c", e.c()}}; }

ExtremePoint3 extreme_point_from_json(const json& j) {
  return ExtremePoint3(j.at("a").get<double>(), j.at("b").get<double>(), j.at("c").get<double>());
}

void to_json(json& j, const MixtureDecomposition& d) {
  json comps = json::array();
  for (const auto& c : d.components) comps.push_back({{"weight", c.weight}, {"angles", c.point}});
  j = json{{"target", d.target}, {"components", comps}};
}

MixtureDecomposition decomposition_from_json(const json& j) {
  MixtureDecomposition d{j.at("target").get<CorrelationMatrix3>(), {}};
  for (const auto& c : j.at("components")) {
    d.components.push_back({c.at("weight").get<double>(), extreme_point_from_json(c.at("angles"))});
  }
  return d;
}

void to_json(json& j, const CorrelationEstimate& e) {
  j = json{{"matrix", e.matrix},
           {"n", e.n},
           {"stderr", {{"p", e.standard_error[0]}, {"q", e.standard_error[1]}, {"r", e.standard_error[2]}}}};
}

void to_json(json& j, const CorrelationCheck& c) {
  j = json{{"deviation_in_stderr", {{"p", c.deviation[0]}, {"q", c.deviation[1]}, {"r", c.deviation[2]}}},
           {"threshold", c.threshold},
           {"pass", c.pass}};
}

void to_json(json& j, const KsResult& r) {
  j = json{{"statistic", r.statistic}, {"critical", r.critical}, {"pass", r.pass}};
}

void to_json(json& j, const MellinMoment& m) {
  j = json{{"s", m.s},
           {"empirical", m.empirical},
           {"oracle", m.oracle},
           {"stderr", m.standard_error},
           {"z", m.z}};
}

void to_json(json& j, const MarginalTestReport& r) {
  static constexpr std::array<const char*, 3> names{"x", "y", "z"};
  j = json::object();
  for (int i = 0; i < 3; ++i) {
    const auto& c = r.coords[i];
    j[names[i]] = {{"ks", c.ks},
                   {"mellin", c.mellin},
                   {"mellin_threshold", c.mellin_threshold},
                   {"mellin_pass", c.mellin_pass},
                   {"pass", c.pass()}};
  }
  j["pass"] = r.pass();
}

void to_json(json& j, const GaussianAttainability& a) {
  j = json{{"status", a.attainable ? "Attainable" : "NotAttainable"},
           {"preimage", a.preimage},
           {"delta", a.delta}};
}

void to_json(json& j, const PairDensityNormalization& n) {
  j = json{{"k", n.k},
           {"cos_c", n.cos_c},
           {"printed_mass", n.printed_mass},
           {"corrected_mass", n.corrected_mass},
           {"printed_normalized", n.printed_normalized},
           {"tolerance", n.tolerance}};
}

json batch_metadata(const SampleBatch& batch) {
  return json{{"seed", batch.seed}, {"k", batch.k.k()}, {"target", batch.target}, {"n", batch.size()}};
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

void check_stream(const std::ostream& os) {
  if (!os) throw Error(ErrorCode::MalformedData, "failed writing CSV output");
}

double parse_field(std::string_view field, std::size_t line) {
  double v = 0.0;
  while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
  while (!field.empty() && (field.back() == ' ' || field.back() == '\t' || field.back() == '\r')) {
    field.remove_suffix(1);
  }
  const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
    throw Error(ErrorCode::MalformedData, "line " + std::to_string(line) + ": bad number '" +
                                              std::string(field) + "'");
  }
  return v;
}

}  // namespace

void write_csv(std::ostream& os, const SampleBatch& batch) {
  os << "x,y,z\n";
  std::string line;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    line = format_double(batch.xs[i]);
    line += ',';
    line += format_double(batch.ys[i]);
    line += ',';
    line += format_double(batch.zs[i]);
    line += '\n';
    os << line;
  }
  check_stream(os);
}

void write_csv(std::ostream& os, const SampleBatch2D& batch) {
  os << "x,y\n";
  for (std::size_t i = 0; i < batch.size(); ++i) {
    os << format_double(batch.xs[i]) << ',' << format_double(batch.ys[i]) << '\n';
  }
  check_stream(os);
}

CsvTriples read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw Error(ErrorCode::MalformedData, "empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "x,y,z") throw Error(ErrorCode::MalformedData, "expected header 'x,y,z'");

  CsvTriples out;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const std::string_view view(line);
    const auto c1 = view.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : view.find(',', c1 + 1);
    if (c2 == std::string_view::npos || view.find(',', c2 + 1) != std::string_view::npos) {
      throw Error(ErrorCode::MalformedData, "line " + std::to_string(line_no) + ": expected 3 fields");
    }
    out.xs.push_back(parse_field(view.substr(0, c1), line_no));
    out.ys.push_back(parse_field(view.substr(c1 + 1, c2 - c1 - 1), line_no));
    out.zs.push_back(parse_field(view.substr(c2 + 1), line_no));
  }
  return out;
}

}  // namespace tricop
