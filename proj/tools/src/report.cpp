// Copyright 2026 The fockop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fockop::cli {

namespace {

void flatten(const Json& node, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) flatten(value, path.empty() ? key : path + "." + key, out);
  } else if (node.is_array()) {
    if (node.empty()) out.emplace_back(path, "[]");
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], path + "[" + std::to_string(i) + "]", out);
  } else if (node.is_string()) {
    out.emplace_back(path, node.get<std::string>());
  } else {
    out.emplace_back(path, node.dump());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

const Json* samples_of(const Json& report) {
  if (!report.contains("outputs")) return nullptr;
  const Json& outputs = report.at("outputs");
  if (!outputs.is_object() || !outputs.contains("samples") || !outputs.at("samples").is_array()) return nullptr;
  return &outputs.at("samples");
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "json") return Format::Json;
  if (text == "table") return Format::Table;
  if (text == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + std::string(text) + "' (expected json, table or csv)");
}

Json to_json(const BigRational& q) { return q.to_fraction_string(); }

Json to_json(const GaussianRational& z) { return Json{{"re", to_json(z.re)}, {"im", to_json(z.im)}}; }

Json to_json(const RadicalCoefficient& c) {
  return Json{{"rational", to_json(c.rational_part())}, {"radicand", to_json(c.radicand())}, {"text", c.to_string()}};
}

Json to_json(const BasisExpansion& v) {
  Json terms = Json::array();
  for (const auto& [alpha, c] : v.coefficients()) {
    terms.push_back(Json{{"index", alpha.to_string()}, {"coefficient", to_json(c)}});
  }
  return Json{{"terms", std::move(terms)}, {"text", v.to_string()}, {"squared_norm", to_json(squared_norm(v))}};
}

Json to_json(const Verdict& v) {
  return Json{{"property", std::string(to_string(v.property))},
              {"holds", v.holds},
              {"case", std::string(to_string(v.matched_case))},
              {"witness", v.witness}};
}

Json to_json(const NormSample& s) {
  return Json{{"t", s.t}, {"alpha", s.alpha.to_string()}, {"squared_norm", to_json(s.squared_norm)}};
}

Json to_json(const ExponentReport& r) {
  Json j{{"status", std::string(to_string(r.status))}};
  j["predicted"] = r.predicted ? to_json(*r.predicted) : Json(nullptr);
  j["fitted"] = std::isfinite(r.fitted) ? Json(r.fitted) : Json(nullptr);
  j["residual"] = std::isfinite(r.residual) ? Json(r.residual) : Json(nullptr);
  return j;
}

Json to_json(const OracleEstimate& e) {
  Json j{{"method", std::string(to_string(e.method))}, {"value", e.value}};
  if (e.method == OracleMethod::MonteCarlo) {
    j["standard_error"] = e.standard_error;
    j["samples"] = e.samples;
  } else {
    j["error_bound"] = e.error_bound;
  }
  return j;
}

void render(const Json& report, Format format, std::ostream& out) {
  if (format == Format::Json) {
    out << report.dump(2) << '\n';
    return;
  }
  const Json* samples = samples_of(report);
  if (format == Format::Csv && samples != nullptr) {
    out << "t,alpha,squared_norm\n";
    for (const auto& s : *samples) {
      out << s.at("t").dump() << ',' << csv_field(s.at("alpha").get<std::string>()) << ','
          << s.at("squared_norm").get<std::string>() << '\n';
    }
    return;
  }
  Json rest = report;
  if (samples != nullptr) rest["outputs"].erase("samples");
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(rest, "", rows);
  if (format == Format::Csv) {
    out << "key,value\n";
    for (const auto& [k, v] : rows) out << csv_field(k) << ',' << csv_field(v) << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  for (const auto& [k, v] : rows) out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  if (samples != nullptr) {
    std::vector<std::array<std::string, 3>> table{{"t", "alpha", "squared_norm"}};
    for (const auto& s : *samples) {
      table.push_back({s.at("t").dump(), s.at("alpha").get<std::string>(), s.at("squared_norm").get<std::string>()});
    }
    std::array<std::size_t, 3> w{};
    for (const auto& r : table) {
      for (std::size_t c = 0; c < 3; ++c) w[c] = std::max(w[c], r[c].size());
    }
    out << '\n';
    for (const auto& r : table) {
      out << std::string(w[0] - r[0].size(), ' ') << r[0] << "  " << r[1] << std::string(w[1] - r[1].size() + 2, ' ')
          << r[2] << '\n';
    }
  }
}

}  // namespace fockop::cli
