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

#ifndef FOCKOP_CLI_REPORT_HPP
#define FOCKOP_CLI_REPORT_HPP

#include <ostream>
#include <string_view>

#include <json.hpp>

#include "fockop/basis_expansion.hpp"
#include "fockop/classify.hpp"
#include "fockop/growth.hpp"
#include "fockop/oracle.hpp"

namespace fockop::cli {

using Json = nlohmann::json;  // std::map objects: keys serialize sorted

enum class Format { Json, Table, Csv };
Format parse_format(std::string_view text);

Json to_json(const BigRational& q);  // "p/q"
Json to_json(const GaussianRational& z);
Json to_json(const RadicalCoefficient& c);
Json to_json(const BasisExpansion& v);
Json to_json(const Verdict& v);
Json to_json(const NormSample& s);
Json to_json(const ExponentReport& r);
Json to_json(const OracleEstimate& e);

/// Writes the report. Table and CSV show the same leaves as JSON; an
/// "outputs.samples" array is printed as rows of t, alpha, squared_norm.
void render(const Json& report, Format format, std::ostream& out);

}  // namespace fockop::cli

#endif  // FOCKOP_CLI_REPORT_HPP
