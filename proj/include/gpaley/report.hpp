/*
* Copyright 2026 the gpaley authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*      http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/

#ifndef GPALEY_REPORT_HPP
#define GPALEY_REPORT_HPP

#include <string>

#include <json.hpp>

namespace gpaley {

enum class Verdict { Pass, PassWithAllowance, Fail, Empirical };

std::string to_string(Verdict v);

/// One theorem-instance check: inputs, exact counts, bounds, verdict, slack.
/// Everything needed to re-derive the line is embedded in config/result.
struct VerdictReport {
    std::string task;
    nlohmann::json config = nlohmann::json::object();
    nlohmann::json result = nlohmann::json::object();
    Verdict verdict = Verdict::Fail;
    nlohmann::json witness = nlohmann::json::object();
    double ms = 0.0;

    bool ok() const { return verdict != Verdict::Fail; }
    bool strict_pass() const { return verdict == Verdict::Pass; }

    nlohmann::json to_json() const;
    // same content minus the timing field; used for determinism checks
    std::string canonical() const;
    std::string to_csv_row() const;
    static std::string csv_header();
};

}  // namespace gpaley

#endif
