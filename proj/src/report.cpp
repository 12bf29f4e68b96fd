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

#include "gpaley/report.hpp"

namespace gpaley {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::PassWithAllowance: return "pass-with-allowance";
        case Verdict::Fail: return "fail";
        case Verdict::Empirical: return "empirical";
    }
    return "fail";
}

nlohmann::json VerdictReport::to_json() const {
    return {
        {"schema", 1},
        {"task", task},
        {"config", config},
        {"result", result},
        {"verdict", to_string(verdict)},
        {"witness", witness},
        {"ms", ms},
    };
}

std::string VerdictReport::canonical() const {
    nlohmann::json j = to_json();
    j.erase("ms");
    return j.dump();
}

std::string VerdictReport::csv_header() {
    return "task,verdict,ms,config,result,witness";
}

namespace {
std::string csv_cell(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}
}  // namespace

std::string VerdictReport::to_csv_row() const {
    return task + "," + to_string(verdict) + "," + std::to_string(ms) + "," +
           csv_cell(config.dump()) + "," + csv_cell(result.dump()) + "," +
           csv_cell(witness.dump());
}

}  // namespace gpaley
