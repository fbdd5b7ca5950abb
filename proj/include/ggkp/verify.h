// Copyright 2026 The ggkp Authors
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

#ifndef GGKP_VERIFY_H
#define GGKP_VERIFY_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace ggkp {

struct CheckResult {
    std::string suite;
    std::string name;
    int64_t cases = 0;
    /// Worst observed error, in the units of `threshold`.
    double max_error = 0.0;
    double threshold = 0.0;
    bool passed = false;
};

struct VerifyReport {
    std::string suite;
    uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool passed() const;
    /// Errors are rounded to three significant digits so reports stay stable
    /// across libm implementations.
    nlohmann::json to_json() const;
    std::string summary() const;
};

/// Suite names accepted by run_verify.
const std::vector<std::string> &verify_suites();

/// Runs the seeded invariant checks of one suite ("theta", "matrix", "zak",
/// "logical") or of all of them ("all"). Throws DomainError for other names.
VerifyReport run_verify(std::string_view suite, uint64_t seed);

}  // namespace ggkp

#endif
