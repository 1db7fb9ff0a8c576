/**
 * Copyright 2026 The homsym authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace homsym::verify {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

struct Report {
    std::vector<CheckResult> checks;
    int failures() const;
    bool all_passed() const { return failures() == 0; }
};

/// The full oracle-equivalence battery: every fast-path operation compared
/// against its dense brute-force counterpart on seeded randomized inputs,
/// plus the closed-form identities between detection statistics, symmetry
/// expectations and Fisher information.
Report run_all(std::uint64_t seed = 20260810ULL);

} // namespace homsym::verify
