/*
   Copyright 2026 The gd2 authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GD2_CONFIG_HPP
#define GD2_CONFIG_HPP

#include <cstdint>

namespace gd2 {

/// Tunable limits. Defaults can be overridden by GD2_* environment variables
/// (see from_env) and by CLI flags.
struct Config {
    /// Trial-division bound for integer factorization.
    std::int64_t factor_bound = 1'000'000;
    /// Height bound for rational point search on conics.
    std::int64_t conic_height = 10'000;
    /// Truncation order of q-expansions in the modular module.
    int qseries_terms = 64;

    /// Defaults with GD2_FACTOR_BOUND / GD2_SEARCH_BOUND / GD2_QSERIES_N applied.
    static Config from_env();
};

} // namespace gd2

#endif
