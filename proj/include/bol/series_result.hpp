/*
   Copyright 2026 The bolalg Authors

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

#ifndef BOL_SERIES_RESULT_HPP
#define BOL_SERIES_RESULT_HPP

#include <vector>

#include "bol/linalg.hpp"

namespace bol {

enum class SeriesVariant { Lts, Bol, Lie };

struct SeriesResult {
    SeriesVariant variant = SeriesVariant::Bol;
    /// chain[0] is the starting subspace; the chain stops at the first repeat,
    /// which is not stored twice.
    std::vector<Subspace> chain;
    std::size_t stabilized_at = 0;
    bool solvable = false;
};

const char* to_string(SeriesVariant v) noexcept;

}  // namespace bol

#endif
