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

#ifndef BOL_SERIES_HPP
#define BOL_SERIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "bol/algebra.hpp"
#include "bol/forms.hpp"
#include "bol/series_result.hpp"
#include "bol/spinning.hpp"

namespace bol {

/// V^(n+1) = (V^(n), V^(n), B). Throws NotAnIdeal.
SeriesResult lts_derived_series(const BolAlgebra& B, const Subspace& V);
/// W^(n+1) = W^(n).W^(n) + (W^(n), W^(n), B). Throws NotAnIdeal.
SeriesResult bol_derived_series(const BolAlgebra& B, const Subspace& W);
bool is_solvable(const BolAlgebra& B, const Subspace& W);

enum class RadicalStrategy { FormOrthogonal, EnvelopeIntersection, Agreement, None };
const char* to_string(RadicalStrategy s) noexcept;

struct CandidateCheck {
    Subspace candidate;
    bool computed = false;  // false when the candidate could not be formed
    std::string note;
    bool is_ideal_ok = false;
    bool solvable_ok = false;
    bool quotient_semisimple_ok = false;
    bool certified() const { return computed && is_ideal_ok && solvable_ok && quotient_semisimple_ok; }
};

struct RadicalCertificate {
    Subspace radical;
    bool is_ideal_ok = false;
    bool solvable_ok = false;
    bool quotient_semisimple_ok = false;
    RadicalStrategy strategy = RadicalStrategy::None;
    bool decided = false;
    CandidateCheck form_orthogonal;       // strategy 1
    CandidateCheck envelope_intersection;  // strategy 2
};

/// Strategy 1: {x : b(x, B.B + (B,B,B)) = 0}.
Subspace form_orthogonal_candidate(const BolAlgebra& B, const BilinearForm& b);
/// Strategy 2: B intersected with the radical of the enveloping Lie algebra.
Subspace envelope_intersection_candidate(const BolAlgebra& B);

/// Certified radical. Both strategies are evaluated; a certified candidate
/// must be an ideal, solvable, and leave a quotient whose envelope
/// intersection candidate is zero. Throws StrategyDisagreement if both
/// certify different subspaces. Returns decided = false if neither certifies.
RadicalCertificate radical(const BolAlgebra& B, const BilinearForm& form);
/// radical() with the envelope-restricted Killing-Ricci form.
RadicalCertificate radical(const BolAlgebra& B);

bool is_semisimple(const BolAlgebra& B);

/// irreducibility_search over the right multiplications and the maps
/// z -> (z,e_i,e_j). Abelian algebras are never simple.
SimplicityResult is_simple(const BolAlgebra& B, const SimplicityOptions& opts = {});

}  // namespace bol

#endif
