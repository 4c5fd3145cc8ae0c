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

#ifndef BOL_DECOMPOSE_HPP
#define BOL_DECOMPOSE_HPP

#include <optional>
#include <string>
#include <vector>

#include "bol/algebra.hpp"
#include "bol/forms.hpp"
#include "bol/spinning.hpp"

namespace bol {

struct ProperIdealSearch {
    std::optional<Subspace> ideal;
    /// Yes: certified simple, no ideal. No: ideal holds a witness.
    /// Undecided: nothing found, nothing certified.
    Tri simple = Tri::Undecided;
};
ProperIdealSearch find_proper_ideal(const BolAlgebra& B, const SimplicityOptions& opts = {});

/// Nonzero ideal I with I.I + (I,I,B) = 0 found by the closure probes, if any.
std::optional<Subspace> find_abelian_ideal(const BolAlgebra& B);

struct Decomposition {
    std::vector<BolAlgebra> components;
    std::vector<Subspace> embeddings;  // B_i inside B
    std::vector<Tri> simple;           // per component
    BilinearForm form_used;
    InvarianceVariant variant = InvarianceVariant::Skew;
    std::vector<std::vector<bool>> orthogonality;  // b(B_i, B_j) = 0
    bool certified = false;
};

/// Splits B into pairwise b-orthogonal simple ideals. Throws
/// PreconditionViolation if b is not symmetric, nondegenerate and invariant,
/// or if B has a nonzero ideal I with I.I + (I,I,B) = 0. A component whose
/// simplicity stays undecided leaves the result uncertified.
Decomposition decompose_semisimple(const BolAlgebra& B, const BilinearForm& b,
                                   InvarianceVariant variant = InvarianceVariant::Skew,
                                   const SimplicityOptions& opts = {});

struct Theorem4Report {
    struct Item1 {
        bool lie_solvable = false;
        bool beta_orthogonal = false;  // beta(B, (B,B,B)) = 0
        bool biconditional_holds = false;
    } item1;
    struct Item2 {
        bool lie_semisimple = false;
        Tri lie_simple = Tri::Undecided;
        bool beta_nondegenerate = false;
        bool biconditional_holds = false;  // semisimple <=> nondegenerate
    } item2;
    struct Item3 {
        bool applicable = false;  // beta nondegenerate and invariant
        std::string note;
        std::size_t components = 0;
        bool decomposition_certified = false;
        std::vector<std::size_t> component_envelope_dims;
        std::size_t envelope_dim = 0;
        bool envelope_splits = false;  // sum of component envelope dims = dim G
        bool B_equals_triple_span = false;
    } item3;
};
Theorem4Report theorem4_report(const BolAlgebra& B);

}  // namespace bol

#endif
