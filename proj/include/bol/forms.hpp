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

#ifndef BOL_FORMS_HPP
#define BOL_FORMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "bol/algebra.hpp"

namespace bol {

enum class Provenance { Prop1, EnvelopeRestriction, Killing, User };
const char* to_string(Provenance p) noexcept;

struct BilinearForm {
    Mat gram;
    bool symmetric = true;
    Provenance provenance = Provenance::User;

    static BilinearForm user(Mat gram);
    std::size_t dim() const noexcept { return gram.rows(); }
    Scalar operator()(const Vec& x, const Vec& y) const;
};

/// Skew:  b((x,y,z),t) = -b(z,(x,y,t))
/// Paper: b((x,y,z),t) =  b(z,(x,y,t))
enum class InvarianceVariant { Skew, Paper };
const char* to_string(InvarianceVariant v) noexcept;

struct InvarianceReport {
    InvarianceVariant variant = InvarianceVariant::Skew;
    bool binary_ok = true;   // b(x.y,z) = b(x,y.z)
    bool ternary_ok = true;
    std::optional<std::vector<std::size_t>> binary_witness;
    std::optional<std::vector<std::size_t>> ternary_witness;
    bool pass() const { return binary_ok && ternary_ok; }
};

InvarianceReport invariance_check(const BolAlgebra& B, const BilinearForm& b,
                                  InvarianceVariant variant = InvarianceVariant::Skew);

/// gram(i,j) = tr L(e_i,e_j) + tr L(e_j,e_i) with L(x,y)z = (z,y,x).
BilinearForm killing_ricci_prop1(const BolAlgebra& B);
/// Killing form of the enveloping Lie algebra restricted to B.
BilinearForm killing_ricci_env(const BolAlgebra& B);

struct KillingRicciComparison {
    Mat prop1;
    Mat env;
    Mat difference;  // prop1 - env
    bool equal = false;
};
KillingRicciComparison compare_killing_ricci(const BolAlgebra& B);

Subspace left_perp(const BilinearForm& b, const Subspace& S);
Subspace right_perp(const BilinearForm& b, const Subspace& S);
bool is_nondegenerate(const BilinearForm& b);

struct Prop2Report {
    bool preconditions_ok = false;
    std::string violation;  // empty when preconditions hold
    Subspace center;
    Subspace left;   // left_perp(b, center)
    Subspace right;  // right_perp(b, center)
    Subspace product;  // B.B
    bool equal = false;  // left = right = B.B
    Subspace derived;  // B.B + (B,B,B)
    bool equal_derived = false;  // left = right = B.B + (B,B,B)
};
Prop2Report prop2_check(const BolAlgebra& B, const BilinearForm& b,
                        InvarianceVariant variant = InvarianceVariant::Skew);

/// Basis of the space of symmetric Gram matrices invariant under `variant`.
std::vector<Mat> invariant_symmetric_forms(const BolAlgebra& B,
                                           InvarianceVariant variant = InvarianceVariant::Skew);

}  // namespace bol

#endif
