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

#include "bol/envelope.hpp"
#include "bol/forms.hpp"
#include "bol/lie.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bol;
using bol::test::full_catalog;

namespace {

Vec u(std::size_t n, std::size_t i) { return Vec::unit(n, i); }

BilinearForm sl2_killing() { return killing(lie_sl2()); }

/// tr L(e_i,e_j) + tr L(e_j,e_i) with L(x,y)z = (z,y,x), from raw entries.
Mat prop1_oracle(const BolAlgebra& B) {
    const std::size_t n = B.dim();
    Mat g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) g(i, j) += B.R(k, j, i, k) + B.R(k, i, j, k);
    return g;
}

}  // namespace

TEST_SUITE("forms") {
    TEST_CASE("invariance") {
        const Mat g{{1, 2, 0}, {2, 5, 1}, {0, 1, 3}};
        for (auto v : {InvarianceVariant::Skew, InvarianceVariant::Paper})
            CHECK(invariance_check(catalog("abelian3"), BilinearForm::user(g), v).pass());
        CHECK(invariance_check(catalog("sl2bol"), sl2_killing(), InvarianceVariant::Skew).pass());
        const InvarianceReport p =
            invariance_check(catalog("sl2bol"), BilinearForm::user(Mat::identity(3)), InvarianceVariant::Paper);
        CHECK_FALSE(p.pass());
        CHECK((p.binary_witness || p.ternary_witness));
    }

    TEST_CASE("prop1 form against a raw-entry oracle") {
        for (const auto& B : full_catalog()) {
            CAPTURE(B.name());
            const BilinearForm f = killing_ricci_prop1(B);
            CHECK(f.gram == prop1_oracle(B));
            CHECK(f.gram == f.gram.transpose());
            CHECK(f.provenance == Provenance::Prop1);
        }
        for (std::size_t n = 1; n <= 4; ++n) CHECK(killing_ricci_prop1(catalog("abelian" + std::to_string(n))).gram.is_zero());
        CHECK(killing_ricci_prop1(catalog("sl2bol")).gram.is_zero() == false);
    }

    TEST_CASE("lts_sl2: prop1 equals twice the sl2 Killing form") {
        // L(x,y) = ad_x ad_y on lts_sl2, so tr L(x,y) = kappa(x,y).
        const Mat k = sl2_killing().gram;
        CHECK(killing_ricci_prop1(catalog("lts_sl2")).gram == 2 * k);
    }

    TEST_CASE("envelope-restricted form") {
        for (std::size_t n = 1; n <= 4; ++n) CHECK(killing_ricci_env(catalog("abelian" + std::to_string(n))).gram.is_zero());
        const BolAlgebra s2 = catalog("solv2");
        const BilinearForm b = killing_ricci_env(s2);
        const Subspace tri = tri_span(s2, whole(s2), whole(s2), whole(s2));
        CHECK(tri.is_zero());
        CHECK(killing_ricci_env(catalog("lts_sl2")).gram == killing_ricci_prop1(catalog("lts_sl2")).gram);
        CHECK(b.provenance == Provenance::EnvelopeRestriction);
    }

    TEST_CASE("comparison report") {
        CHECK(compare_killing_ricci(catalog("abelian3")).equal);
        CHECK(compare_killing_ricci(catalog("lts_sl2")).equal);
        const KillingRicciComparison c = compare_killing_ricci(catalog("sl2bol"));
        CHECK(c.difference == c.prop1 - c.env);
        CHECK(c.env == c.env.transpose());
    }

    TEST_CASE("forms are basis covariant") {
        const Mat P{{1, 1, 0}, {0, 1, 2}, {1, 0, 1}};
        for (const char* name : {"sl2bol", "lts_sl2", "so3bol", "heis3bol"}) {
            CAPTURE(name);
            const BolAlgebra B = catalog(name), C = change_basis(B, P);
            CHECK(killing_ricci_prop1(C).gram == P.transpose() * killing_ricci_prop1(B).gram * P);
            CHECK(killing_ricci_env(C).gram == P.transpose() * killing_ricci_env(B).gram * P);
        }
    }

    TEST_CASE("orthogonals") {
        const BilinearForm k = sl2_killing();
        CHECK(left_perp(k, Subspace::zero(3)) == Subspace::full(3));
        CHECK(left_perp(k, Subspace::full(3)).is_zero());
        // kappa(e,f) = 4 is the only pairing of e, so e-perp is span{e,h}.
        CHECK(right_perp(k, span({u(3, 0)}, 3)) == span({u(3, 0), u(3, 2)}, 3));
        CHECK(is_nondegenerate(k));
        CHECK_FALSE(is_nondegenerate(killing(lie_heis3())));
        for (const auto& S : {span({u(3, 0)}, 3), span({u(3, 0) + u(3, 1), u(3, 2)}, 3), Subspace::full(3)})
            CHECK(S.dim() + left_perp(k, S).dim() == 3);
    }

    TEST_CASE("proposition 2 checks") {
        const Prop2Report sl = prop2_check(catalog("sl2bol"), sl2_killing());
        CHECK(sl.preconditions_ok);
        CHECK(sl.center.is_zero());
        CHECK(sl.left == Subspace::full(3));
        CHECK(sl.right == Subspace::full(3));
        CHECK(sl.product == Subspace::full(3));
        CHECK(sl.equal);
        const Prop2Report ab = prop2_check(catalog("abelian2"), BilinearForm::user(Mat::identity(2)));
        CHECK(ab.preconditions_ok);
        CHECK(ab.center == Subspace::full(2));
        CHECK(ab.left.is_zero());
        CHECK(ab.product.is_zero());
        CHECK(ab.equal);
        const Prop2Report lts = prop2_check(catalog("lts_sl2"), sl2_killing());
        CHECK(lts.preconditions_ok);
        CHECK(lts.center.is_zero());
        CHECK(lts.product.is_zero());
        CHECK(lts.left == Subspace::full(3));
        CHECK_FALSE(lts.equal);
        CHECK(lts.equal_derived);
        const Prop2Report bad = prop2_check(catalog("solv2"), BilinearForm::user(Mat::identity(2)));
        CHECK_FALSE(bad.preconditions_ok);
        CHECK_FALSE(bad.violation.empty());
    }

    TEST_CASE("invariant symmetric forms") {
        // solv2 carries no nondegenerate invariant symmetric form.
        for (const auto& g : invariant_symmetric_forms(catalog("solv2"))) {
            CHECK(invariance_check(catalog("solv2"), BilinearForm::user(g)).pass());
            CHECK_FALSE(is_nondegenerate(BilinearForm::user(g)));
        }
        const auto sl = invariant_symmetric_forms(catalog("sl2bol"));
        REQUIRE(sl.size() == 1);
        CHECK(rank(sl[0]) == 3);
        CHECK(invariant_symmetric_forms(catalog("abelian2")).size() == 3);
    }

    TEST_CASE("properties over the catalog") {
        for (const auto& B : full_catalog()) {
            CAPTURE(B.name());
            const BilinearForm env = killing_ricci_env(B);
            CHECK(invariance_check(B, env, InvarianceVariant::Skew).pass());
            std::vector<BilinearForm> forms{env};
            for (const auto& g : invariant_symmetric_forms(B)) forms.push_back(BilinearForm::user(g));
            for (const auto& f : forms) {
                if (!is_nondegenerate(f)) continue;
                const Prop2Report r = prop2_check(B, f);
                REQUIRE(r.preconditions_ok);
                CHECK(r.equal_derived);
                // The B.B version of the statement needs B.B to carry the
                // triple products; it fails when the binary product is zero.
                CHECK(r.equal == (r.product == r.derived));
            }
        }
    }
}
