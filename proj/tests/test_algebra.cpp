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

#include "bol/algebra.hpp"
#include "bol/catalog.hpp"
#include "bol/error.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bol;
using bol::test::full_catalog;
using bol::test::known_ideals;
using bol::test::oracle_axioms;

namespace {

Vec u(std::size_t n, std::size_t i) { return Vec::unit(n, i); }

}  // namespace

TEST_SUITE("bol-core") {
    TEST_CASE("products on unit vectors") {
        const BolAlgebra a2 = catalog("abelian2"), s2 = catalog("solv2"), sl = catalog("sl2bol");
        CHECK(binary(a2, u(2, 0), u(2, 1)).is_zero());
        CHECK(binary(s2, u(2, 0), u(2, 1)) == u(2, 0));
        CHECK(ternary(sl, u(3, 0), u(3, 1), u(3, 2)).is_zero());
        // (e,f,h) = [[e,f],h] = [h,h] = 0, while (e,f,e) = [h,e] = 2e
        CHECK(ternary(sl, u(3, 0), u(3, 1), u(3, 0)) == 2 * u(3, 0));
    }

    TEST_CASE("left_op") {
        for (const auto& B : full_catalog())
            for (std::size_t i = 0; i < B.dim(); ++i) CHECK(left_op(B, u(B.dim(), i), u(B.dim(), i)).is_zero());
        CHECK(left_op(catalog("abelian3"), u(3, 0), u(3, 1)).is_zero());
        const Mat ad_h = lie_sl2().ad(u(3, 2));
        CHECK(left_op(catalog("lts_sl2"), u(3, 0), u(3, 1)) == ad_h);
    }

    TEST_CASE("catalog passes the axioms and agrees with the oracle") {
        for (const auto& B : full_catalog()) {
            CAPTURE(B.name());
            CHECK(check_axioms(B).pass());
            CHECK(oracle_axioms(B) == std::vector<bool>(5, true));
        }
        CHECK(catalog("mixed").dim() == 5);
        CHECK(catalog("abelian_2") == catalog("abelian2"));
        CHECK_THROWS_AS(catalog("nope"), Error);
    }

    TEST_CASE("every raw single-entry mutation fails with a witness") {
        std::size_t count = 0;
        for (const char* name : {"sl2bol", "heis3bol"}) {
            const BolAlgebra B0 = catalog(name);
            const std::size_t n = B0.dim();
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k) {
                        BolAlgebra B = B0;
                        B.set_binary_raw(i, j, k, B0.T(i, j, k) + 1);
                        const AxiomReport r = check_axioms(B);
                        CHECK_FALSE(r.pass());
                        CHECK_FALSE(r[0].pass);
                        REQUIRE(r[0].witness);
                        CHECK_FALSE(r[0].witness->defect.is_zero());
                        ++count;
                        for (std::size_t l = 0; l < n; ++l) {
                            BolAlgebra C = B0;
                            C.set_ternary_raw(i, j, k, l, B0.R(i, j, k, l) + 1);
                            const AxiomReport s = check_axioms(C);
                            CHECK_FALSE(s.pass());
                            CHECK_FALSE(s[1].pass);
                            REQUIRE(s[1].witness);
                            ++count;
                        }
                    }
        }
        CHECK(count == 2 * (27 + 81));
    }

    TEST_CASE("antisymmetric mutations: checker verdicts match the oracle") {
        // Perturbing an (i,j) entry together with its (j,i) partner keeps A1
        // and A2, so any failure must come from A3-A5. Some such mutations of
        // heis3bol are again Bol algebras; the oracle decides independently.
        std::size_t failing = 0, total = 0;
        for (const char* name : {"sl2bol", "heis3bol"}) {
            const BolAlgebra B0 = catalog(name);
            const std::size_t n = B0.dim();
            auto compare = [&](const BolAlgebra& B) {
                const AxiomReport r = check_axioms(B);
                const auto o = oracle_axioms(B);
                for (std::size_t a = 0; a < 5; ++a) CHECK(r[a].pass == o[a]);
                if (!r.pass()) {
                    ++failing;
                    bool witnessed = false;
                    for (const auto& st : r.identities)
                        if (!st.pass) witnessed = witnessed || (st.witness && !st.witness->defect.is_zero());
                    CHECK(witnessed);
                }
                ++total;
            };
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k) {
                        BolAlgebra B = B0;
                        B.set_binary(i, j, k, B0.T(i, j, k) + 1);
                        compare(B);
                        for (std::size_t l = 0; l < n; ++l) {
                            BolAlgebra C = B0;
                            C.set_ternary(i, j, k, l, B0.R(i, j, k, l) + 1);
                            compare(C);
                        }
                    }
        }
        CHECK(total == 72);
        CHECK(failing >= 50);
    }

    TEST_CASE("setters reject diagonal entries") {
        BolAlgebra B(2);
        CHECK_THROWS_AS(B.set_binary(1, 1, 0, 1), Error);
        CHECK_THROWS_AS(B.set_ternary(0, 0, 0, 0, 1), Error);
        CHECK(B.binary_is_zero());
        CHECK(B.ternary_is_zero());
        CHECK_THROWS_AS(B.set_binary(0, 2, 0, 1), Error);
    }

    TEST_CASE("prod_span and tri_span") {
        CHECK(prod_span(catalog("abelian2"), Subspace::full(2), Subspace::full(2)).is_zero());
        CHECK(prod_span(catalog("solv2"), Subspace::full(2), Subspace::full(2)) == span({u(2, 0)}, 2));
        const Subspace all = Subspace::full(3);
        CHECK(tri_span(catalog("sl2bol"), all, all, all) == all);
    }

    TEST_CASE("ideals, closures, center") {
        const BolAlgebra s2 = catalog("solv2"), sl = catalog("sl2bol"), mixed = catalog("mixed");
        for (const auto& B : full_catalog()) {
            CHECK(is_ideal(B, Subspace::zero(B.dim())));
            CHECK(is_ideal(B, whole(B)));
            CHECK(ideal_closure(B, Subspace::zero(B.dim())).is_zero());
        }
        CHECK(is_ideal(s2, span({u(2, 0)}, 2)));
        CHECK_FALSE(is_ideal(s2, span({u(2, 1)}, 2)));
        CHECK(ideal_closure(sl, span({u(3, 0)}, 3)) == Subspace::full(3));
        CHECK(ideal_closure(mixed, span({u(5, 0)}, 5)) == first_summand(3, 2));
        CHECK(center(catalog("abelian3")) == Subspace::full(3));
        CHECK(center(sl).is_zero());
        CHECK(center(catalog("heis3bol")) == span({u(3, 2)}, 3));
    }

    TEST_CASE("ideal properties on every catalog ideal") {
        for (const auto& B : full_catalog()) {
            CAPTURE(B.name());
            const Subspace all = whole(B);
            for (const auto& I : known_ideals(B)) {
                CHECK(I.contains(tri_span(B, I, all, all)));
                CHECK(I.contains(tri_span(B, all, I, all)));
                CHECK(I.contains(tri_span(B, all, all, I)));
                CHECK(check_axioms(quotient(B, I)).pass());
                CHECK(quotient(B, I).dim() == B.dim() - I.dim());
            }
        }
    }

    TEST_CASE("ideal_closure is the least ideal over its generators") {
        for (const auto& B : full_catalog()) {
            const std::size_t n = B.dim();
            for (std::size_t i = 0; i < n; ++i) {
                const Subspace g = span({u(n, i)}, n);
                const Subspace I = ideal_closure(B, g);
                CHECK(is_ideal(B, I));
                CHECK(I.contains(g));
                // Any ideal containing the generator contains the closure.
                for (const auto& J : known_ideals(B))
                    if (J.contains(g)) CHECK(J.contains(I));
                // Dropping any one basis vector of I loses the ideal property
                // or the generator.
                for (std::size_t d = 0; d < I.dim() && I.dim() > 1; ++d) {
                    std::vector<Vec> rest;
                    for (std::size_t r = 0; r < I.dim(); ++r)
                        if (r != d) rest.push_back(I.basis()[r]);
                    const Subspace smaller = span(rest, n);
                    CHECK_FALSE((is_ideal(B, smaller) && smaller.contains(g)));
                }
            }
        }
    }

    TEST_CASE("quotients, sums, restrictions") {
        const BolAlgebra s2 = catalog("solv2"), mixed = catalog("mixed"), sl = catalog("sl2bol");
        CHECK(quotient(sl, Subspace::zero(3)) == sl);
        CHECK(quotient(s2, span({u(2, 0)}, 2)) == catalog("abelian1"));
        CHECK(quotient(mixed, second_summand(3, 2)) == sl);
        CHECK(quotient(sl, whole(sl)).dim() == 0);
        CHECK_THROWS_AS(quotient(s2, span({u(2, 1)}, 2)), Error);
        CHECK(direct_sum(catalog("abelian1"), catalog("abelian1")) == catalog("abelian2"));
        CHECK(restrict(mixed, first_summand(3, 2)) == sl);
        CHECK(check_axioms(direct_sum(sl, catalog("so3bol"))).pass());
        CHECK(restrict(sl, span({u(3, 0)}, 3)).dim() == 1);
        CHECK_THROWS_AS(restrict(sl, span({u(3, 0), u(3, 1)}, 3)), Error);
    }

    TEST_CASE("change of basis preserves the axioms and inverts") {
        const Mat P{{1, 1, 0}, {0, 1, 2}, {1, 0, 1}};
        const auto Pinv = inverse(P);
        REQUIRE(Pinv);
        for (const char* name : {"sl2bol", "heis3bol", "lts_sl2", "so3bol"}) {
            const BolAlgebra B = catalog(name);
            const BolAlgebra C = change_basis(B, P);
            CHECK(check_axioms(C).pass());
            CHECK(change_basis(C, *Pinv) == B);
            // f_0 . f_1 computed in C equals P^{-1}(P e_0 . P e_1) computed in B.
            const Vec lhs = binary(C, u(3, 0), u(3, 1));
            const Vec rhs = *Pinv * binary(B, P.col(0), P.col(1));
            CHECK(lhs == rhs);
        }
        CHECK_THROWS_AS(change_basis(catalog("sl2bol"), Mat{{1, 1, 0}, {1, 1, 0}, {0, 0, 1}}), Error);
    }

    TEST_CASE("Def. 3 ideals are reported separately") {
        for (const auto& B : full_catalog()) {
            CHECK(is_ideal(B, whole(B), IdealMode::Def3));
            CHECK(is_ideal(B, Subspace::zero(B.dim()), IdealMode::Def3));
        }
    }

    TEST_CASE("dimension zero is the zero algebra") {
        const BolAlgebra Z(0);
        CHECK(check_axioms(Z).pass());
        CHECK(center(Z).dim() == 0);
        CHECK(quotient(Z, whole(Z)).dim() == 0);
    }
}
