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

#include "bol/error.hpp"
#include "bol/forms.hpp"
#include "bol/io.hpp"
#include "bol/series.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bol;
using bol::test::full_catalog;
using bol::test::known_ideals;

namespace {

Vec u(std::size_t n, std::size_t i) { return Vec::unit(n, i); }

std::vector<std::size_t> dims(const SeriesResult& s) {
    std::vector<std::size_t> d;
    for (const auto& t : s.chain) d.push_back(t.dim());
    return d;
}

}  // namespace

TEST_SUITE("series-radical") {
    TEST_CASE("lts derived series") {
        const auto a = lts_derived_series(catalog("abelian3"), Subspace::full(3));
        CHECK(dims(a) == std::vector<std::size_t>{3, 0});
        CHECK(a.solvable);
        const auto s = lts_derived_series(catalog("sl2bol"), Subspace::full(3));
        CHECK(dims(s) == std::vector<std::size_t>{3});
        CHECK_FALSE(s.solvable);
        CHECK(lts_derived_series(catalog("heis3bol"), Subspace::full(3)).solvable);
        CHECK_THROWS_AS(lts_derived_series(catalog("solv2"), span({u(2, 1)}, 2)), Error);
    }

    TEST_CASE("bol derived series") {
        const auto s = bol_derived_series(catalog("solv2"), Subspace::full(2));
        REQUIRE(s.chain.size() == 3);
        CHECK(s.chain[1] == span({u(2, 0)}, 2));
        CHECK(s.chain[2].is_zero());
        CHECK(s.solvable);
        CHECK(s.stabilized_at == 2);
        CHECK_FALSE(bol_derived_series(catalog("sl2bol"), Subspace::full(3)).solvable);
        const auto z = bol_derived_series(catalog("sl2bol"), Subspace::zero(3));
        CHECK(z.chain.size() == 1);
        CHECK(z.solvable);
    }

    TEST_CASE("is_solvable") {
        CHECK(is_solvable(catalog("heis3bol"), Subspace::full(3)));
        CHECK(is_solvable(catalog("mixed"), second_summand(3, 2)));
        CHECK_FALSE(is_solvable(catalog("sl2bol"), Subspace::full(3)));
    }

    TEST_CASE("derived terms are ideals in the previous term, and series decrease") {
        for (const auto& B : full_catalog()) {
            CAPTURE(B.name());
            for (const auto& W : known_ideals(B)) {
                const SeriesResult s = bol_derived_series(B, W);
                for (std::size_t k = 1; k < s.chain.size(); ++k) {
                    const Subspace& prev = s.chain[k - 1];
                    const Subspace& cur = s.chain[k];
                    CHECK(prev.contains(cur));
                    CHECK(cur.dim() < prev.dim());
                    CHECK(cur.contains(prod_span(B, prev, cur)));
                    CHECK(cur.contains(tri_span(B, cur, prev, prev)));
                }
                const SeriesResult l = lts_derived_series(B, W);
                for (std::size_t k = 1; k < l.chain.size(); ++k) CHECK(l.chain[k].dim() < l.chain[k - 1].dim());
            }
        }
    }

    TEST_CASE("sum of solvable ideals is solvable") {
        std::size_t pairs = 0;
        for (const auto& B : full_catalog()) {
            std::vector<Subspace> solv;
            for (const auto& I : known_ideals(B))
                if (is_solvable(B, I)) solv.push_back(I);
            for (const auto& V : solv)
                for (const auto& W : solv) {
                    CHECK(is_solvable(B, sum(V, W)));
                    ++pairs;
                }
        }
        CHECK(pairs > 0);
    }

    TEST_CASE("radical examples") {
        for (std::size_t n = 1; n <= 4; ++n) {
            const RadicalCertificate r = radical(catalog("abelian" + std::to_string(n)));
            CHECK(r.decided);
            CHECK(r.radical == Subspace::full(n));
            CHECK(r.strategy == RadicalStrategy::Agreement);
        }
        const RadicalCertificate s = radical(catalog("sl2bol"));
        CHECK(s.decided);
        CHECK(s.radical.is_zero());
        CHECK(s.strategy == RadicalStrategy::Agreement);
        const RadicalCertificate m = radical(catalog("mixed"));
        CHECK(m.decided);
        CHECK(m.radical == second_summand(3, 2));
        CHECK(m.strategy == RadicalStrategy::Agreement);
        CHECK(m.is_ideal_ok);
        CHECK(m.solvable_ok);
        CHECK(m.quotient_semisimple_ok);
    }

    TEST_CASE("radical properties on the catalog") {
        for (const auto& B : full_catalog()) {
            CAPTURE(B.name());
            const RadicalCertificate r = radical(B);
            REQUIRE(r.decided);
            for (const auto& I : known_ideals(B))
                if (is_solvable(B, I)) CHECK(r.radical.contains(I));
            const RadicalCertificate q = radical(quotient(B, r.radical));
            CHECK(q.decided);
            CHECK(q.radical.is_zero());
            // The prop1 form drives strategy 1 to the same answer.
            CHECK(radical(B, killing_ricci_prop1(B)).radical == r.radical);
        }
    }

    TEST_CASE("undecided radical fixture") {
        const BolAlgebra B = bol::test::load_fixture("undecided_radical.json");
        REQUIRE(check_axioms(B).pass());
        const RadicalCertificate r = radical(B);
        CHECK_FALSE(r.decided);
        CHECK(r.strategy == RadicalStrategy::None);
        CHECK_FALSE(r.form_orthogonal.certified());
        CHECK_FALSE(r.envelope_intersection.certified());
        CHECK(r.envelope_intersection.candidate == whole(B));
        CHECK_FALSE(r.envelope_intersection.solvable_ok);
        CHECK_FALSE(r.form_orthogonal.is_ideal_ok);
        // B.B + (B,B,B) = B, so B itself is not solvable, and it has no
        // proper nonzero ideal: the true radical is zero.
        CHECK_FALSE(is_solvable(B, whole(B)));
        CHECK(is_simple(B).verdict == Tri::Yes);
        CHECK_FALSE(is_semisimple(B));
    }

    TEST_CASE("semisimplicity and simplicity") {
        const BolAlgebra ss = direct_sum(catalog("sl2bol"), catalog("so3bol"));
        CHECK(is_semisimple(ss));
        CHECK(is_semisimple(catalog("sl2bol")));
        CHECK_FALSE(is_semisimple(catalog("mixed")));
        CHECK(is_simple(catalog("sl2bol")).verdict == Tri::Yes);
        CHECK(is_simple(catalog("so3bol")).verdict == Tri::Yes);
        CHECK(is_simple(catalog("lts_sl2")).verdict == Tri::Yes);
        const SimplicityResult m = is_simple(catalog("mixed"));
        CHECK(m.verdict == Tri::No);
        REQUIRE(m.witness);
        CHECK(is_ideal(catalog("mixed"), *m.witness));
        CHECK((*m.witness == first_summand(3, 2) || *m.witness == second_summand(3, 2)));
        CHECK(is_simple(catalog("abelian1")).verdict == Tri::No);
        CHECK(is_simple(ss).verdict == Tri::No);
        CHECK(is_simple(catalog("sl2bol")).seed == SimplicityOptions{}.seed);
    }
}
