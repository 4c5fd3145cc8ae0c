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

#ifndef BOL_TESTS_SUPPORT_HPP
#define BOL_TESTS_SUPPORT_HPP

// Helpers shared by the unit tests and the acceptance binary. The oracles
// here work on raw tensor entries with plain loops and deliberately avoid the
// library's vector helpers, so they can catch errors in them.

#include <string>
#include <vector>

#include "bol/algebra.hpp"
#include "bol/catalog.hpp"
#include "bol/io.hpp"
#include "bol/lie.hpp"
#include "bol/series.hpp"

namespace bol::test {

inline std::string fixture(const std::string& name) { return std::string(BOL_FIXTURE_DIR) + "/" + name; }

inline BolAlgebra load_fixture(const std::string& name) { return parse_bol(read_text_file(fixture(name))); }

/// x.y on unit vectors, as a coefficient list.
inline std::vector<Scalar> oracle_mul(const BolAlgebra& B, const std::vector<Scalar>& x,
                                      const std::vector<Scalar>& y) {
    const std::size_t n = B.dim();
    std::vector<Scalar> out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * y[j] * B.T(i, j, k);
    return out;
}

inline std::vector<Scalar> oracle_tri(const BolAlgebra& B, const std::vector<Scalar>& x,
                                      const std::vector<Scalar>& y, const std::vector<Scalar>& z) {
    const std::size_t n = B.dim();
    std::vector<Scalar> out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) out[l] += x[i] * y[j] * z[k] * B.R(i, j, k, l);
    return out;
}

/// Five-identity check written out independently of check_axioms. Returns
/// the per-identity verdicts A1..A5.
inline std::vector<bool> oracle_axioms(const BolAlgebra& B) {
    const std::size_t n = B.dim();
    std::vector<std::vector<Scalar>> e(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i) e[i][i] = 1;
    auto add = [](std::vector<Scalar> a, const std::vector<Scalar>& b, int s) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
        return a;
    };
    auto zero = [](const std::vector<Scalar>& a) {
        for (const auto& x : a)
            if (x != 0) return false;
        return true;
    };
    std::vector<bool> ok(5, true);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k)
                if (B.T(i, j, k) + B.T(j, i, k) != 0) ok[0] = false;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    if (B.R(i, j, k, l) + B.R(j, i, k, l) != 0) ok[1] = false;
        }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                auto c = add(add(oracle_tri(B, e[x], e[y], e[z]), oracle_tri(B, e[y], e[z], e[x]), 1),
                             oracle_tri(B, e[z], e[x], e[y]), 1);
                if (!zero(c)) ok[2] = false;
                for (std::size_t w = 0; w < n; ++w) {
                    const auto xy = oracle_mul(B, e[x], e[y]);
                    const auto zw = oracle_mul(B, e[z], e[w]);
                    auto a4 = oracle_mul(B, oracle_tri(B, e[x], e[y], e[z]), e[w]);
                    a4 = add(a4, oracle_mul(B, oracle_tri(B, e[x], e[y], e[w]), e[z]), -1);
                    a4 = add(a4, oracle_tri(B, e[z], e[w], xy), 1);
                    a4 = add(a4, oracle_tri(B, e[x], e[y], zw), -1);
                    a4 = add(a4, oracle_mul(B, xy, zw), 1);
                    if (!zero(a4)) ok[3] = false;
                    for (std::size_t u = 0; u < n; ++u) {
                        auto lhs = oracle_tri(B, e[x], e[y], oracle_tri(B, e[z], e[w], e[u]));
                        lhs = add(lhs, oracle_tri(B, oracle_tri(B, e[x], e[y], e[z]), e[w], e[u]), -1);
                        lhs = add(lhs, oracle_tri(B, e[z], oracle_tri(B, e[x], e[y], e[w]), e[u]), -1);
                        lhs = add(lhs, oracle_tri(B, e[z], e[w], oracle_tri(B, e[x], e[y], e[u])), -1);
                        if (!zero(lhs)) ok[4] = false;
                    }
                }
            }
    return ok;
}

/// Ideals met while exploring a catalog algebra: 0, B, the center, closures
/// of basis vectors and of their pairwise sums, derived-series terms and the
/// radical. Only subspaces that pass is_ideal in the default mode are kept.
inline std::vector<Subspace> known_ideals(const BolAlgebra& B) {
    const std::size_t n = B.dim();
    std::vector<Subspace> cand{Subspace::zero(n), whole(B), center(B)};
    for (std::size_t i = 0; i < n; ++i) {
        cand.push_back(ideal_closure(B, span({Vec::unit(n, i)}, n)));
        for (std::size_t j = i + 1; j < n; ++j) cand.push_back(ideal_closure(B, span({Vec::unit(n, i) + Vec::unit(n, j)}, n)));
    }
    for (const auto& t : bol_derived_series(B, whole(B)).chain) cand.push_back(t);
    const RadicalCertificate r = radical(B);
    if (r.decided) cand.push_back(r.radical);
    std::vector<Subspace> out;
    for (auto& c : cand) {
        if (!is_ideal(B, c)) continue;
        bool seen = false;
        for (const auto& o : out) seen = seen || o == c;
        if (!seen) out.push_back(std::move(c));
    }
    return out;
}

inline std::vector<BolAlgebra> full_catalog() {
    std::vector<BolAlgebra> all;
    for (const auto& name : catalog_names()) all.push_back(catalog(name));
    return all;
}

/// ad matrices of sl2 in the basis e, f, h, written out by hand from
/// [e,f] = h, [h,e] = 2e, [h,f] = -2f. Column c holds the image of basis
/// vector c.
inline std::vector<Mat> sl2_ad_by_hand() {
    return {
        Mat{{0, 0, -2}, {0, 0, 0}, {0, 1, 0}},  // ad e: f -> h, h -> -2e
        Mat{{0, 0, 0}, {0, 0, 2}, {-1, 0, 0}},  // ad f: e -> -h, h -> 2f
        Mat{{2, 0, 0}, {0, -2, 0}, {0, 0, 0}},  // ad h
    };
}

}  // namespace bol::test

#endif
