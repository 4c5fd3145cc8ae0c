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

#include "bol/spinning.hpp"

#include <random>

namespace bol {

const char* to_string(Tri t) noexcept {
    switch (t) {
        case Tri::Yes: return "yes";
        case Tri::No: return "no";
        case Tri::Undecided: return "undecided";
    }
    return "unknown";
}

Subspace spin(const std::vector<Mat>& family, const Subspace& S) {
    Subspace cur = S;
    for (;;) {
        std::vector<Vec> all = cur.basis();
        for (const auto& M : family)
            for (const auto& v : cur.basis()) all.push_back(M * v);
        Subspace next = span(all, cur.ambient());
        if (next.dim() == cur.dim()) return cur;
        cur = std::move(next);
    }
}

SimplicityResult irreducibility_search(const std::vector<Mat>& family, std::size_t n, const SimplicityOptions& opts) {
    SimplicityResult res;
    res.seed = opts.seed;
    if (n == 0) {
        res.verdict = Tri::No;
        res.reason = "zero space";
        return res;
    }
    auto proper = [](const Subspace& I) { return !I.is_zero() && !I.is_full(); };

    for (std::size_t i = 0; i < n; ++i) {
        Subspace I = spin(family, span({Vec::unit(n, i)}, n));
        if (proper(I)) {
            res.verdict = Tri::No;
            res.witness = std::move(I);
            res.reason = "spin of basis vector " + std::to_string(i);
            return res;
        }
    }

    std::vector<Mat> family_t;
    for (const auto& M : family) family_t.push_back(M.transpose());

    std::vector<Mat> probes = family;
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (std::size_t r = 0; r < opts.random_combinations; ++r) {
        Mat M(n, n);
        for (const auto& F : family) M += Scalar(coef(rng)) * F;
        probes.push_back(std::move(M));
    }

    for (const auto& M : probes) {
        for (const Scalar& lambda : rational_roots(char_poly(M))) {
            const Mat theta = M - lambda * Mat::identity(n);
            const Subspace ker = kernel(theta);
            for (const auto& v : ker.basis()) {
                Subspace I = spin(family, span({v}, n));
                if (proper(I)) {
                    res.verdict = Tri::No;
                    res.witness = std::move(I);
                    res.reason = "spin of an eigenvector";
                    return res;
                }
            }
            if (ker.dim() != 1) continue;
            const Subspace kt = kernel(theta.transpose());
            // ker has a cyclic generator by the loop above (its spin is not proper).
            if (kt.dim() == 1 && spin(family_t, kt).is_full()) {
                res.verdict = Tri::Yes;
                res.reason = "Norton certificate";
                return res;
            }
        }
    }
    res.verdict = Tri::Undecided;
    res.reason = "no proper invariant subspace found and no irreducibility certificate";
    return res;
}

}  // namespace bol
