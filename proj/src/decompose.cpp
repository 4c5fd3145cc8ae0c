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

#include "bol/decompose.hpp"

#include "bol/envelope.hpp"
#include "bol/error.hpp"
#include "bol/lie.hpp"
#include "bol/series.hpp"

namespace bol {

ProperIdealSearch find_proper_ideal(const BolAlgebra& B, const SimplicityOptions& opts) {
    ProperIdealSearch out;
    const SimplicityResult r = is_simple(B, opts);
    out.simple = r.verdict;
    if (r.verdict == Tri::No) {
        if (r.witness) {
            out.ideal = r.witness;
        } else if (B.dim() >= 2) {
            // Abelian: every subspace is an ideal.
            out.ideal = span({Vec::unit(B.dim(), 0)}, B.dim());
        }
    }
    return out;
}

namespace {

bool abelian_type(const BolAlgebra& B, const Subspace& I) {
    return prod_span(B, I, I).is_zero() && tri_span(B, I, I, whole(B)).is_zero();
}

}  // namespace

std::optional<Subspace> find_abelian_ideal(const BolAlgebra& B) {
    const std::size_t n = B.dim();
    std::vector<Subspace> probes;
    probes.push_back(ideal_closure(B, center(B)));
    for (std::size_t i = 0; i < n; ++i) probes.push_back(ideal_closure(B, span({Vec::unit(n, i)}, n)));
    for (const auto& I : probes) {
        if (I.is_zero()) continue;
        if (abelian_type(B, I)) return I;
        // The last nonzero term of a terminating series is of abelian type.
        const SeriesResult s = bol_derived_series(B, I);
        for (auto it = s.chain.rbegin(); it != s.chain.rend(); ++it)
            if (!it->is_zero() && is_ideal(B, *it) && abelian_type(B, *it)) return *it;
    }
    return std::nullopt;
}

Decomposition decompose_semisimple(const BolAlgebra& B, const BilinearForm& b, InvarianceVariant variant,
                                   const SimplicityOptions& opts) {
    const std::size_t n = B.dim();
    if (b.dim() != n) throw Error(ErrorKind::DimensionMismatch, "decompose_semisimple: form dimension");
    if (b.gram != b.gram.transpose())
        throw Error(ErrorKind::PreconditionViolation, "decompose_semisimple: form is not symmetric");
    if (!is_nondegenerate(b))
        throw Error(ErrorKind::PreconditionViolation, "decompose_semisimple: form is degenerate");
    if (!invariance_check(B, b, variant).pass())
        throw Error(ErrorKind::PreconditionViolation,
                    std::string("decompose_semisimple: form is not invariant (") + to_string(variant) + ")");
    if (find_abelian_ideal(B))
        throw Error(ErrorKind::PreconditionViolation,
                    "decompose_semisimple: nonzero ideal I with I.I + (I,I,B) = 0 exists");

    Decomposition d;
    d.form_used = b;
    d.variant = variant;
    bool all_split_ok = true;

    std::vector<Subspace> work{whole(B)};
    while (!work.empty()) {
        const Subspace S = work.back();
        work.pop_back();
        const BolAlgebra C = restrict(B, S);
        const ProperIdealSearch search = find_proper_ideal(C, opts);
        if (search.ideal) {
            std::vector<Vec> lifted;
            for (const auto& v : search.ideal->basis()) {
                Vec w(n);
                for (std::size_t a = 0; a < S.dim(); ++a) w.add_scaled(v[a], S.basis()[a]);
                lifted.push_back(std::move(w));
            }
            const Subspace I = span(lifted, n);
            const Subspace comp = intersect(right_perp(b, I), S);
            const bool ok = I.dim() + comp.dim() == S.dim() && intersect(I, comp).is_zero() && is_ideal(B, I) &&
                            is_ideal(B, comp);
            if (ok) {
                work.push_back(comp);
                work.push_back(I);
                continue;
            }
            all_split_ok = false;
        }
        d.components.push_back(C);
        d.embeddings.push_back(S);
        d.simple.push_back(search.ideal ? Tri::No : search.simple);
    }

    const std::size_t k = d.embeddings.size();
    d.orthogonality.assign(k, std::vector<bool>(k, false));
    bool orth = true;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            bool z = true;
            for (const auto& u : d.embeddings[i].basis())
                for (const auto& v : d.embeddings[j].basis())
                    if (sgn(b(u, v)) != 0) z = false;
            d.orthogonality[i][j] = z;
            if (i != j && !z) orth = false;
        }
    bool simple = true;
    for (Tri t : d.simple) simple = simple && t == Tri::Yes;
    d.certified = all_split_ok && orth && simple;
    return d;
}

Theorem4Report theorem4_report(const BolAlgebra& B) {
    Theorem4Report rep;
    const EnvelopingLie E = envelope(B);
    const BilinearForm beta = killing_ricci_env(B);
    const Subspace all = whole(B);
    const Subspace tri = tri_span(B, all, all, all);

    auto& i1 = rep.item1;
    i1.lie_solvable = lie_is_solvable(E.lie);
    i1.beta_orthogonal = true;
    for (std::size_t i = 0; i < B.dim(); ++i)
        for (const auto& t : tri.basis())
            if (sgn(beta(Vec::unit(B.dim(), i), t)) != 0) i1.beta_orthogonal = false;
    i1.biconditional_holds = i1.lie_solvable == i1.beta_orthogonal;

    auto& i2 = rep.item2;
    i2.lie_semisimple = lie_is_semisimple(E.lie);
    i2.lie_simple = lie_is_simple(E.lie).verdict;
    i2.beta_nondegenerate = is_nondegenerate(beta);
    i2.biconditional_holds = i2.lie_semisimple == i2.beta_nondegenerate;

    auto& i3 = rep.item3;
    i3.envelope_dim = E.lie.dim();
    i3.B_equals_triple_span = tri == all;
    i3.applicable = i2.beta_nondegenerate && invariance_check(B, beta).pass();
    if (!i3.applicable) {
        i3.note = "beta is degenerate or not invariant";
        return rep;
    }
    try {
        const Decomposition d = decompose_semisimple(B, beta);
        i3.components = d.components.size();
        i3.decomposition_certified = d.certified;
        std::size_t total = 0;
        for (const auto& c : d.components) {
            const std::size_t m = envelope(c).lie.dim();
            i3.component_envelope_dims.push_back(m);
            total += m;
        }
        i3.envelope_splits = total == E.lie.dim();
    } catch (const Error& err) {
        i3.note = err.what();
    }
    return rep;
}

}  // namespace bol
