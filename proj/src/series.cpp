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

#include "bol/series.hpp"


#include "bol/envelope.hpp"
#include "bol/error.hpp"
#include "bol/lie.hpp"

namespace bol {

namespace {

template <typename Step>
SeriesResult run_series(SeriesVariant variant, const Subspace& start, Step step) {
    SeriesResult res;
    res.variant = variant;
    res.chain.push_back(start);
    for (;;) {
        Subspace next = step(res.chain.back());
        if (next == res.chain.back()) break;
        res.chain.push_back(std::move(next));
    }
    res.stabilized_at = res.chain.size() - 1;
    res.solvable = res.chain.back().is_zero();
    return res;
}

}  // namespace

SeriesResult lts_derived_series(const BolAlgebra& B, const Subspace& V) {
    if (!is_ideal(B, V, IdealMode::Def2)) throw Error(ErrorKind::NotAnIdeal, "lts_derived_series: not an ideal");
    const Subspace all = whole(B);
    return run_series(SeriesVariant::Lts, V, [&](const Subspace& c) { return tri_span(B, c, c, all); });
}

SeriesResult bol_derived_series(const BolAlgebra& B, const Subspace& W) {
    if (!is_ideal(B, W, IdealMode::Def2)) throw Error(ErrorKind::NotAnIdeal, "bol_derived_series: not an ideal");
    const Subspace all = whole(B);
    return run_series(SeriesVariant::Bol, W,
                      [&](const Subspace& c) { return sum(prod_span(B, c, c), tri_span(B, c, c, all)); });
}

bool is_solvable(const BolAlgebra& B, const Subspace& W) { return bol_derived_series(B, W).solvable; }

const char* to_string(RadicalStrategy s) noexcept {
    switch (s) {
        case RadicalStrategy::FormOrthogonal: return "form-orthogonal";
        case RadicalStrategy::EnvelopeIntersection: return "envelope-intersection";
        case RadicalStrategy::Agreement: return "agreement";
        case RadicalStrategy::None: return "none";
    }
    return "unknown";
}

Subspace form_orthogonal_candidate(const BolAlgebra& B, const BilinearForm& b) {
    if (b.dim() != B.dim()) throw Error(ErrorKind::DimensionMismatch, "radical: form dimension");
    const Subspace all = whole(B);
    return left_perp(b, sum(prod_span(B, all, all), tri_span(B, all, all, all)));
}

Subspace envelope_intersection_candidate(const BolAlgebra& B) {
    const EnvelopingLie E = envelope(B);
    const Subspace r = intersect(lie_radical(E.lie), E.b_part());
    std::vector<Vec> out;
    for (const auto& v : r.basis()) {
        Vec w(B.dim());
        for (std::size_t i = 0; i < B.dim(); ++i) w[i] = v[i];
        out.push_back(std::move(w));
    }
    return span(out, B.dim());
}

namespace {

void certify(const BolAlgebra& B, CandidateCheck& c) {
    c.is_ideal_ok = is_ideal(B, c.candidate, IdealMode::Def2);
    if (!c.is_ideal_ok) {
        c.note = "candidate is not an ideal";
        return;
    }
    c.solvable_ok = is_solvable(B, c.candidate);
    if (!c.solvable_ok) c.note = "candidate is not solvable";
    try {
        const BolAlgebra Q = quotient(B, c.candidate);
        // B ∩ rad(G) contains every solvable ideal of Q, so zero here rules
        // out a nonzero solvable ideal in the quotient.
        c.quotient_semisimple_ok = envelope_intersection_candidate(Q).is_zero();
        if (!c.quotient_semisimple_ok && c.note.empty()) c.note = "quotient has a nonzero radical candidate";
    } catch (const Error& err) {
        c.note = std::string("quotient check failed: ") + err.what();
    }
}

}  // namespace

RadicalCertificate radical(const BolAlgebra& B, const BilinearForm& form) {
    RadicalCertificate cert;
    cert.radical = Subspace::zero(B.dim());

    cert.form_orthogonal.candidate = form_orthogonal_candidate(B, form);
    cert.form_orthogonal.computed = true;
    certify(B, cert.form_orthogonal);

    try {
        cert.envelope_intersection.candidate = envelope_intersection_candidate(B);
        cert.envelope_intersection.computed = true;
        certify(B, cert.envelope_intersection);
    } catch (const Error& err) {
        cert.envelope_intersection.note = err.what();
    }

    const bool c1 = cert.form_orthogonal.certified();
    const bool c2 = cert.envelope_intersection.certified();
    if (c1 && c2 && !(cert.form_orthogonal.candidate == cert.envelope_intersection.candidate))
        throw Error(ErrorKind::StrategyDisagreement, "radical: both strategies certify different subspaces");
    const CandidateCheck* chosen = nullptr;
    if (c1 && c2) {
        cert.strategy = RadicalStrategy::Agreement;
        chosen = &cert.form_orthogonal;
    } else if (c1) {
        cert.strategy = RadicalStrategy::FormOrthogonal;
        chosen = &cert.form_orthogonal;
    } else if (c2) {
        cert.strategy = RadicalStrategy::EnvelopeIntersection;
        chosen = &cert.envelope_intersection;
    }
    if (chosen) {
        cert.radical = chosen->candidate;
        cert.is_ideal_ok = chosen->is_ideal_ok;
        cert.solvable_ok = chosen->solvable_ok;
        cert.quotient_semisimple_ok = chosen->quotient_semisimple_ok;
        cert.decided = true;
    }
    return cert;
}

RadicalCertificate radical(const BolAlgebra& B) { return radical(B, killing_ricci_env(B)); }

bool is_semisimple(const BolAlgebra& B) {
    const RadicalCertificate c = radical(B);
    return c.decided && c.radical.is_zero();
}

SimplicityResult is_simple(const BolAlgebra& B, const SimplicityOptions& opts) {
    const std::size_t n = B.dim();
    // Ideals (IdealMode::Def2) are exactly the subspaces stable under z -> z.e_b and
    // z -> (z,e_i,e_j).
    std::vector<Mat> family;
    for (std::size_t b = 0; b < n; ++b) family.push_back(right_mult(B, Vec::unit(n, b)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Mat T(n, n);
            for (std::size_t c = 0; c < n; ++c) {
                const Vec col = ternary(B, Vec::unit(n, c), Vec::unit(n, i), Vec::unit(n, j));
                for (std::size_t r = 0; r < n; ++r) T(r, c) = col[r];
            }
            if (!T.is_zero()) family.push_back(std::move(T));
        }
    SimplicityResult res = irreducibility_search(family, n, opts);
    if (res.verdict == Tri::Yes && B.binary_is_zero() && B.ternary_is_zero()) {
        res.verdict = Tri::No;
        res.reason = "abelian";
    }
    return res;
}

}  // namespace bol
