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

#include "bol/lie.hpp"

#include <sstream>

#include "bol/error.hpp"

namespace bol {

LieAlgebra::LieAlgebra(std::size_t m, std::vector<std::string> labels, std::string name)
    : m_(m), labels_(std::move(labels)), name_(std::move(name)), c_(m * m * m) {
    if (labels_.empty())
        for (std::size_t i = 0; i < m; ++i) labels_.push_back("f" + std::to_string(i));
    if (labels_.size() != m) throw Error(ErrorKind::DimensionMismatch, "label count does not match dimension");
}

void LieAlgebra::set_bracket_raw(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
    if (i >= m_ || j >= m_ || k >= m_) throw Error(ErrorKind::DimensionMismatch, "bracket index out of range");
    c_[(i * m_ + j) * m_ + k] = v;
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
    if (i == j && sgn(v) != 0) throw Error(ErrorKind::PreconditionViolation, "[f_i,f_i] must vanish");
    set_bracket_raw(i, j, k, v);
    set_bracket_raw(j, i, k, -v);
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (x.size() != m_ || y.size() != m_) throw Error(ErrorKind::DimensionMismatch, "bracket: vector length");
    Vec out(m_);
    for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < m_; ++j) {
            if (sgn(y[j]) == 0) continue;
            const Scalar c = x[i] * y[j];
            for (std::size_t k = 0; k < m_; ++k)
                if (sgn(C(i, j, k)) != 0) out[k] += c * C(i, j, k);
        }
    }
    return out;
}

Mat LieAlgebra::ad(const Vec& x) const {
    Mat a(m_, m_);
    for (std::size_t c = 0; c < m_; ++c) {
        const Vec col = bracket(x, Vec::unit(m_, c));
        for (std::size_t r = 0; r < m_; ++r) a(r, c) = col[r];
    }
    return a;
}

LieAlgebra lie_abelian(std::size_t m) { return LieAlgebra(m, {}, "abelian" + std::to_string(m)); }

LieAlgebra lie_sl2() {
    LieAlgebra L(3, {"e", "f", "h"}, "sl2");
    L.set_bracket(0, 1, 2, 1);
    L.set_bracket(2, 0, 0, 2);
    L.set_bracket(2, 1, 1, -2);
    return L;
}

LieAlgebra lie_so3() {
    LieAlgebra L(3, {"x", "y", "z"}, "so3");
    L.set_bracket(0, 1, 2, 1);
    L.set_bracket(1, 2, 0, 1);
    L.set_bracket(2, 0, 1, 1);
    return L;
}

LieAlgebra lie_heis3() {
    LieAlgebra L(3, {"x", "y", "z"}, "heis3");
    L.set_bracket(0, 1, 2, 1);
    return L;
}

LieAlgebra lie_direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    const std::size_t p = a.dim(), q = b.dim();
    std::vector<std::string> labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    LieAlgebra s(p + q, labels, a.name() + "+" + b.name());
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j)
            for (std::size_t k = 0; k < p; ++k) s.set_bracket_raw(i, j, k, a.C(i, j, k));
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j)
            for (std::size_t k = 0; k < q; ++k) s.set_bracket_raw(p + i, p + j, p + k, b.C(i, j, k));
    return s;
}

JacobiReport jacobi_check(const LieAlgebra& L) {
    const std::size_t m = L.dim();
    JacobiReport rep;
    std::vector<Vec> e;
    for (std::size_t i = 0; i < m; ++i) e.push_back(Vec::unit(m, i));
    std::vector<Vec> br(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) br[i * m + j] = L.bracket(e[i], e[j]);
    // Antisymmetry is part of being a Lie bracket; a raw mutation may break it.
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            Vec d = br[i * m + j] + br[j * m + i];
            if (!d.is_zero()) {
                rep.pass = false;
                if (rep.failures++ == 0) rep.witness = std::array<std::size_t, 3>{i, j, j}, rep.defect = d;
            }
        }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                Vec d = L.bracket(br[i * m + j], e[k]);
                d += L.bracket(br[j * m + k], e[i]);
                d += L.bracket(br[k * m + i], e[j]);
                if (!d.is_zero()) {
                    rep.pass = false;
                    if (rep.failures++ == 0) rep.witness = std::array<std::size_t, 3>{i, j, k}, rep.defect = d;
                }
            }
    return rep;
}

BilinearForm killing(const LieAlgebra& L) {
    const std::size_t m = L.dim();
    std::vector<Mat> ad;
    for (std::size_t i = 0; i < m; ++i) ad.push_back(L.ad(Vec::unit(m, i)));
    Mat g(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            // tr(AB) = sum_{r,c} A(r,c) B(c,r)
            Scalar t = 0;
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t c = 0; c < m; ++c)
                    if (sgn(ad[i](r, c)) != 0 && sgn(ad[j](c, r)) != 0) t += ad[i](r, c) * ad[j](c, r);
            g(i, j) = t;
            g(j, i) = t;
        }
    return BilinearForm{std::move(g), true, Provenance::Killing};
}

Subspace lie_bracket_span(const LieAlgebra& L, const Subspace& U, const Subspace& V) {
    if (U.ambient() != L.dim() || V.ambient() != L.dim())
        throw Error(ErrorKind::DimensionMismatch, "lie_bracket_span: ambient mismatch");
    std::vector<Vec> out;
    for (const auto& u : U.basis())
        for (const auto& v : V.basis()) out.push_back(L.bracket(u, v));
    return span(out, L.dim());
}

bool lie_is_subalgebra(const LieAlgebra& L, const Subspace& S) { return S.contains(lie_bracket_span(L, S, S)); }

bool lie_is_ideal(const LieAlgebra& L, const Subspace& S) {
    return S.contains(lie_bracket_span(L, S, Subspace::full(L.dim())));
}

Subspace lie_generated_subalgebra(const LieAlgebra& L, const Subspace& S) {
    Subspace cur = S;
    for (;;) {
        Subspace next = sum(cur, lie_bracket_span(L, cur, cur));
        if (next.dim() == cur.dim()) return cur;
        cur = std::move(next);
    }
}

LieAlgebra lie_quotient(const LieAlgebra& L, const Subspace& I) {
    if (!lie_is_ideal(L, I)) throw Error(ErrorKind::NotAnIdeal, "lie_quotient: subspace is not an ideal");
    const std::size_t m = L.dim();
    const auto fc = I.free_columns();
    std::vector<std::string> labels;
    for (auto c : fc) labels.push_back(L.labels()[c]);
    LieAlgebra Q(fc.size(), labels, L.name().empty() ? std::string() : L.name() + "/I");
    for (std::size_t a = 0; a < fc.size(); ++a)
        for (std::size_t b = 0; b < fc.size(); ++b) {
            const Vec p = I.reduce(L.bracket(Vec::unit(m, fc[a]), Vec::unit(m, fc[b])));
            for (std::size_t c = 0; c < fc.size(); ++c) Q.set_bracket_raw(a, b, c, p[fc[c]]);
        }
    return Q;
}

SeriesResult lie_derived_series_unchecked(const LieAlgebra& L, const Subspace& S) {
    SeriesResult res;
    res.variant = SeriesVariant::Lie;
    res.chain.push_back(S);
    for (;;) {
        const Subspace& cur = res.chain.back();
        Subspace next = lie_bracket_span(L, cur, cur);
        if (next == cur) break;
        res.chain.push_back(std::move(next));
    }
    res.stabilized_at = res.chain.size() - 1;
    res.solvable = res.chain.back().is_zero();
    return res;
}

SeriesResult lie_derived_series(const LieAlgebra& L, const Subspace& S) {
    if (!lie_is_ideal(L, S)) throw Error(ErrorKind::NotAnIdeal, "lie_derived_series: not an ideal");
    return lie_derived_series_unchecked(L, S);
}

bool lie_is_solvable(const LieAlgebra& L) {
    return lie_derived_series_unchecked(L, Subspace::full(L.dim())).solvable;
}

Subspace lie_radical(const LieAlgebra& L) {
    const Subspace all = Subspace::full(L.dim());
    const Subspace rad = left_perp(killing(L), lie_bracket_span(L, all, all));
    if (!lie_is_ideal(L, rad)) throw Error(ErrorKind::FatalInconsistency, "lie_radical: candidate is not an ideal");
    if (!lie_derived_series(L, rad).solvable)
        throw Error(ErrorKind::FatalInconsistency, "lie_radical: candidate is not solvable");
    if (!is_nondegenerate(killing(lie_quotient(L, rad))))
        throw Error(ErrorKind::FatalInconsistency, "lie_radical: quotient has degenerate Killing form");
    return rad;
}

bool lie_is_semisimple(const LieAlgebra& L) { return is_nondegenerate(killing(L)); }

bool cartan_solvability_condition(const LieAlgebra& L) {
    const Subspace all = Subspace::full(L.dim());
    const BilinearForm k = killing(L);
    const Subspace d = lie_bracket_span(L, all, all);
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (const auto& v : d.basis())
            if (sgn(k(Vec::unit(L.dim(), i), v)) != 0) return false;
    return true;
}

SimplicityResult lie_is_simple(const LieAlgebra& L, const SimplicityOptions& opts) {
    std::vector<Mat> family;
    bool abelian = true;
    for (std::size_t i = 0; i < L.dim(); ++i) {
        Mat a = L.ad(Vec::unit(L.dim(), i));
        if (!a.is_zero()) {
            abelian = false;
            family.push_back(std::move(a));
        }
    }
    SimplicityResult res = irreducibility_search(family, L.dim(), opts);
    if (res.verdict == Tri::Yes && abelian) {
        res.verdict = Tri::No;
        res.reason = "abelian";
    }
    return res;
}

const char* to_string(SeriesVariant v) noexcept {
    switch (v) {
        case SeriesVariant::Lts: return "lts";
        case SeriesVariant::Bol: return "bol";
        case SeriesVariant::Lie: return "lie";
    }
    return "unknown";
}

}  // namespace bol
