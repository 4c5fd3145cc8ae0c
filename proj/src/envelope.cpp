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

#include <sstream>

#include "bol/error.hpp"
#include "bol/series.hpp"

namespace bol {

PairEndo PairEndo::zero(std::size_t n) { return PairEndo{Mat(n, n), Vec(n)}; }

Vec PairEndo::flatten() const {
    const std::size_t n = comp.size();
    Vec v(n * n + n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) v[i * n + j] = pi(i, j);
    for (std::size_t i = 0; i < n; ++i) v[n * n + i] = comp[i];
    return v;
}

PairEndo PairEndo::unflatten(const Vec& v, std::size_t n) {
    if (v.size() != n * n + n) throw Error(ErrorKind::DimensionMismatch, "PairEndo::unflatten: length");
    PairEndo p = zero(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p.pi(i, j) = v[i * n + j];
    for (std::size_t i = 0; i < n; ++i) p.comp[i] = v[n * n + i];
    return p;
}

PairEndo operator+(const PairEndo& a, const PairEndo& b) { return {a.pi + b.pi, a.comp + b.comp}; }
PairEndo operator-(const PairEndo& a, const PairEndo& b) { return {a.pi - b.pi, a.comp - b.comp}; }
PairEndo operator*(const Scalar& s, const PairEndo& a) { return {s * a.pi, s * a.comp}; }

namespace {

/// (z;x,y) = -(x,y,z)
Vec semi(const BolAlgebra& B, const Vec& z, const Vec& x, const Vec& y) { return -ternary(B, x, y, z); }

}  // namespace

PseudoDerivationReport is_pseudo_derivation(const BolAlgebra& B, const PairEndo& P) {
    const std::size_t n = B.dim();
    if (P.pi.rows() != n || P.pi.cols() != n || P.comp.size() != n)
        throw Error(ErrorKind::DimensionMismatch, "is_pseudo_derivation: pair shape");
    PseudoDerivationReport rep;
    std::vector<Vec> e, pe;
    for (std::size_t i = 0; i < n; ++i) {
        e.push_back(Vec::unit(n, i));
        pe.push_back(P.pi.col(i));
    }
    const Vec& Z = P.comp;
    for (std::size_t i = 0; i < n && rep.binary_rule_ok; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec xy = binary(B, e[i], e[j]);
            Vec d = P.pi * xy;
            d -= binary(B, pe[i], e[j]);
            d -= binary(B, e[i], pe[j]);
            d -= semi(B, Z, e[i], e[j]);
            d -= binary(B, xy, Z);
            if (!d.is_zero()) {
                rep.binary_rule_ok = false;
                rep.binary_witness = std::vector<std::size_t>{i, j};
                break;
            }
        }
    for (std::size_t i = 0; i < n && rep.ternary_rule_ok; ++i)
        for (std::size_t j = 0; j < n && rep.ternary_rule_ok; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec d = P.pi * ternary(B, e[i], e[j], e[k]);
                d -= ternary(B, pe[i], e[j], e[k]);
                d -= ternary(B, e[i], pe[j], e[k]);
                d -= ternary(B, e[i], e[j], pe[k]);
                if (!d.is_zero()) {
                    rep.ternary_rule_ok = false;
                    rep.ternary_witness = std::vector<std::size_t>{i, j, k};
                    break;
                }
            }
    return rep;
}

PairEndo pair_bracket(const BolAlgebra& B, const PairEndo& P, const PairEndo& Q) {
    PairEndo r;
    r.pi = P.pi * Q.pi - Q.pi * P.pi;
    r.comp = binary(B, P.comp, Q.comp) + P.pi * Q.comp - Q.pi * P.comp;
    return r;
}

PairEndo inner_pair(const BolAlgebra& B, const Vec& x, const Vec& y) {
    return PairEndo{Scalar(-1) * left_op(B, x, y), binary(B, x, y)};
}

namespace {

Subspace h_span(const BolAlgebra& B) {
    const std::size_t n = B.dim();
    const std::size_t p = n * n + n;
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) gens.push_back(inner_pair(B, Vec::unit(n, i), Vec::unit(n, j)).flatten());
    Subspace H = span(gens, p);
    for (;;) {
        std::vector<Vec> all = H.basis();
        const std::size_t d = H.dim();
        for (std::size_t a = 0; a < d; ++a) {
            const PairEndo Pa = PairEndo::unflatten(H.basis()[a], n);
            for (std::size_t b = a + 1; b < d; ++b)
                all.push_back(pair_bracket(B, Pa, PairEndo::unflatten(H.basis()[b], n)).flatten());
        }
        Subspace next = span(all, p);
        if (next.dim() == d) return H;
        H = std::move(next);
    }
}

}  // namespace

std::vector<PairEndo> h_closure(const BolAlgebra& B) {
    const Subspace H = h_span(B);
    std::vector<PairEndo> out;
    for (std::size_t t = 0; t < H.dim(); ++t) {
        PairEndo P = PairEndo::unflatten(H.basis()[t], B.dim());
        if (!is_pseudo_derivation(B, P).pass()) {
            std::ostringstream os;
            os << "h_closure: basis element " << t << " is not a pseudo-derivation";
            throw Error(ErrorKind::FatalInconsistency, os.str());
        }
        out.push_back(std::move(P));
    }
    return out;
}

Subspace EnvelopingLie::b_part() const {
    std::vector<Vec> v;
    for (std::size_t i = 0; i < b_dim; ++i) v.push_back(Vec::unit(lie.dim(), i));
    return span(v, lie.dim());
}

Subspace EnvelopingLie::h_part() const {
    std::vector<Vec> v;
    for (std::size_t t = 0; t < h_dim(); ++t) v.push_back(Vec::unit(lie.dim(), b_dim + t));
    return span(v, lie.dim());
}

EnvelopingLie build_envelope(const BolAlgebra& B) {
    const std::size_t n = B.dim();
    const Subspace H = h_span(B);
    const std::size_t N = H.dim();
    const std::size_t m = n + N;

    EnvelopingLie E;
    E.b_dim = n;
    for (std::size_t t = 0; t < N; ++t) E.h_basis.push_back(PairEndo::unflatten(H.basis()[t], n));
    for (std::size_t t = 0; t < N; ++t)
        if (!is_pseudo_derivation(B, E.h_basis[t]).pass())
            throw Error(ErrorKind::FatalInconsistency, "envelope: h basis element is not a pseudo-derivation");

    auto hc = [&](const PairEndo& P) {
        auto c = H.coordinates(P.flatten());
        if (!c) throw Error(ErrorKind::FatalInconsistency, "envelope: pair outside h");
        return *c;
    };

    std::vector<std::string> labels = B.labels();
    for (std::size_t t = 0; t < N; ++t) labels.push_back("h" + std::to_string(t));
    E.lie = LieAlgebra(m, labels, B.name().empty() ? std::string() : "env(" + B.name() + ")");
    auto put = [&](std::size_t a, std::size_t b, const Vec& bpart, const Vec& hpart) {
        for (std::size_t k = 0; k < n; ++k) E.lie.set_bracket_raw(a, b, k, bpart[k]);
        for (std::size_t t = 0; t < N; ++t) E.lie.set_bracket_raw(a, b, n + t, hpart[t]);
    };

    std::vector<Vec> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(Vec::unit(n, i));

    E.Dtau.assign(n * n * N, Scalar(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec d = hc(inner_pair(B, e[i], e[j]));
            for (std::size_t t = 0; t < N; ++t) E.Dtau[(i * n + j) * N + t] = d[t];
            put(i, j, binary(B, e[i], e[j]), d);
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < N; ++t) {
            const PairEndo& P = E.h_basis[t];
            const Vec bpart = P.pi * e[i] - binary(B, e[i], P.comp);
            const Vec hpart = -hc(inner_pair(B, e[i], P.comp));
            put(i, n + t, bpart, hpart);
            put(n + t, i, -bpart, -hpart);
        }
    for (std::size_t s = 0; s < N; ++s)
        for (std::size_t t = 0; t < N; ++t) {
            const PairEndo& P = E.h_basis[s];
            const PairEndo& Q = E.h_basis[t];
            put(n + s, n + t, Vec(n), hc(inner_pair(B, P.comp, Q.comp) - pair_bracket(B, P, Q)));
        }

    E.K.assign(N * n * n, Scalar(0));
    for (std::size_t t = 0; t < N; ++t)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) E.K[(t * n + i) * n + j] = E.lie.C(n + t, i, j);

    auto& V = E.verification;
    const JacobiReport jr = jacobi_check(E.lie);
    V.jacobi_ok = jr.pass;
    if (jr.witness) V.jacobi_witness = std::vector<std::size_t>(jr.witness->begin(), jr.witness->end());

    V.projection_ok = true;
    for (std::size_t i = 0; i < n && V.projection_ok; ++i)
        for (std::size_t j = 0; j < n && V.projection_ok; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (E.lie.C(i, j, k) != B.T(i, j, k)) {
                    V.projection_ok = false;
                    V.projection_witness = std::vector<std::size_t>{i, j};
                    break;
                }

    V.recovery_ok = true;
    for (std::size_t i = 0; i < n && V.recovery_ok; ++i)
        for (std::size_t j = 0; j < n && V.recovery_ok; ++j) {
            const Vec xy = E.lie.bracket(Vec::unit(m, i), Vec::unit(m, j));
            for (std::size_t k = 0; k < n; ++k) {
                const Vec r = E.lie.bracket(xy, Vec::unit(m, k));
                bool ok = true;
                for (std::size_t l = 0; l < m && ok; ++l) ok = r[l] == (l < n ? B.R(i, j, k, l) : Scalar(0));
                if (!ok) {
                    V.recovery_ok = false;
                    V.recovery_witness = std::vector<std::size_t>{i, j, k};
                    break;
                }
            }
        }
    return E;
}

EnvelopingLie envelope(const BolAlgebra& B) {
    EnvelopingLie E = build_envelope(B);
    const auto& V = E.verification;
    if (!V.pass()) {
        std::ostringstream os;
        os << "envelope rejected:";
        if (!V.jacobi_ok) os << " jacobi fails";
        if (!V.projection_ok) os << " projection fails";
        if (!V.recovery_ok) os << " recovery fails";
        throw Error(ErrorKind::FatalInconsistency, os.str());
    }
    return E;
}

IdealExtensionReport ideal_extension(const BolAlgebra& B, const EnvelopingLie& E, const Subspace& V) {
    if (V.ambient() != B.dim()) throw Error(ErrorKind::DimensionMismatch, "ideal_extension: ambient mismatch");
    if (!is_ideal(B, V, IdealMode::Def2)) throw Error(ErrorKind::NotAnIdeal, "ideal_extension: V is not an ideal");
    const std::size_t m = E.lie.dim();
    std::vector<Vec> lifted;
    for (const auto& v : V.basis()) {
        Vec w(m);
        for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i];
        lifted.push_back(std::move(w));
    }
    const Subspace Vg = span(lifted, m);
    IdealExtensionReport rep;
    rep.W = sum(Vg, lie_bracket_span(E.lie, Vg, E.b_part()));
    const Subspace gen = lie_generated_subalgebra(E.lie, rep.W);
    rep.ideal_of_generated = rep.W.contains(lie_bracket_span(E.lie, rep.W, gen));
    rep.ideal_of_envelope = lie_is_ideal(E.lie, rep.W);
    rep.bol_solvable = is_solvable(B, V);
    rep.lie_solvable = lie_derived_series_unchecked(E.lie, rep.W).solvable;
    rep.implication_holds = !rep.bol_solvable || rep.lie_solvable;
    return rep;
}

LtsEmbeddingReport lts_embedding_check(const BolAlgebra& B, const EnvelopingLie& E) {
    if (!B.binary_is_zero()) throw Error(ErrorKind::NonzeroBinary, "lts_embedding_check: binary product is nonzero");
    const std::size_t n = B.dim();
    const std::size_t m = E.lie.dim();
    const std::size_t N = E.h_dim();
    std::vector<Vec> h_vecs;
    for (std::size_t t = 0; t < N; ++t) h_vecs.push_back(E.h_basis[t].flatten());
    const Subspace H = span(h_vecs, n * n + n);
    // D(x,y) as an element of G.
    auto D = [&](const Vec& x, const Vec& y) {
        const auto c = H.coordinates(inner_pair(B, x, y).flatten());
        if (!c) throw Error(ErrorKind::FatalInconsistency, "lts_embedding_check: inner pair outside h");
        Vec g(m);
        for (std::size_t t = 0; t < N; ++t) g[n + t] = (*c)[t];
        return g;
    };
    auto lift = [&](const Vec& x) {
        Vec g(m);
        for (std::size_t i = 0; i < n; ++i) g[i] = x[i];
        return g;
    };
    auto semi = [&](const Vec& z, const Vec& x, const Vec& y) { return -ternary(B, x, y, z); };

    LtsEmbeddingReport rep;
    rep.bracket_ok = rep.action_ok = rep.derivation_ok = true;
    std::vector<Vec> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(Vec::unit(n, i));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (rep.bracket_ok && E.lie.bracket(lift(e[x]), lift(e[y])) != D(e[x], e[y])) {
                rep.bracket_ok = false;
                if (!rep.witness) rep.witness = std::vector<std::size_t>{x, y};
            }
            for (std::size_t z = 0; z < n; ++z)
                if (rep.action_ok && E.lie.bracket(lift(e[x]), D(e[y], e[z])) != lift(semi(e[x], e[y], e[z]))) {
                    rep.action_ok = false;
                    if (!rep.witness) rep.witness = std::vector<std::size_t>{x, y, z};
                }
        }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t u = 0; u < n && rep.derivation_ok; ++u)
                for (std::size_t v = 0; v < n; ++v) {
                    const Vec lhs = E.lie.bracket(D(e[x], e[y]), D(e[u], e[v]));
                    const Vec rhs = D(semi(e[x], e[u], e[v]), e[y]) + D(e[x], semi(e[y], e[u], e[v]));
                    if (lhs != rhs) {
                        rep.derivation_ok = false;
                        if (!rep.witness) rep.witness = std::vector<std::size_t>{x, y, u, v};
                        break;
                    }
                }
    return rep;
}

CorollaryReport corollary_solvability_check(const BolAlgebra& B) {
    CorollaryReport rep;
    rep.bol_solvable = is_solvable(B, whole(B));
    rep.lie_solvable = lie_is_solvable(envelope(B).lie);
    rep.implication_holds = !rep.bol_solvable || rep.lie_solvable;
    return rep;
}

}  // namespace bol
