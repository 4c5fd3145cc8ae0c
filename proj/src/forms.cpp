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

#include "bol/forms.hpp"

#include "bol/envelope.hpp"
#include "bol/error.hpp"
#include "bol/lie.hpp"

namespace bol {

const char* to_string(Provenance p) noexcept {
    switch (p) {
        case Provenance::Prop1: return "prop1";
        case Provenance::EnvelopeRestriction: return "envelope-restriction";
        case Provenance::Killing: return "killing";
        case Provenance::User: return "user";
    }
    return "unknown";
}

const char* to_string(InvarianceVariant v) noexcept {
    return v == InvarianceVariant::Skew ? "skew" : "paper";
}

BilinearForm BilinearForm::user(Mat gram) {
    if (gram.rows() != gram.cols()) throw Error(ErrorKind::DimensionMismatch, "bilinear form: gram is not square");
    const bool sym = gram == gram.transpose();
    return BilinearForm{std::move(gram), sym, Provenance::User};
}

Scalar BilinearForm::operator()(const Vec& x, const Vec& y) const {
    if (x.size() != dim() || y.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "bilinear form: length");
    return dot(x, gram * y);
}

namespace {

void require_form(const BolAlgebra& B, const BilinearForm& b, const char* what) {
    if (b.dim() != B.dim() || b.gram.cols() != B.dim())
        throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": form and algebra dimensions differ");
}

}  // namespace

InvarianceReport invariance_check(const BolAlgebra& B, const BilinearForm& b, InvarianceVariant variant) {
    require_form(B, b, "invariance_check");
    const std::size_t n = B.dim();
    const Scalar sign = variant == InvarianceVariant::Skew ? Scalar(1) : Scalar(-1);
    InvarianceReport rep;
    rep.variant = variant;
    std::vector<Vec> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(Vec::unit(n, i));
    for (std::size_t x = 0; x < n && rep.binary_ok; ++x)
        for (std::size_t y = 0; y < n && rep.binary_ok; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (b(binary(B, e[x], e[y]), e[z]) != b(e[x], binary(B, e[y], e[z]))) {
                    rep.binary_ok = false;
                    rep.binary_witness = std::vector<std::size_t>{x, y, z};
                    break;
                }
    for (std::size_t x = 0; x < n && rep.ternary_ok; ++x)
        for (std::size_t y = 0; y < n && rep.ternary_ok; ++y)
            for (std::size_t z = 0; z < n && rep.ternary_ok; ++z)
                for (std::size_t t = 0; t < n; ++t)
                    if (sgn(b(ternary(B, e[x], e[y], e[z]), e[t]) + sign * b(e[z], ternary(B, e[x], e[y], e[t]))) != 0) {
                        rep.ternary_ok = false;
                        rep.ternary_witness = std::vector<std::size_t>{x, y, z, t};
                        break;
                    }
    return rep;
}

BilinearForm killing_ricci_prop1(const BolAlgebra& B) {
    const std::size_t n = B.dim();
    Mat g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar s = 0;
            for (std::size_t k = 0; k < n; ++k) s += B.R(k, j, i, k) + B.R(k, i, j, k);
            g(i, j) = s;
        }
    return BilinearForm{std::move(g), true, Provenance::Prop1};
}

BilinearForm killing_ricci_env(const BolAlgebra& B) {
    const EnvelopingLie E = envelope(B);
    const BilinearForm k = killing(E.lie);
    const std::size_t n = B.dim();
    Mat g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = k.gram(i, j);
    return BilinearForm{std::move(g), true, Provenance::EnvelopeRestriction};
}

KillingRicciComparison compare_killing_ricci(const BolAlgebra& B) {
    KillingRicciComparison c;
    c.prop1 = killing_ricci_prop1(B).gram;
    c.env = killing_ricci_env(B).gram;
    c.difference = c.prop1 - c.env;
    c.equal = c.difference.is_zero();
    return c;
}

Subspace left_perp(const BilinearForm& b, const Subspace& S) {
    if (S.ambient() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "left_perp: ambient mismatch");
    std::vector<Vec> rows;
    for (const auto& s : S.basis()) rows.push_back(b.gram * s);
    return kernel(Mat::from_rows(rows, b.dim()));
}

Subspace right_perp(const BilinearForm& b, const Subspace& S) {
    if (S.ambient() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "right_perp: ambient mismatch");
    const Mat gt = b.gram.transpose();
    std::vector<Vec> rows;
    for (const auto& s : S.basis()) rows.push_back(gt * s);
    return kernel(Mat::from_rows(rows, b.dim()));
}

bool is_nondegenerate(const BilinearForm& b) { return rank(b.gram) == b.dim(); }

Prop2Report prop2_check(const BolAlgebra& B, const BilinearForm& b, InvarianceVariant variant) {
    require_form(B, b, "prop2_check");
    Prop2Report rep;
    if (b.gram != b.gram.transpose())
        rep.violation = "form is not symmetric";
    else if (!is_nondegenerate(b))
        rep.violation = "form is degenerate";
    else if (!invariance_check(B, b, variant).pass())
        rep.violation = std::string("form is not invariant (") + to_string(variant) + " variant)";
    rep.preconditions_ok = rep.violation.empty();
    rep.center = center(B);
    rep.left = left_perp(b, rep.center);
    rep.right = right_perp(b, rep.center);
    rep.product = prod_span(B, whole(B), whole(B));
    rep.equal = rep.left == rep.product && rep.right == rep.product;
    rep.derived = sum(rep.product, tri_span(B, whole(B), whole(B), whole(B)));
    rep.equal_derived = rep.left == rep.derived && rep.right == rep.derived;
    return rep;
}

std::vector<Mat> invariant_symmetric_forms(const BolAlgebra& B, InvarianceVariant variant) {
    const std::size_t n = B.dim();
    // Unknowns g(a,b) for a <= b.
    std::vector<std::pair<std::size_t, std::size_t>> idx;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = a; c < n; ++c) idx.emplace_back(a, c);
    const std::size_t u = idx.size();
    auto coeff = [&](const Vec& x, const Vec& y) {
        Vec r(u);
        for (std::size_t k = 0; k < u; ++k) {
            const auto [a, c] = idx[k];
            r[k] = x[a] * y[c];
            if (a != c) r[k] += x[c] * y[a];
        }
        return r;
    };
    const Scalar sign = variant == InvarianceVariant::Skew ? Scalar(1) : Scalar(-1);
    std::vector<Vec> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(Vec::unit(n, i));
    std::vector<Vec> rows;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                Vec r = coeff(binary(B, e[x], e[y]), e[z]) - coeff(e[x], binary(B, e[y], e[z]));
                if (!r.is_zero()) rows.push_back(std::move(r));
                for (std::size_t t = 0; t < n; ++t) {
                    Vec s = coeff(ternary(B, e[x], e[y], e[z]), e[t]);
                    s.add_scaled(sign, coeff(e[z], ternary(B, e[x], e[y], e[t])));
                    if (!s.is_zero()) rows.push_back(std::move(s));
                }
            }
    const Subspace sol = kernel(Mat::from_rows(rows, u));
    std::vector<Mat> out;
    for (const auto& v : sol.basis()) {
        Mat g(n, n);
        for (std::size_t k = 0; k < u; ++k) {
            const auto [a, c] = idx[k];
            g(a, c) = v[k];
            g(c, a) = v[k];
        }
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace bol
