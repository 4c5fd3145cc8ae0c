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

#include <sstream>

#include "bol/error.hpp"

namespace bol {

namespace {

std::string tuple_string(const std::vector<std::size_t>& t) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << ')';
    return os.str();
}

void require_ambient(const BolAlgebra& B, const Subspace& S, const char* what) {
    if (S.ambient() != B.dim()) {
        std::ostringstream os;
        os << what << ": subspace of ambient " << S.ambient() << " in algebra of dim " << B.dim();
        throw Error(ErrorKind::DimensionMismatch, os.str());
    }
}

void require_vec(const BolAlgebra& B, const Vec& v, const char* what) {
    if (v.size() != B.dim()) {
        std::ostringstream os;
        os << what << ": vector of length " << v.size() << " in algebra of dim " << B.dim();
        throw Error(ErrorKind::DimensionMismatch, os.str());
    }
}

}  // namespace

BolAlgebra::BolAlgebra(std::size_t n, std::vector<std::string> labels, std::string name)
    : n_(n), labels_(std::move(labels)), name_(std::move(name)), t_(n * n * n), r_(n * n * n * n) {
    if (labels_.empty())
        for (std::size_t i = 0; i < n; ++i) labels_.push_back("e" + std::to_string(i));
    if (labels_.size() != n)
        throw Error(ErrorKind::DimensionMismatch, "label count does not match dimension");
}

void BolAlgebra::check_index(std::size_t i) const {
    if (i >= n_) {
        std::ostringstream os;
        os << "index " << i << " out of range for dimension " << n_;
        throw Error(ErrorKind::DimensionMismatch, os.str());
    }
}

void BolAlgebra::set_binary(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
    if (i == j && sgn(v) != 0)
        throw Error(ErrorKind::PreconditionViolation, "binary product e_i.e_i must vanish");
    set_binary_raw(i, j, k, v);
    set_binary_raw(j, i, k, -v);
}

void BolAlgebra::set_ternary(std::size_t i, std::size_t j, std::size_t k, std::size_t l, const Scalar& v) {
    if (i == j && sgn(v) != 0)
        throw Error(ErrorKind::PreconditionViolation, "ternary (e_i,e_i,.) must vanish");
    set_ternary_raw(i, j, k, l, v);
    set_ternary_raw(j, i, k, l, -v);
}

void BolAlgebra::set_binary_raw(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
    check_index(i), check_index(j), check_index(k);
    t_[(i * n_ + j) * n_ + k] = v;
}

void BolAlgebra::set_ternary_raw(std::size_t i, std::size_t j, std::size_t k, std::size_t l, const Scalar& v) {
    check_index(i), check_index(j), check_index(k), check_index(l);
    r_[((i * n_ + j) * n_ + k) * n_ + l] = v;
}

bool BolAlgebra::binary_is_zero() const {
    for (const auto& s : t_)
        if (sgn(s) != 0) return false;
    return true;
}

bool BolAlgebra::ternary_is_zero() const {
    for (const auto& s : r_)
        if (sgn(s) != 0) return false;
    return true;
}

Vec binary(const BolAlgebra& B, const Vec& x, const Vec& y) {
    require_vec(B, x, "binary");
    require_vec(B, y, "binary");
    const std::size_t n = B.dim();
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(y[j]) == 0) continue;
            const Scalar c = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(B.T(i, j, k)) != 0) out[k] += c * B.T(i, j, k);
        }
    }
    return out;
}

Vec ternary(const BolAlgebra& B, const Vec& x, const Vec& y, const Vec& z) {
    require_vec(B, x, "ternary");
    require_vec(B, y, "ternary");
    require_vec(B, z, "ternary");
    const std::size_t n = B.dim();
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(y[j]) == 0) continue;
            const Scalar cij = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) {
                if (sgn(z[k]) == 0) continue;
                const Scalar c = cij * z[k];
                for (std::size_t l = 0; l < n; ++l)
                    if (sgn(B.R(i, j, k, l)) != 0) out[l] += c * B.R(i, j, k, l);
            }
        }
    }
    return out;
}

Mat left_op(const BolAlgebra& B, const Vec& x, const Vec& y) {
    const std::size_t n = B.dim();
    Mat m(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        const Vec col = ternary(B, x, y, Vec::unit(n, c));
        for (std::size_t r = 0; r < n; ++r) m(r, c) = col[r];
    }
    return m;
}

Mat right_mult(const BolAlgebra& B, const Vec& y) {
    const std::size_t n = B.dim();
    Mat m(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        const Vec col = binary(B, Vec::unit(n, c), y);
        for (std::size_t r = 0; r < n; ++r) m(r, c) = col[r];
    }
    return m;
}

bool AxiomReport::pass() const {
    for (const auto& s : identities)
        if (!s.pass) return false;
    return true;
}

namespace {

void record(IdentityStatus& st, std::vector<std::size_t> tuple, Vec defect) {
    if (defect.is_zero()) return;
    st.pass = false;
    if (st.failures++ == 0) st.witness = Witness{std::move(tuple), std::move(defect)};
}

}  // namespace

AxiomReport check_axioms(const BolAlgebra& B) {
    const std::size_t n = B.dim();
    AxiomReport rep;
    rep.identities[0] = {"A1", "x.y = -y.x", true, 0, {}};
    rep.identities[1] = {"A2", "(x,y,z) = -(y,x,z)", true, 0, {}};
    rep.identities[2] = {"A3", "(x,y,z) + (y,z,x) + (z,x,y) = 0", true, 0, {}};
    rep.identities[3] = {"A4", "(x,y,z).w - (x,y,w).z + (z,w,x.y) - (x,y,z.w) + (x.y).(z.w) = 0", true, 0, {}};
    rep.identities[4] = {"A5", "(x,y,(z,w,u)) = ((x,y,z),w,u) + (z,(x,y,w),u) + (z,w,(x,y,u))", true, 0, {}};

    std::vector<Vec> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(Vec::unit(n, i));
    auto bin = [&](std::size_t i, std::size_t j) {
        Vec v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = B.T(i, j, k);
        return v;
    };
    auto ter = [&](std::size_t i, std::size_t j, std::size_t k) {
        Vec v(n);
        for (std::size_t l = 0; l < n; ++l) v[l] = B.R(i, j, k, l);
        return v;
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) record(rep.identities[0], {i, j}, bin(i, j) + bin(j, i));

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) record(rep.identities[1], {i, j, k}, ter(i, j, k) + ter(j, i, k));

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                record(rep.identities[2], {i, j, k}, ter(i, j, k) + ter(j, k, i) + ter(k, i, j));

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const Vec xy = bin(x, y);
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t w = 0; w < n; ++w) {
                    Vec d = binary(B, ter(x, y, z), e[w]);
                    d -= binary(B, ter(x, y, w), e[z]);
                    d += ternary(B, e[z], e[w], xy);
                    const Vec zw = bin(z, w);
                    d -= ternary(B, e[x], e[y], zw);
                    d += binary(B, xy, zw);
                    record(rep.identities[3], {x, y, z, w}, std::move(d));
                }
        }

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t w = 0; w < n; ++w)
                    for (std::size_t u = 0; u < n; ++u) {
                        Vec d = ternary(B, e[x], e[y], ter(z, w, u));
                        d -= ternary(B, ter(x, y, z), e[w], e[u]);
                        d -= ternary(B, e[z], ter(x, y, w), e[u]);
                        d -= ternary(B, e[z], e[w], ter(x, y, u));
                        record(rep.identities[4], {x, y, z, w, u}, std::move(d));
                    }
    return rep;
}

Subspace whole(const BolAlgebra& B) { return Subspace::full(B.dim()); }

Subspace prod_span(const BolAlgebra& B, const Subspace& U, const Subspace& V) {
    require_ambient(B, U, "prod_span");
    require_ambient(B, V, "prod_span");
    std::vector<Vec> out;
    for (const auto& u : U.basis())
        for (const auto& v : V.basis()) out.push_back(binary(B, u, v));
    return span(out, B.dim());
}

Subspace tri_span(const BolAlgebra& B, const Subspace& U, const Subspace& V, const Subspace& W) {
    require_ambient(B, U, "tri_span");
    require_ambient(B, V, "tri_span");
    require_ambient(B, W, "tri_span");
    std::vector<Vec> out;
    for (const auto& u : U.basis())
        for (const auto& v : V.basis())
            for (const auto& w : W.basis()) out.push_back(ternary(B, u, v, w));
    return span(out, B.dim());
}

bool is_subsystem(const BolAlgebra& B, const Subspace& V) {
    return V.contains(prod_span(B, V, V)) && V.contains(tri_span(B, V, V, V));
}

bool is_ideal(const BolAlgebra& B, const Subspace& V, IdealMode mode) {
    const Subspace all = whole(B);
    if (mode == IdealMode::Def2) return V.contains(prod_span(B, V, all)) && V.contains(tri_span(B, V, all, all));
    return is_subsystem(B, V) && V.contains(sum(prod_span(B, V, V), tri_span(B, V, V, all)));
}

Subspace ideal_closure(const BolAlgebra& B, const Subspace& S) {
    require_ambient(B, S, "ideal_closure");
    const Subspace all = whole(B);
    Subspace cur = S;
    for (;;) {
        Subspace next = sum(cur, sum(prod_span(B, cur, all), tri_span(B, cur, all, all)));
        if (next.dim() == cur.dim()) return cur;
        cur = std::move(next);
    }
}

Subspace center(const BolAlgebra& B) {
    const std::size_t n = B.dim();
    std::vector<Vec> rows;
    for (std::size_t b = 0; b < n; ++b) {
        // x -> e_b . x
        for (std::size_t k = 0; k < n; ++k) {
            Vec r(n);
            for (std::size_t j = 0; j < n; ++j) r[j] = B.T(b, j, k);
            rows.push_back(std::move(r));
        }
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t l = 0; l < n; ++l) {
                Vec r(n);
                for (std::size_t j = 0; j < n; ++j) r[j] = B.R(b, c, j, l);
                rows.push_back(std::move(r));
            }
    }
    return kernel(Mat::from_rows(rows, n));
}

BolAlgebra quotient(const BolAlgebra& B, const Subspace& I) {
    require_ambient(B, I, "quotient");
    if (!is_ideal(B, I, IdealMode::Def2)) throw Error(ErrorKind::NotAnIdeal, "quotient: subspace is not an ideal");
    const std::size_t n = B.dim();
    // Every product with a factor in I must land in I for cosets to multiply.
    for (std::size_t a = 0; a < I.dim(); ++a) {
        const Vec& v = I.basis()[a];
        for (std::size_t i = 0; i < n; ++i) {
            const Vec ei = Vec::unit(n, i);
            auto fail = [&](const char* where, std::vector<std::size_t> t) {
                throw Error(ErrorKind::IllDefinedQuotient,
                            std::string("quotient: ") + where + " leaves the ideal at " + tuple_string(t));
            };
            if (!I.contains(binary(B, ei, v))) fail("e_i.v", {i, a});
            for (std::size_t j = 0; j < n; ++j) {
                const Vec ej = Vec::unit(n, j);
                if (!I.contains(ternary(B, v, ei, ej))) fail("(v,e_i,e_j)", {a, i, j});
                if (!I.contains(ternary(B, ei, v, ej))) fail("(e_i,v,e_j)", {i, a, j});
                if (!I.contains(ternary(B, ei, ej, v))) fail("(e_i,e_j,v)", {i, j, a});
            }
        }
    }
    const auto fc = I.free_columns();
    const std::size_t m = fc.size();
    std::vector<std::string> labels;
    for (auto c : fc) labels.push_back(B.labels()[c]);
    BolAlgebra Q(m, labels, B.name().empty() ? std::string() : B.name() + "/I");
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            const Vec p = I.reduce(binary(B, Vec::unit(n, fc[a]), Vec::unit(n, fc[b])));
            for (std::size_t c = 0; c < m; ++c) Q.set_binary_raw(a, b, c, p[fc[c]]);
            for (std::size_t d = 0; d < m; ++d) {
                const Vec t = I.reduce(ternary(B, Vec::unit(n, fc[a]), Vec::unit(n, fc[b]), Vec::unit(n, fc[d])));
                for (std::size_t c = 0; c < m; ++c) Q.set_ternary_raw(a, b, d, c, t[fc[c]]);
            }
        }
    return Q;
}

BolAlgebra direct_sum(const BolAlgebra& A, const BolAlgebra& B) {
    const std::size_t p = A.dim(), q = B.dim(), n = p + q;
    std::vector<std::string> labels = A.labels();
    labels.insert(labels.end(), B.labels().begin(), B.labels().end());
    std::string name;
    if (!A.name().empty() && !B.name().empty()) name = A.name() + "+" + B.name();
    BolAlgebra S(n, labels, name);
    auto copy = [&](const BolAlgebra& X, std::size_t off) {
        const std::size_t m = X.dim();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t k = 0; k < m; ++k) {
                    S.set_binary_raw(off + i, off + j, off + k, X.T(i, j, k));
                    for (std::size_t l = 0; l < m; ++l)
                        S.set_ternary_raw(off + i, off + j, off + k, off + l, X.R(i, j, k, l));
                }
    };
    copy(A, 0);
    copy(B, p);
    return S;
}

BolAlgebra restrict(const BolAlgebra& B, const Subspace& I) {
    require_ambient(B, I, "restrict");
    const std::size_t m = I.dim();
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < m; ++a) {
        const Vec& v = I.basis()[a];
        const std::size_t p = I.pivots()[a];
        labels.push_back(v == Vec::unit(B.dim(), p) ? B.labels()[p] : "v" + std::to_string(a));
    }
    BolAlgebra S(m, labels, B.name());
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            const auto p = I.coordinates(binary(B, I.basis()[a], I.basis()[b]));
            if (!p) throw Error(ErrorKind::NotASubsystem, "restrict: binary product leaves the subspace");
            for (std::size_t c = 0; c < m; ++c) S.set_binary_raw(a, b, c, (*p)[c]);
            for (std::size_t d = 0; d < m; ++d) {
                const auto t = I.coordinates(ternary(B, I.basis()[a], I.basis()[b], I.basis()[d]));
                if (!t) throw Error(ErrorKind::NotASubsystem, "restrict: ternary product leaves the subspace");
                for (std::size_t c = 0; c < m; ++c) S.set_ternary_raw(a, b, d, c, (*t)[c]);
            }
        }
    return S;
}

BolAlgebra change_basis(const BolAlgebra& B, const Mat& P) {
    const std::size_t n = B.dim();
    if (P.rows() != n || P.cols() != n)
        throw Error(ErrorKind::DimensionMismatch, "change_basis: matrix shape does not match dimension");
    const auto inv = inverse(P);
    if (!inv) throw Error(ErrorKind::PreconditionViolation, "change_basis: singular matrix");
    std::vector<Vec> f;
    for (std::size_t a = 0; a < n; ++a) f.push_back(P.col(a));
    BolAlgebra S(n, {}, B.name());
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const Vec p = *inv * binary(B, f[a], f[b]);
            for (std::size_t c = 0; c < n; ++c) S.set_binary_raw(a, b, c, p[c]);
            for (std::size_t d = 0; d < n; ++d) {
                const Vec t = *inv * ternary(B, f[a], f[b], f[d]);
                for (std::size_t c = 0; c < n; ++c) S.set_ternary_raw(a, b, d, c, t[c]);
            }
        }
    return S;
}

Subspace first_summand(std::size_t dim_a, std::size_t dim_b) {
    std::vector<Vec> v;
    for (std::size_t i = 0; i < dim_a; ++i) v.push_back(Vec::unit(dim_a + dim_b, i));
    return span(v, dim_a + dim_b);
}

Subspace second_summand(std::size_t dim_a, std::size_t dim_b) {
    std::vector<Vec> v;
    for (std::size_t i = 0; i < dim_b; ++i) v.push_back(Vec::unit(dim_a + dim_b, dim_a + i));
    return span(v, dim_a + dim_b);
}

}  // namespace bol
