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

#include "bol/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

#include "bol/error.hpp"

namespace bol {

namespace {

void require_same(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        std::ostringstream os;
        os << what << ": dimension mismatch (" << a << " vs " << b << ")";
        throw Error(ErrorKind::DimensionMismatch, os.str());
    }
}

/// In-place RREF; returns pivot columns.
std::vector<std::size_t> rref_in_place(Mat& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        const Scalar inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            const Scalar f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

// ---------------------------------------------------------------- Vec

Vec Vec::unit(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = 1;
    return v;
}

bool Vec::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

Vec& Vec::operator+=(const Vec& o) {
    require_same(size(), o.size(), "Vec +");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Vec& Vec::operator-=(const Vec& o) {
    require_same(size(), o.size(), "Vec -");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Vec& Vec::operator*=(const Scalar& s) {
    for (auto& x : c_) x *= s;
    return *this;
}

Vec& Vec::add_scaled(const Scalar& s, const Vec& o) {
    require_same(size(), o.size(), "Vec add_scaled");
    if (sgn(s) == 0) return *this;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (sgn(o.c_[i]) != 0) c_[i] += s * o.c_[i];
    return *this;
}

Vec operator+(Vec a, const Vec& b) { return a += b; }
Vec operator-(Vec a, const Vec& b) { return a -= b; }
Vec operator-(Vec a) { return a *= Scalar(-1); }
Vec operator*(const Scalar& s, Vec v) { return v *= s; }

Scalar dot(const Vec& a, const Vec& b) {
    require_same(a.size(), b.size(), "dot");
    Scalar s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// ---------------------------------------------------------------- Mat

Mat::Mat(std::initializer_list<std::initializer_list<Scalar>> rows) : r_(rows.size()) {
    c_ = r_ ? rows.begin()->size() : 0;
    a_.reserve(r_ * c_);
    for (const auto& row : rows) {
        require_same(row.size(), c_, "Mat literal");
        a_.insert(a_.end(), row.begin(), row.end());
    }
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Mat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        require_same(rows[i].size(), cols, "Mat::from_rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
    Mat m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        require_same(cols[j].size(), rows, "Mat::from_columns");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Vec Mat::row(std::size_t i) const {
    Vec v(c_);
    for (std::size_t j = 0; j < c_; ++j) v[j] = (*this)(i, j);
    return v;
}

Vec Mat::col(std::size_t j) const {
    Vec v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

Mat Mat::transpose() const {
    Mat t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Scalar Mat::trace() const {
    require_same(r_, c_, "trace");
    Scalar s = 0;
    for (std::size_t i = 0; i < r_; ++i) s += (*this)(i, i);
    return s;
}

bool Mat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

Vec Mat::apply(const Vec& v) const {
    require_same(c_, v.size(), "Mat::apply");
    Vec out(r_);
    for (std::size_t j = 0; j < c_; ++j) {
        if (sgn(v[j]) == 0) continue;
        for (std::size_t i = 0; i < r_; ++i)
            if (sgn((*this)(i, j)) != 0) out[i] += (*this)(i, j) * v[j];
    }
    return out;
}

Mat& Mat::operator+=(const Mat& o) {
    require_same(r_, o.r_, "Mat +");
    require_same(c_, o.c_, "Mat +");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    require_same(r_, o.r_, "Mat -");
    require_same(c_, o.c_, "Mat -");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

Mat& Mat::operator*=(const Scalar& s) {
    for (auto& x : a_) x *= s;
    return *this;
}

Mat operator+(Mat a, const Mat& b) { return a += b; }
Mat operator-(Mat a, const Mat& b) { return a -= b; }
Mat operator*(const Scalar& s, Mat m) { return m *= s; }
Vec operator*(const Mat& m, const Vec& v) { return m.apply(v); }

Mat operator*(const Mat& a, const Mat& b) {
    require_same(a.cols(), b.rows(), "Mat *");
    Mat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (sgn(b(k, j)) != 0) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

Mat rref(const Mat& m) {
    Mat r = m;
    rref_in_place(r);
    return r;
}

std::size_t rank(const Mat& m) {
    Mat r = m;
    return rref_in_place(r).size();
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::zero(std::size_t ambient) { return span({}, ambient); }

Subspace Subspace::full(std::size_t ambient) {
    std::vector<Vec> e;
    for (std::size_t i = 0; i < ambient; ++i) e.push_back(Vec::unit(ambient, i));
    return span(e, ambient);
}

Vec Subspace::reduce(const Vec& v) const {
    require_same(v.size(), ambient_, "Subspace::reduce");
    Vec r = v;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        const Scalar f = r[pivots_[k]];
        if (sgn(f) != 0) r.add_scaled(-f, basis_[k]);
    }
    return r;
}

bool Subspace::contains(const Vec& v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace& s) const {
    require_same(s.ambient_, ambient_, "Subspace::contains");
    return std::all_of(s.basis_.begin(), s.basis_.end(), [&](const Vec& v) { return contains(v); });
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (!contains(v)) return std::nullopt;
    Vec c(basis_.size());
    for (std::size_t k = 0; k < basis_.size(); ++k) c[k] = v[pivots_[k]];
    return c;
}

std::vector<std::size_t> Subspace::free_columns() const {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t j = 0; j < ambient_; ++j) {
        if (k < pivots_.size() && pivots_[k] == j)
            ++k;
        else
            out.push_back(j);
    }
    return out;
}

Subspace span(const std::vector<Vec>& vs, std::size_t ambient) {
    Mat m = Mat::from_rows(vs, ambient);
    auto pivots = rref_in_place(m);
    Subspace s;
    s.ambient_ = ambient;
    s.pivots_ = pivots;
    for (std::size_t i = 0; i < pivots.size(); ++i) s.basis_.push_back(m.row(i));
    return s;
}

Subspace kernel(const Mat& m) {
    Mat r = m;
    auto pivots = rref_in_place(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
        basis.push_back(std::move(v));
    }
    return span(basis, m.cols());
}

Subspace image(const Mat& m) {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
    return span(cols, m.rows());
}

Subspace sum(const Subspace& a, const Subspace& b) {
    require_same(a.ambient(), b.ambient(), "sum");
    std::vector<Vec> all = a.basis();
    all.insert(all.end(), b.basis().begin(), b.basis().end());
    return span(all, a.ambient());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    require_same(a.ambient(), b.ambient(), "intersect");
    const std::size_t n = a.ambient();
    if (a.is_zero() || b.is_zero()) return Subspace::zero(n);
    // Columns: a_i then -b_j; a kernel vector (alpha, beta) gives sum alpha_i a_i in both.
    Mat m(n, a.dim() + b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t r = 0; r < n; ++r) m(r, i) = a.basis()[i][r];
    for (std::size_t j = 0; j < b.dim(); ++j)
        for (std::size_t r = 0; r < n; ++r) m(r, a.dim() + j) = -b.basis()[j][r];
    std::vector<Vec> out;
    const Subspace ker = kernel(m);
    for (const Vec& k : ker.basis()) {
        Vec x(n);
        for (std::size_t i = 0; i < a.dim(); ++i) x.add_scaled(k[i], a.basis()[i]);
        out.push_back(std::move(x));
    }
    return span(out, n);
}

bool contains(const Subspace& a, const Vec& v) { return a.contains(v); }

std::optional<Vec> solve(const Mat& m, const Vec& b) {
    require_same(m.rows(), b.size(), "solve");
    Mat aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vec x(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
    return x;
}

std::optional<Mat> inverse(const Mat& m) {
    require_same(m.rows(), m.cols(), "inverse");
    const std::size_t n = m.rows();
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto pivots = rref_in_place(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

std::vector<Scalar> char_poly(const Mat& m) {
    require_same(m.rows(), m.cols(), "char_poly");
    // Faddeev-LeVerrier; exact in characteristic zero.
    const std::size_t n = m.rows();
    std::vector<Scalar> c(n + 1);
    c[n] = 1;
    Mat mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
        c[n - k] = -(m * mk).trace() / Scalar(static_cast<long>(k));
    }
    return c;
}

namespace {

constexpr unsigned long kTrialLimit = 1000000;

/// Positive divisors of |a|; sets complete=false when the cofactor left after
/// trial division cannot be certified prime.
std::vector<Integer> divisors(Integer a, bool& complete) {
    a = abs(a);
    std::map<Integer, unsigned> fac;
    for (unsigned long p = 2; p <= kTrialLimit && Integer(p) * p <= a; ++p) {
        while (a % p == 0) {
            ++fac[Integer(p)];
            a /= p;
        }
    }
    if (a > 1) {
        if (a > Integer(kTrialLimit) * kTrialLimit) complete = false;
        ++fac[a];
    }
    std::vector<Integer> out{1};
    for (const auto& [p, e] : fac) {
        const std::size_t sz = out.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
        }
    }
    return out;
}

Scalar horner(const std::vector<Scalar>& poly, const Scalar& x) {
    Scalar acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace

std::vector<Scalar> rational_roots(const std::vector<Scalar>& poly, bool* complete) {
    bool ok = true;
    std::vector<Scalar> p = poly;
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
    std::vector<Scalar> roots;
    if (p.size() <= 1) {
        if (complete) *complete = true;
        return roots;
    }
    Integer lcm = 1;
    for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> a;
    for (const auto& c : p) a.push_back(Integer(c * lcm));
    std::size_t shift = 0;
    while (shift < a.size() && a[shift] == 0) ++shift;
    if (shift > 0) roots.push_back(0);
    a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(shift));
    if (a.size() > 1) {
        std::vector<Scalar> reduced(a.begin(), a.end());
        std::set<Scalar> found;
        const auto num = divisors(a.front(), ok);
        const auto den = divisors(a.back(), ok);
        for (const auto& q : den)
            for (const auto& n : num)
                for (int s : {1, -1}) {
                    Scalar cand(Integer(s) * n, q);
                    cand.canonicalize();
                    if (found.count(cand)) continue;
                    if (sgn(horner(reduced, cand)) == 0) found.insert(cand);
                }
        roots.insert(roots.end(), found.begin(), found.end());
    }
    if (complete) *complete = ok;
    return roots;
}

}  // namespace bol
