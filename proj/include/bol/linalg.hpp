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

#ifndef BOL_LINALG_HPP
#define BOL_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "bol/rational.hpp"

namespace bol {

class Vec {
   public:
    Vec() = default;
    explicit Vec(std::size_t n) : c_(n) {}
    Vec(std::initializer_list<Scalar> init) : c_(init) {}
    explicit Vec(std::vector<Scalar> coords) : c_(std::move(coords)) {}

    static Vec unit(std::size_t n, std::size_t i);

    std::size_t size() const noexcept { return c_.size(); }
    const Scalar& operator[](std::size_t i) const { return c_[i]; }
    Scalar& operator[](std::size_t i) { return c_[i]; }
    std::span<const Scalar> coords() const noexcept { return c_; }

    bool is_zero() const;

    Vec& operator+=(const Vec& o);
    Vec& operator-=(const Vec& o);
    Vec& operator*=(const Scalar& s);
    /// this += s * o
    Vec& add_scaled(const Scalar& s, const Vec& o);

    friend bool operator==(const Vec&, const Vec&) = default;

   private:
    std::vector<Scalar> c_;
};

Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
Vec operator-(Vec a);
Vec operator*(const Scalar& s, Vec v);
Scalar dot(const Vec& a, const Vec& b);

class Mat {
   public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    Mat(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Mat identity(std::size_t n);
    static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);
    static Mat from_columns(const std::vector<Vec>& cols, std::size_t rows);

    std::size_t rows() const noexcept { return r_; }
    std::size_t cols() const noexcept { return c_; }

    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    Mat transpose() const;
    Scalar trace() const;
    bool is_zero() const;
    Vec apply(const Vec& v) const;

    /// Entries in row-major order.
    std::span<const Scalar> data() const noexcept { return a_; }

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    Mat& operator*=(const Scalar& s);

    friend bool operator==(const Mat&, const Mat&) = default;

   private:
    std::size_t r_ = 0;
    std::size_t c_ = 0;
    std::vector<Scalar> a_;
};

Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator*(const Mat& a, const Mat& b);
Mat operator*(const Scalar& s, Mat m);
Vec operator*(const Mat& m, const Vec& v);

/// Reduced row-echelon form. Zero rows are kept at the bottom so the shape is
/// unchanged.
Mat rref(const Mat& m);
std::size_t rank(const Mat& m);

/// A linear subspace of Q^n stored by its canonical (RREF) basis. Two
/// subspaces are equal iff their canonical bases agree entrywise.
class Subspace {
   public:
    Subspace() = default;
    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    bool is_zero() const noexcept { return basis_.empty(); }
    bool is_full() const noexcept { return basis_.size() == ambient_; }
    const std::vector<Vec>& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Remainder of v after eliminating the pivot columns; zero iff v lies in
    /// the subspace.
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const;
    bool contains(const Subspace& s) const;
    /// Coordinates of v (which must lie in the subspace) in the canonical basis.
    std::optional<Vec> coordinates(const Vec& v) const;
    /// Column indices not used as pivots; the unit vectors there span a
    /// complement.
    std::vector<std::size_t> free_columns() const;

    Mat as_rows() const { return Mat::from_rows(basis_, ambient_); }

    friend bool operator==(const Subspace&, const Subspace&) = default;

   private:
    friend Subspace span(const std::vector<Vec>&, std::size_t);
    std::size_t ambient_ = 0;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

/// Throws Error{DimensionMismatch} if some vector has length != ambient.
Subspace span(const std::vector<Vec>& vs, std::size_t ambient);
Subspace kernel(const Mat& m);
Subspace image(const Mat& m);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, const Vec& v);

/// Solves m x = b exactly; nullopt if inconsistent. Returns one particular
/// solution (free variables set to zero).
std::optional<Vec> solve(const Mat& m, const Vec& b);
std::optional<Mat> inverse(const Mat& m);

/// Coefficients c_0..c_n of det(x I - m), c_n = 1.
std::vector<Scalar> char_poly(const Mat& m);
/// Distinct rational roots of a polynomial with rational coefficients
/// (coefficients in increasing degree). Candidates p/q come from divisors of
/// the cleared constant and leading terms; numbers too large to factor by
/// trial division are skipped and the function reports incomplete via the
/// optional flag.
std::vector<Scalar> rational_roots(const std::vector<Scalar>& poly, bool* complete = nullptr);

}  // namespace bol

#endif
