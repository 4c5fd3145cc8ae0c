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

#ifndef BOL_ALGEBRA_HPP
#define BOL_ALGEBRA_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bol/linalg.hpp"

namespace bol {

/// Structure constants of a finite-dimensional Bol algebra.
///   e_i . e_j      = sum_k T(i,j,k) e_k
///   (e_i, e_j, e_k) = sum_l R(i,j,k,l) e_l
class BolAlgebra {
   public:
    BolAlgebra() = default;
    /// Zero algebra of dimension n; labels default to e0..e{n-1}.
    explicit BolAlgebra(std::size_t n, std::vector<std::string> labels = {}, std::string name = {});

    std::size_t dim() const noexcept { return n_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    const Scalar& T(std::size_t i, std::size_t j, std::size_t k) const { return t_[(i * n_ + j) * n_ + k]; }
    const Scalar& R(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return r_[((i * n_ + j) * n_ + k) * n_ + l];
    }

    /// Sets T(i,j,k) = v and T(j,i,k) = -v.
    void set_binary(std::size_t i, std::size_t j, std::size_t k, const Scalar& v);
    /// Sets R(i,j,k,l) = v and R(j,i,k,l) = -v.
    void set_ternary(std::size_t i, std::size_t j, std::size_t k, std::size_t l, const Scalar& v);
    /// Single-entry writes without the antisymmetric partner (mutation tests,
    /// loading raw tensors).
    void set_binary_raw(std::size_t i, std::size_t j, std::size_t k, const Scalar& v);
    void set_ternary_raw(std::size_t i, std::size_t j, std::size_t k, std::size_t l, const Scalar& v);

    bool binary_is_zero() const;
    bool ternary_is_zero() const;

    friend bool operator==(const BolAlgebra& a, const BolAlgebra& b) {
        return a.n_ == b.n_ && a.t_ == b.t_ && a.r_ == b.r_;
    }

   private:
    void check_index(std::size_t i) const;

    std::size_t n_ = 0;
    std::vector<std::string> labels_;
    std::string name_;
    std::vector<Scalar> t_;
    std::vector<Scalar> r_;
};

Vec binary(const BolAlgebra& B, const Vec& x, const Vec& y);
Vec ternary(const BolAlgebra& B, const Vec& x, const Vec& y, const Vec& z);
/// Matrix of z -> (x,y,z).
Mat left_op(const BolAlgebra& B, const Vec& x, const Vec& y);
/// Matrix of z -> z.y.
Mat right_mult(const BolAlgebra& B, const Vec& y);

struct Witness {
    std::vector<std::size_t> tuple;
    Vec defect;
};

struct IdentityStatus {
    std::string id;  // "A1".."A5"
    std::string description;
    bool pass = true;
    std::size_t failures = 0;
    std::optional<Witness> witness;  // first failing basis tuple
};

struct AxiomReport {
    std::array<IdentityStatus, 5> identities;
    bool pass() const;
    const IdentityStatus& operator[](std::size_t i) const { return identities[i]; }
};

AxiomReport check_axioms(const BolAlgebra& B);

Subspace prod_span(const BolAlgebra& B, const Subspace& U, const Subspace& V);
Subspace tri_span(const BolAlgebra& B, const Subspace& U, const Subspace& V, const Subspace& W);
Subspace whole(const BolAlgebra& B);

enum class IdealMode { Def2, Def3 };

bool is_subsystem(const BolAlgebra& B, const Subspace& V);
bool is_ideal(const BolAlgebra& B, const Subspace& V, IdealMode mode = IdealMode::Def2);
/// Least ideal (IdealMode::Def2) containing S.
Subspace ideal_closure(const BolAlgebra& B, const Subspace& S);
Subspace center(const BolAlgebra& B);

/// Induced structure on the unit vectors at the free columns of I. Allows
/// I = B (result has dimension 0). Throws NotAnIdeal / IllDefinedQuotient.
BolAlgebra quotient(const BolAlgebra& B, const Subspace& I);
BolAlgebra direct_sum(const BolAlgebra& A, const BolAlgebra& B);
/// Structure on the canonical basis of I. Throws NotASubsystem.
BolAlgebra restrict(const BolAlgebra& B, const Subspace& I);
/// Structure in the basis f_a = sum_i P(i,a) e_i. Throws PreconditionViolation
/// if P is singular.
BolAlgebra change_basis(const BolAlgebra& B, const Mat& P);

/// Embedding of the summands of direct_sum(A, B) as subspaces of the sum.
Subspace first_summand(std::size_t dim_a, std::size_t dim_b);
Subspace second_summand(std::size_t dim_a, std::size_t dim_b);

}  // namespace bol

#endif
