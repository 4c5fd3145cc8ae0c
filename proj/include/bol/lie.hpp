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

#ifndef BOL_LIE_HPP
#define BOL_LIE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bol/forms.hpp"
#include "bol/linalg.hpp"
#include "bol/series_result.hpp"
#include "bol/spinning.hpp"

namespace bol {

/// [f_i, f_j] = sum_k C(i,j,k) f_k
class LieAlgebra {
   public:
    LieAlgebra() = default;
    explicit LieAlgebra(std::size_t m, std::vector<std::string> labels = {}, std::string name = {});

    std::size_t dim() const noexcept { return m_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    const Scalar& C(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * m_ + j) * m_ + k]; }
    /// Sets C(i,j,k) = v and C(j,i,k) = -v.
    void set_bracket(std::size_t i, std::size_t j, std::size_t k, const Scalar& v);
    void set_bracket_raw(std::size_t i, std::size_t j, std::size_t k, const Scalar& v);

    Vec bracket(const Vec& x, const Vec& y) const;
    /// Matrix of ad x.
    Mat ad(const Vec& x) const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.m_ == b.m_ && a.c_ == b.c_; }

   private:
    std::size_t m_ = 0;
    std::vector<std::string> labels_;
    std::string name_;
    std::vector<Scalar> c_;
};

LieAlgebra lie_abelian(std::size_t m);
/// Basis e, f, h with [e,f] = h, [h,e] = 2e, [h,f] = -2f.
LieAlgebra lie_sl2();
/// Basis x, y, z with [x,y] = z, [y,z] = x, [z,x] = y.
LieAlgebra lie_so3();
/// Basis x, y, z with [x,y] = z.
LieAlgebra lie_heis3();
LieAlgebra lie_direct_sum(const LieAlgebra& a, const LieAlgebra& b);

struct JacobiReport {
    bool pass = true;
    std::size_t failures = 0;
    std::optional<std::array<std::size_t, 3>> witness;
    Vec defect;
};
JacobiReport jacobi_check(const LieAlgebra& L);

/// gram(i,j) = tr(ad f_i ad f_j)
BilinearForm killing(const LieAlgebra& L);

Subspace lie_bracket_span(const LieAlgebra& L, const Subspace& U, const Subspace& V);
bool lie_is_subalgebra(const LieAlgebra& L, const Subspace& S);
bool lie_is_ideal(const LieAlgebra& L, const Subspace& S);
/// Least subalgebra containing S.
Subspace lie_generated_subalgebra(const LieAlgebra& L, const Subspace& S);
/// Structure constants on the free-column complement of an ideal.
LieAlgebra lie_quotient(const LieAlgebra& L, const Subspace& I);

/// S^(0) = S, S^(n+1) = [S^(n), S^(n)]. Throws NotAnIdeal unless S is an ideal.
SeriesResult lie_derived_series(const LieAlgebra& L, const Subspace& S);
/// Same series without the ideal precondition (S need only be a subalgebra
/// for the terms to be meaningful).
SeriesResult lie_derived_series_unchecked(const LieAlgebra& L, const Subspace& S);
bool lie_is_solvable(const LieAlgebra& L);

/// Killing-orthogonal of [L,L], certified to be a solvable ideal with
/// semisimple quotient. Throws FatalInconsistency if certification fails.
Subspace lie_radical(const LieAlgebra& L);
/// Cartan: Killing form nondegenerate.
bool lie_is_semisimple(const LieAlgebra& L);
/// kappa(L, [L,L]) = 0.
bool cartan_solvability_condition(const LieAlgebra& L);
/// irreducibility_search over the ad f_i. Abelian algebras are never simple.
SimplicityResult lie_is_simple(const LieAlgebra& L, const SimplicityOptions& opts = {});

}  // namespace bol

#endif
