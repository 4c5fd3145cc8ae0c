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

#ifndef BOL_ENVELOPE_HPP
#define BOL_ENVELOPE_HPP

#include <optional>
#include <string>
#include <vector>

#include "bol/algebra.hpp"
#include "bol/lie.hpp"

namespace bol {

/// A pseudo-derivation candidate: endomorphism pi with component comp.
struct PairEndo {
    Mat pi;
    Vec comp;

    static PairEndo zero(std::size_t n);
    /// pi row-major followed by comp; length n*n + n.
    Vec flatten() const;
    static PairEndo unflatten(const Vec& v, std::size_t n);

    friend bool operator==(const PairEndo&, const PairEndo&) = default;
};

PairEndo operator+(const PairEndo& a, const PairEndo& b);
PairEndo operator-(const PairEndo& a, const PairEndo& b);
PairEndo operator*(const Scalar& s, const PairEndo& a);

struct PseudoDerivationReport {
    bool binary_rule_ok = true;
    bool ternary_rule_ok = true;
    std::optional<std::vector<std::size_t>> binary_witness;
    std::optional<std::vector<std::size_t>> ternary_witness;
    bool pass() const { return binary_rule_ok && ternary_rule_ok; }
};

/// With Z = P.comp:
///   P(x.y) = Px.y + x.Py + (Z;x,y) + (x.y).Z      where (Z;x,y) = -(x,y,Z)
///   P(x,y,z) = (Px,y,z) + (x,Py,z) + (x,y,Pz)
PseudoDerivationReport is_pseudo_derivation(const BolAlgebra& B, const PairEndo& P);

/// (PQ - QP, P.comp . Q.comp + P(Q.comp) - Q(P.comp))
PairEndo pair_bracket(const BolAlgebra& B, const PairEndo& P, const PairEndo& Q);

/// (D_{x,y}, x.y) with D_{x,y} z = (z;x,y) = -(x,y,z).
PairEndo inner_pair(const BolAlgebra& B, const Vec& x, const Vec& y);

/// Canonical basis (RREF in the flattened pair space) of the smallest
/// pair_bracket-closed span containing every inner pair. Throws
/// FatalInconsistency if a basis element is not a pseudo-derivation.
std::vector<PairEndo> h_closure(const BolAlgebra& B);

struct EnvelopeVerification {
    bool jacobi_ok = false;
    bool projection_ok = false;  // proj_B [x,y] = x.y
    bool recovery_ok = false;    // [[x,y],z] = (x,y,z), i.e. [z,[x,y]] = (z;x,y)
    std::optional<std::vector<std::size_t>> jacobi_witness;
    std::optional<std::vector<std::size_t>> projection_witness;
    std::optional<std::vector<std::size_t>> recovery_witness;
    bool pass() const { return jacobi_ok && projection_ok && recovery_ok; }
};

/// G = B + h. Coordinates 0..n-1 are B, n..n+N-1 are the h basis.
struct EnvelopingLie {
    LieAlgebra lie;
    std::size_t b_dim = 0;
    std::vector<PairEndo> h_basis;
    /// Dtau[(i*n + j)*N + t]: h-coordinates of inner_pair(e_i, e_j).
    std::vector<Scalar> Dtau;
    /// K[(t*n + i)*n + j]: B-component of [h_t, e_i].
    std::vector<Scalar> K;
    EnvelopeVerification verification;

    std::size_t h_dim() const noexcept { return h_basis.size(); }
    const Scalar& D(std::size_t i, std::size_t j, std::size_t t) const { return Dtau[(i * b_dim + j) * h_dim() + t]; }
    const Scalar& Kc(std::size_t t, std::size_t i, std::size_t j) const { return K[(t * b_dim + i) * b_dim + j]; }
    /// B embedded in G.
    Subspace b_part() const;
    Subspace h_part() const;
};

/// Builds G and records the verification without throwing on failure.
EnvelopingLie build_envelope(const BolAlgebra& B);
/// build_envelope, rejecting the result (FatalInconsistency) if any
/// verification fails.
EnvelopingLie envelope(const BolAlgebra& B);

struct IdealExtensionReport {
    Subspace W;                  // V + [V,B] inside G
    bool ideal_of_generated = false;  // W is an ideal of the subalgebra it generates
    bool ideal_of_envelope = false;   // W is an ideal of G
    bool bol_solvable = false;
    bool lie_solvable = false;        // derived series of W reaches zero
    bool implication_holds = false;   // bol_solvable => lie_solvable
};
IdealExtensionReport ideal_extension(const BolAlgebra& B, const EnvelopingLie& E, const Subspace& V);

/// D(x,y) is the h-element of inner_pair(x,y); (z;x,y) = -(x,y,z).
struct LtsEmbeddingReport {
    bool bracket_ok = false;     // [x,y] = D(x,y)
    bool action_ok = false;      // [x, D(y,z)] = (x;y,z)
    bool derivation_ok = false;  // [D(x,y), D(u,v)] = D((x;u,v),y) + D(x,(y;u,v))
    std::optional<std::vector<std::size_t>> witness;
    bool pass() const { return bracket_ok && action_ok && derivation_ok; }
};
/// Throws NonzeroBinary unless B has zero binary product.
LtsEmbeddingReport lts_embedding_check(const BolAlgebra& B, const EnvelopingLie& E);

struct CorollaryReport {
    bool bol_solvable = false;
    bool lie_solvable = false;
    bool implication_holds = false;
};
CorollaryReport corollary_solvability_check(const BolAlgebra& B);

}  // namespace bol

#endif
