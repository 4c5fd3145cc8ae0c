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

#ifndef BOL_SPINNING_HPP
#define BOL_SPINNING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bol/linalg.hpp"

namespace bol {

enum class Tri { Yes, No, Undecided };
const char* to_string(Tri t) noexcept;

struct SimplicityOptions {
    std::size_t random_combinations = 32;
    std::uint64_t seed = 12345;
};

struct SimplicityResult {
    Tri verdict = Tri::Undecided;
    std::optional<Subspace> witness;  // proper nonzero invariant subspace when verdict = No
    std::uint64_t seed = 0;
    std::string reason;
};

/// Smallest subspace containing S and stable under every matrix in family.
Subspace spin(const std::vector<Mat>& family, const Subspace& S);

/// Decides whether Q^n has a proper nonzero subspace invariant under
/// `family`. Candidates are spins of basis vectors and of eigenvectors for
/// rational eigenvalues of the family members and of random integer
/// combinations of them. "Yes" needs a Norton certificate: some
/// theta = M - lambda I with one-dimensional kernel spanned by a cyclic
/// vector, whose transpose also has a one-dimensional kernel spanned by a
/// cyclic vector for the transposed family.
SimplicityResult irreducibility_search(const std::vector<Mat>& family, std::size_t n,
                                       const SimplicityOptions& opts = {});

}  // namespace bol

#endif
