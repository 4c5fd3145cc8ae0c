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

#include "bol/catalog.hpp"

#include "bol/error.hpp"
#include "bol/lie.hpp"

namespace bol {

namespace {

/// x.y = [x,y] (or 0 when keep_binary is false), (x,y,z) = [[x,y],z].
BolAlgebra from_lie(const LieAlgebra& L, bool keep_binary, const std::string& name) {
    const std::size_t n = L.dim();
    BolAlgebra B(n, L.labels(), name);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec eij = L.bracket(Vec::unit(n, i), Vec::unit(n, j));
            for (std::size_t k = 0; k < n; ++k) {
                if (keep_binary) B.set_binary_raw(i, j, k, eij[k]);
                const Vec t = L.bracket(eij, Vec::unit(n, k));
                for (std::size_t l = 0; l < n; ++l) B.set_ternary_raw(i, j, k, l, t[l]);
            }
        }
    return B;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {"abelian1", "abelian2", "abelian3", "abelian4", "solv2",
                                                   "heis3bol", "sl2bol",   "so3bol",   "lts_sl2",  "mixed"};
    return names;
}

BolAlgebra catalog(const std::string& name) {
    if (name.size() == 9 && name.starts_with("abelian") && name[7] == '_') {
        // accept abelian_n as an alias
        return catalog("abelian" + name.substr(8));
    }
    if (name.starts_with("abelian") && name.size() == 8 && name[7] >= '1' && name[7] <= '4')
        return BolAlgebra(static_cast<std::size_t>(name[7] - '0'), {}, name);
    if (name == "solv2") {
        BolAlgebra B(2, {}, name);
        B.set_binary(0, 1, 0, 1);
        return B;
    }
    if (name == "heis3bol") return from_lie(lie_heis3(), true, name);
    if (name == "sl2bol") return from_lie(lie_sl2(), true, name);
    if (name == "so3bol") return from_lie(lie_so3(), true, name);
    if (name == "lts_sl2") return from_lie(lie_sl2(), false, name);
    if (name == "mixed") {
        BolAlgebra B = direct_sum(catalog("sl2bol"), catalog("solv2"));
        B.set_name(name);
        return B;
    }
    throw Error(ErrorKind::UnknownName, "unknown catalog entry \"" + name + "\"");
}

}  // namespace bol
