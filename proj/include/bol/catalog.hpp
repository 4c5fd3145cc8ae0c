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

#ifndef BOL_CATALOG_HPP
#define BOL_CATALOG_HPP

#include <string>
#include <vector>

#include "bol/algebra.hpp"

namespace bol {

/// Names accepted by catalog(), in a stable order.
const std::vector<std::string>& catalog_names();

/// Bundled examples. Throws Error{UnknownName}.
///   abelian1..abelian4  all products zero
///   solv2               e0.e1 = e0, ternary zero
///   heis3bol            x.y = [x,y] (Heisenberg), (x,y,z) = [[x,y],z]
///   sl2bol, so3bol      x.y = [x,y], (x,y,z) = [[x,y],z]
///   lts_sl2             binary zero, (x,y,z) = [[x,y],z] on sl2
///   mixed               direct_sum(sl2bol, solv2)
BolAlgebra catalog(const std::string& name);

}  // namespace bol

#endif
