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

#ifndef BOL_RATIONAL_HPP
#define BOL_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bol {

/// Exact rational scalar. mpq_class keeps values canonical (reduced, positive
/// denominator) after every arithmetic operation.
using Scalar = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" (q > 0, gcd(p,q) = 1). Throws Error{Parse}.
Scalar parse_scalar(std::string_view text);

/// Canonical rendering: "p" for integers, "p/q" otherwise, never a '+' sign.
std::string format_scalar(const Scalar& s);

}  // namespace bol

#endif
