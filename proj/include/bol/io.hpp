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

#ifndef BOL_IO_HPP
#define BOL_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bol/algebra.hpp"
#include "bol/envelope.hpp"
#include "bol/lie.hpp"

namespace bol {

// Canonical text layout shared by both document kinds: keys in sorted order,
// one sparse entry per line in lexicographic index order, scalars as "p" or
// "p/q" strings, zero entries omitted, trailing newline. emit(parse(emit(x)))
// is byte-identical to emit(x).

/// Parses a Bol algebra document. Throws Error{Parse} naming the offending
/// field, e.g. "ternary[4][2]: index 7 out of range (dim 3)".
BolAlgebra parse_bol(std::string_view text);
std::string emit_bol(const BolAlgebra& B);

struct LieDocument {
    LieAlgebra lie;
    std::optional<std::size_t> b_dim;
    std::vector<PairEndo> h_basis;  // only meaningful together with b_dim
};

LieDocument parse_lie(std::string_view text);
std::string emit_lie(const LieAlgebra& L);
/// Lie document of G carrying the B/h split.
std::string emit_envelope(const EnvelopingLie& E);

/// Whole-file read; Error{Parse} if the file cannot be opened.
std::string read_text_file(const std::string& path);
/// Throws Error{Parse} if the file cannot be written.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace bol

#endif
