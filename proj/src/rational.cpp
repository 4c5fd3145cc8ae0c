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

#include "bol/rational.hpp"

#include <cctype>

#include "bol/error.hpp"

namespace bol {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    if (!is_integer_literal(num))
        throw Error(ErrorKind::Parse, "malformed scalar \"" + std::string(text) + "\"");
    Integer p(std::string(num), 10);
    if (slash == std::string_view::npos) return Scalar(p);
    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den[0] == '-')
        throw Error(ErrorKind::Parse, "malformed scalar \"" + std::string(text) + "\"");
    Integer q(std::string(den), 10);
    if (q == 0) throw Error(ErrorKind::Parse, "zero denominator in \"" + std::string(text) + "\"");
    Integer g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1 || q == 1)
        throw Error(ErrorKind::Parse, "scalar \"" + std::string(text) + "\" is not in lowest terms");
    return Scalar(p, q);
}

std::string format_scalar(const Scalar& s) {
    // A value built from a raw (p, q) pair may not be reduced yet.
    Scalar c = s;
    c.canonicalize();
    return c.get_str();
}

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "dimension-mismatch";
        case ErrorKind::NotAnIdeal: return "not-an-ideal";
        case ErrorKind::NotASubsystem: return "not-a-subsystem";
        case ErrorKind::IllDefinedQuotient: return "ill-defined-quotient";
        case ErrorKind::UnknownName: return "unknown-name";
        case ErrorKind::StrategyDisagreement: return "strategy-disagreement";
        case ErrorKind::Undecided: return "undecided";
        case ErrorKind::FatalInconsistency: return "fatal-inconsistency";
        case ErrorKind::PreconditionViolation: return "precondition-violation";
        case ErrorKind::NonzeroBinary: return "nonzero-binary";
        case ErrorKind::Parse: return "parse-error";
    }
    return "unknown";
}

}  // namespace bol
