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

#ifndef BOL_ERROR_HPP
#define BOL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace bol {

enum class ErrorKind {
    DimensionMismatch,
    NotAnIdeal,
    NotASubsystem,
    IllDefinedQuotient,
    UnknownName,
    StrategyDisagreement,
    Undecided,
    FatalInconsistency,
    PreconditionViolation,
    NonzeroBinary,
    Parse,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it to an exit code without string matching.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

}  // namespace bol

#endif
