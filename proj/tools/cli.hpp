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

#ifndef BOL_TOOLS_CLI_HPP
#define BOL_TOOLS_CLI_HPP

#include <ostream>

namespace bol::cli {

/// Exit codes of the `bol` tool.
enum Exit : int {
    kOk = 0,
    kFailed = 1,     // not a Bol algebra, or a verification failed
    kUndecided = 2,  // undecided radical, uncertified decomposition
    kInput = 3,      // unreadable file, malformed document, bad flags
};

/// Entry point behind main(); all output goes to the given streams.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bol::cli

#endif
