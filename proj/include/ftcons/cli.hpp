// Copyright 2026 The ftcons Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FTCONS_CLI_HPP_
#define FTCONS_CLI_HPP_

#include <ostream>

namespace ftcons::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the `ftcons` tool. Returns the process exit code:
// 0 success/pass, 1 check failure, 2 usage or format error.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace ftcons::cli

#endif  // FTCONS_CLI_HPP_
