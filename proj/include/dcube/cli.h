// Copyright 2026 The dcube Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DCUBE_CLI_H
#define DCUBE_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace dcube {

inline constexpr const char *kToolVersion = "0.1.0";
/// Environment variable naming the default output directory.
inline constexpr const char *kOutDirEnv = "DCUBE_OUT_DIR";

enum ExitCode : int {
    kExitOk = 0,
    kExitInvariantFailure = 1,
    kExitBadInput = 2,
};

/// Entry point of the dcube command line; args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace dcube

#endif
