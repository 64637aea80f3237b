// Copyright 2026 The qcliff Authors
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

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qcliff::cli {

/// Process exit codes.
enum Exit : int {
  kOk = 0,
  kInfeasible = 1,
  kParse = 2,
  kNotSymplectic = 3,
  kVerifyFailed = 4,
  kScaleLimit = 5,
};

/// Largest ambient dimension accepted by embed-check.
inline constexpr long kEmbedCheckMaxDimension = 36;

/// Runs one invocation; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcliff::cli
