// Copyright 2026 The reldeleg Authors
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

#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace reldeleg::driver {

using nlohmann::json;

/// A result record plus the exit status it implies: 0 success, 1 negative
/// verdict. Errors surface as exceptions; see error_status.
struct Result {
  json record;
  int status = 0;
};

/// Each subcommand reads its parameters from a descriptor object, fills in
/// defaults, and echoes the completed descriptor under "inputs".
Result diag(const json& descriptor);
Result game(const json& descriptor);
Result amplify(const json& descriptor);
Result c2h(const json& descriptor);
Result reltime(const json& descriptor);
Result magic_square(const json& descriptor);

/// Dispatches on descriptor["command"].
Result run(const json& descriptor);

/// Runs `run` and converts any exception into an error record with status 2.
Result run_guarded(const json& descriptor);

}  // namespace reldeleg::driver
