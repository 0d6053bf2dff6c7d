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

#include "reldeleg/clock_hamiltonian.hpp"
#include "reldeleg/estimate.hpp"
#include "reldeleg/relativistic.hpp"

namespace reldeleg::records {

using nlohmann::json;

/// Stable text form of a record: two-space indent, sorted keys, newline.
std::string dump(const json& record);

json to_json(const games::Estimate& estimate);
json to_json(const games::Transcript& transcript);
json to_json(const c2h::KitaevReport& report);
json to_json(const rel::Verdict& verdict);
json to_json(const rel::Attack& attack);
json to_json(const rel::Event& event);

/// {"error": {"kind": ..., "message": ...}}.
json error_record(const std::string& kind, const std::string& message);

}  // namespace reldeleg::records
