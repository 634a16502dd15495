/*
   Copyright 2026 The lhoro Authors

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

// Run configuration shared by every command: a key=value file overridden by
// individual settings.
//
//   base   = 3,3,3        # trace triple of the base point
//   depth  = 2000         # Farey order Q
//   tol    = 1e-8
//   format = json         # or csv
//   seed   = 42

#pragma once

#include <cstdint>
#include <string>

#include "lhoro/slope_search.hpp"
#include "lhoro/torus.hpp"

namespace lhoro {

struct RunConfig {
  torus::TracePoint base{3.0, 3.0, 3.0};
  std::int64_t depth = 2000;
  double tol = 1e-8;
  std::string format = "json";
  std::uint64_t seed = 42;

  /// Sets one key; throws ParseError for unknown keys or unreadable values
  /// and ContractViolation for out-of-range ones.
  void set(const std::string& key, const std::string& value);
  /// Applies every `key = value` line; blank lines and `#` comments skipped.
  void apply_text(const std::string& text);
  void apply_file(const std::string& path);
  void validate() const;

  torus::SearchConfig search() const;
};

}  // namespace lhoro
