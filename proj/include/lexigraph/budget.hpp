/*
 * Copyright 2026 The lexigraph authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <stdexcept>

namespace lexigraph {

/// Thrown when a construction or sweep would exceed its resource budget;
/// mapped to a dedicated exit code by the CLI.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr size_t kDefaultVertexBudget = 200000;
inline constexpr size_t kDefaultEnumBudget = size_t{1} << 20;
inline constexpr size_t kDefaultOracleBudget = size_t{1} << 20;

}  // namespace lexigraph
