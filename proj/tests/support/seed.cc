// Copyright 2026 The AMW Authors.
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

#include "support/seed.h"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace amw::testing {

std::uint64_t PropertySeed(std::uint64_t fallback) {
  const char* env = std::getenv("AMW_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  std::uint64_t seed = std::stoull(env);
  return (seed * 0x9E3779B97F4A7C15ULL) ^ fallback;
}

}  // namespace amw::testing
