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

#ifndef AMW_TESTS_SUPPORT_SEED_H_
#define AMW_TESTS_SUPPORT_SEED_H_

#include <cstdint>

namespace amw::testing {

// Seed for a randomized check: `fallback` unless AMW_SEED is set, in which
// case AMW_SEED is mixed with `fallback` so distinct checks keep distinct
// streams.
std::uint64_t PropertySeed(std::uint64_t fallback);

}  // namespace amw::testing

#endif  // AMW_TESTS_SUPPORT_SEED_H_
