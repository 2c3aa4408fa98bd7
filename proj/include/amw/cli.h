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

// Command-line front end. Exit codes: 0 success or all tests passing,
// 1 diagnostics, rejected refactorings or failing tests, 2 usage errors.

#ifndef AMW_CLI_H_
#define AMW_CLI_H_

#include <ostream>

namespace amw {

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace amw

#endif  // AMW_CLI_H_
