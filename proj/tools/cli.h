// Copyright 2026 The stabgraph Authors.
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

#ifndef STABGRAPH_TOOLS_CLI_H_
#define STABGRAPH_TOOLS_CLI_H_

#include <ostream>

namespace stabgraph::cli {

// Exit codes: 0 success, 1 parse or validation error, 2 guard exceeded.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stabgraph::cli

#endif  // STABGRAPH_TOOLS_CLI_H_
