// Copyright 2026 The viscid Authors
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


#ifndef VISCID_CLI_APP_HPP_
#define VISCID_CLI_APP_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace viscid::cli {

// Runs the command line `args` (args[0] is the program name) and returns the
// process exit code: 0 when the command ran (whatever the solver status),
// 1 on I/O and other runtime failures, 2 on invalid input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace viscid::cli

#endif  // VISCID_CLI_APP_HPP_
