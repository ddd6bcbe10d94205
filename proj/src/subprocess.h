// Copyright 2026 The ztc Authors
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

#ifndef ZTC_SRC_SUBPROCESS_H_
#define ZTC_SRC_SUBPROCESS_H_

#include <string>
#include <vector>

namespace ztc {

struct ProcessResult {
  bool started = false;
  bool timed_out = false;
  int exit_code = -1;  // -1 when killed by a signal
  std::string out;
  std::string err;
  std::string error;  // why the process could not be started
};

// Runs argv[0] (looked up on PATH) and collects both output streams. The
// child is killed when it outlives `timeout_s`.
ProcessResult RunProcess(const std::vector<std::string>& argv, double timeout_s);

}  // namespace ztc

#endif  // ZTC_SRC_SUBPROCESS_H_
