// Copyright 2026 The SRTGAN Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SRTGAN_ERROR_H_
#define SRTGAN_ERROR_H_

#include <sstream>
#include <stdexcept>
#include <string>

namespace srtgan {

// Base error for every failure this library reports. The CLI maps these to
// exit codes; tests match on the message text.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Configuration / usage errors (bad key, malformed manifest row, ...).
// Distinct type so the CLI can exit 2 instead of 1.
class ConfigError : public Error {
 public:
  using Error::Error;
};

namespace detail {
inline void format_into(std::ostringstream&) {}
template <typename A, typename... Rest>
void format_into(std::ostringstream& os, const A& a, const Rest&... rest) {
  os << a;
  format_into(os, rest...);
}
}  // namespace detail

template <typename... Args>
std::string strcat_msg(const Args&... args) {
  std::ostringstream os;
  detail::format_into(os, args...);
  return os.str();
}

template <typename... Args>
[[noreturn]] void fail(const Args&... args) {
  throw Error(strcat_msg(args...));
}

template <typename... Args>
[[noreturn]] void fail_config(const Args&... args) {
  throw ConfigError(strcat_msg(args...));
}

}  // namespace srtgan

#define SRTGAN_CHECK(cond, ...)        \
  do {                                 \
    if (!(cond)) {                     \
      ::srtgan::fail(__VA_ARGS__);     \
    }                                  \
  } while (0)

#endif  // SRTGAN_ERROR_H_
