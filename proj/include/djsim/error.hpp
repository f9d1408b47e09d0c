// Copyright 2026 The djsim Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace djsim {

enum class ErrorKind {
    InvalidArgument, ///< malformed input: bad name, dimension, range
    Precondition,    ///< well-formed input the operation is not defined on
    Unsupported,     ///< outside a documented size or representation limit
    Numerical,       ///< a construction-time invariant did not hold
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string &what) {
    throw Error(kind, what);
}

} // namespace djsim
