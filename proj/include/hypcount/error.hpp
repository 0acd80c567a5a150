// Copyright 2026 The hypcount Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace hypcount {

// Base of every error thrown by the core library. The C API maps each
// subclass onto one status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the caller's input does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An exhaustive computation would exceed its configured work budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// An internal consistency assertion failed (e.g. a division that must be
// exact left a remainder). Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

#define HYPCOUNT_CHECK(cond, msg)                                         \
  do {                                                                    \
    if (!(cond)) throw ::hypcount::InternalError(std::string(msg));       \
  } while (0)

}  // namespace hypcount
