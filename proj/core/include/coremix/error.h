// Copyright 2026 The coremix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COREMIX_ERROR_H_
#define COREMIX_ERROR_H_

#include <stdexcept>
#include <string>

namespace coremix {

// Base class of everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated precondition: bad vertex id, disconnected input, malformed file.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A configured cap was hit (retry limit, state-count cap, horizon cap).
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

// An iterative numerical routine failed to reach its tolerance.
class NotConverged : public Error {
 public:
  using Error::Error;
};

}  // namespace coremix

#endif  // COREMIX_ERROR_H_
