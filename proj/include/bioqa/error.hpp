// Copyright 2026 The bioqa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BIOQA_ERROR_HPP
#define BIOQA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace bioqa {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A completion endpoint answered, but the body was not a usable
/// completions-style response.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

}  // namespace bioqa

#endif  // BIOQA_ERROR_HPP
