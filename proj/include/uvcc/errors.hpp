// Copyright 2026 The uvcc-circuits developers
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

namespace uvcc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidState : Error {
  using Error::Error;
};

struct LengthMismatch : Error {
  using Error::Error;
};

struct WidthMismatch : Error {
  using Error::Error;
};

struct TierViolation : Error {
  using Error::Error;
};

struct InvalidTerm : Error {
  using Error::Error;
};

// Config-file problems carry the offending line (0 = whole file).
struct ConfigError : Error {
  int line;
  ConfigError(int line_, const std::string& msg)
      : Error("config:" + std::to_string(line_) + ": " + msg), line(line_) {}
};

}  // namespace uvcc
