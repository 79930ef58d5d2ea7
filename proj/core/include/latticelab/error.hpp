// Copyright 2026 The LatticeLab Authors
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
#include <utility>

namespace latticelab {

// Base class of every error raised by the library. The module tag names the
// component that detected the problem ("geometry", "complexity", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string& what)
      : std::runtime_error(module + ": " + what), module_(std::move(module)) {}

  const std::string& module() const noexcept { return module_; }
  virtual const char* kind() const noexcept { return "Error"; }

 private:
  std::string module_;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "PreconditionError"; }
};

// A cell outside a configuration's exact region was requested.
class ExactnessError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "ExactnessError"; }
};

// Malformed textual input (grid files, CLI value grammars).
class ParseError : public Error {
 public:
  ParseError(std::string module, const std::string& what, int line = 0,
             int column = 0)
      : Error(std::move(module), located(what, line, column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const char* kind() const noexcept override { return "ParseError"; }

 private:
  static std::string located(const std::string& what, int line, int column) {
    if (line <= 0) return what;
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + what;
  }

  int line_;
  int column_;
};

}  // namespace latticelab
