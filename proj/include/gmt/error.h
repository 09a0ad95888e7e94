// Copyright 2026 The gmtkit Authors.
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

#ifndef GMT_ERROR_H_
#define GMT_ERROR_H_

#include <stdexcept>
#include <string>

namespace gmt {

// Base class for every failure raised by the library. The code is a short
// upper-case tag (e.g. "UNRESOLVED_TARGET") that callers can switch on; the
// message is meant for humans.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string &message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string &code() const { return code_; }

 private:
  std::string code_;
};

// Input text could not be read as the expected format. Line and column are
// 1-based; zero means the position is unknown.
class ParseError : public Error {
 public:
  ParseError(std::string code, const std::string &message, int line = 0,
             int column = 0)
      : Error(std::move(code), Format(message, line, column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string Format(const std::string &message, int line, int column) {
    if (line <= 0) return message;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }

  int line_;
  int column_;
};

}  // namespace gmt

#endif  // GMT_ERROR_H_
