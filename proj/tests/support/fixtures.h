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

#ifndef GMT_TESTS_SUPPORT_FIXTURES_H_
#define GMT_TESTS_SUPPORT_FIXTURES_H_

#include <fstream>
#include <iterator>
#include <stdexcept>
#include <string>

#ifndef GMT_FIXTURE_DIR
#error "GMT_FIXTURE_DIR must be defined"
#endif

namespace gmt::testing {

inline std::string FixturePath(const std::string &name) {
  return std::string(GMT_FIXTURE_DIR) + "/" + name;
}

inline std::string ReadFixture(const std::string &name) {
  std::ifstream in(FixturePath(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

}  // namespace gmt::testing

#endif  // GMT_TESTS_SUPPORT_FIXTURES_H_
