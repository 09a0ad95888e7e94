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

#ifndef GMT_DECIMAL_H_
#define GMT_DECIMAL_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace gmt {

// An exact decimal number parsed from text such as "0.4", "-12", ".5" or
// "1.000". No binary floating point is involved, so comparisons never round.
// Exponent notation is not accepted.
class Decimal {
 public:
  // Zero.
  Decimal() = default;

  // Returns nullopt unless text is [+-]?(digits)?(.digits)? with at least one
  // digit overall.
  static std::optional<Decimal> Parse(std::string_view text);

  bool negative() const { return negative_; }
  bool is_zero() const { return integer_.empty() && fraction_.empty(); }

  // Shortest canonical spelling: "0", "0.4", "-3.25".
  std::string ToString() const;

  std::strong_ordering operator<=>(const Decimal &other) const;
  bool operator==(const Decimal &other) const {
    return (*this <=> other) == std::strong_ordering::equal;
  }

 private:
  // Magnitude comparison ignoring sign.
  static std::strong_ordering CompareMagnitude(const Decimal &a,
                                               const Decimal &b);

  bool negative_ = false;
  std::string integer_;   // no leading zeros
  std::string fraction_;  // no trailing zeros
};

// Parses a non-negative base-10 integer with no sign and no surrounding
// whitespace. Returns nullopt on anything else, including overflow.
std::optional<std::uint64_t> ParseOffset(std::string_view text);

}  // namespace gmt

#endif  // GMT_DECIMAL_H_
