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

#include "gmt/decimal.h"

#include <charconv>

namespace gmt {

namespace {

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::optional<Decimal> Decimal::Parse(std::string_view text) {
  Decimal result;
  size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    result.negative_ = text[i] == '-';
    ++i;
  }
  size_t int_begin = i;
  while (i < text.size() && IsDigit(text[i])) ++i;
  std::string_view int_digits = text.substr(int_begin, i - int_begin);
  std::string_view frac_digits;
  if (i < text.size() && text[i] == '.') {
    ++i;
    size_t frac_begin = i;
    while (i < text.size() && IsDigit(text[i])) ++i;
    frac_digits = text.substr(frac_begin, i - frac_begin);
  }
  if (i != text.size()) return std::nullopt;
  if (int_digits.empty() && frac_digits.empty()) return std::nullopt;

  size_t lead = int_digits.find_first_not_of('0');
  result.integer_ =
      lead == std::string_view::npos ? "" : std::string(int_digits.substr(lead));
  size_t trail = frac_digits.find_last_not_of('0');
  result.fraction_ = trail == std::string_view::npos
                         ? ""
                         : std::string(frac_digits.substr(0, trail + 1));
  if (result.is_zero()) result.negative_ = false;
  return result;
}

std::string Decimal::ToString() const {
  std::string out;
  if (negative_) out += '-';
  out += integer_.empty() ? "0" : integer_;
  if (!fraction_.empty()) {
    out += '.';
    out += fraction_;
  }
  return out;
}

std::strong_ordering Decimal::CompareMagnitude(const Decimal &a,
                                               const Decimal &b) {
  if (a.integer_.size() != b.integer_.size()) {
    return a.integer_.size() <=> b.integer_.size();
  }
  if (auto c = a.integer_.compare(b.integer_); c != 0) return c <=> 0;
  // Fractions compare digit by digit with the shorter one padded by zeros.
  size_t n = std::max(a.fraction_.size(), b.fraction_.size());
  for (size_t i = 0; i < n; ++i) {
    char x = i < a.fraction_.size() ? a.fraction_[i] : '0';
    char y = i < b.fraction_.size() ? b.fraction_[i] : '0';
    if (x != y) return x <=> y;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering Decimal::operator<=>(const Decimal &other) const {
  if (negative_ != other.negative_) {
    return negative_ ? std::strong_ordering::less
                     : std::strong_ordering::greater;
  }
  auto magnitude = CompareMagnitude(*this, other);
  if (!negative_) return magnitude;
  return 0 <=> magnitude;
}

std::optional<std::uint64_t> ParseOffset(std::string_view text) {
  if (text.empty()) return std::nullopt;
  for (char c : text) {
    if (!IsDigit(c)) return std::nullopt;
  }
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) return std::nullopt;
  return value;
}

}  // namespace gmt
