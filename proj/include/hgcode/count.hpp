// Copyright 2026 The hgcode Authors
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
#include <string_view>

namespace hgcode {

/// Exact integer type for point/line counts and ranks.
///
/// Line counts grow like q^{4m}; a signed 128-bit integer covers every
/// instance accepted by PolarSpace (see max_supported_dimension()).
using Count = __int128;

/// Raised when an arithmetic step that must be exact is not.
class ExactnessError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("hgcode: count overflow");
  return r;
}

inline Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("hgcode: count overflow");
  return r;
}

inline Count ipow(Count base, unsigned exp) {
  Count r = 1;
  while (exp-- > 0) r = checked_mul(r, base);
  return r;
}

/// a / b, throwing ExactnessError unless b divides a.
inline Count exact_div(Count a, Count b, const char* what) {
  if (b == 0 || a % b != 0) throw ExactnessError(std::string("hgcode: inexact division in ") + what);
  return a / b;
}

inline std::string to_string(Count v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  // Work on the negative side so the minimum value is representable.
  Count x = neg ? v : -v;
  std::string s;
  while (x != 0) {
    s.push_back(static_cast<char>('0' - static_cast<int>(x % 10)));
    x /= 10;
  }
  if (neg) s.push_back('-');
  return {s.rbegin(), s.rend()};
}

/// Parses a non-negative decimal count.
inline Count parse_count(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("hgcode: empty integer");
  Count r = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("hgcode: malformed integer '" + std::string(text) + "'");
    r = checked_add(checked_mul(r, 10), c - '0');
  }
  return r;
}

}  // namespace hgcode
