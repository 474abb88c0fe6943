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

// Text formats: an element is its decimal (or 0x-prefixed hex) encoding, a
// vector is comma-separated, a 2-row matrix separates rows with ';'.

#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgcode/geometry.hpp"
#include "hgcode/gf.hpp"

namespace hgcode::io {

/// Malformed text input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.push_back({});
  return out;
}

inline Elem parse_elem(const Field& f, const std::string& tok) {
  const std::string t = trim(tok);
  if (t.empty()) throw ParseError("empty field element");
  const bool hex = t.size() > 2 && t[0] == '0' && (t[1] == 'x' || t[1] == 'X');
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(t, &used, hex ? 16 : 10);
  } catch (const std::exception&) {
    throw ParseError("not a field element: '" + t + "'");
  }
  if (used != t.size() || t[0] == '-') throw ParseError("not a field element: '" + t + "'");
  if (v >= f.size()) throw ParseError("element " + t + " is not below q^2 = " + std::to_string(f.size()));
  return Elem{static_cast<std::uint32_t>(v)};
}

inline Vec parse_vector(const Field& f, const std::string& s) {
  if (trim(s).empty()) return {};
  Vec out;
  for (const auto& tok : split(s, ',')) out.push_back(parse_elem(f, tok));
  return out;
}

inline LineRREF parse_matrix(const Field& f, const std::string& s) {
  const auto rows = split(s, ';');
  if (rows.size() != 2) throw ParseError("a line matrix needs exactly two rows separated by ';'");
  LineRREF l{parse_vector(f, rows[0]), parse_vector(f, rows[1])};
  if (l.a.size() != l.b.size()) throw ParseError("matrix rows have different lengths");
  return l;
}

inline std::string format_vector(const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i].code);
  }
  return out;
}

inline std::string format_matrix(const LineRREF& l) { return format_vector(l.a) + ";" + format_vector(l.b); }

/// Reads a vector file: either one element per line or a single CSV row.
/// Blank lines and lines starting with '#' are skipped.
inline Vec read_vector_file(const Field& f, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Vec out;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    for (Elem x : parse_vector(f, t)) out.push_back(x);
  }
  return out;
}

}  // namespace hgcode::io
