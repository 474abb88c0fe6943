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

// Oracle agreement suite for one instance. Bulk checks are reported as
// (checked, agreeing) pairs so a single report line covers many values.

#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "hgcode/codec.hpp"
#include "hgcode/line_enum.hpp"
#include "hgcode/oracle.hpp"
#include "hgcode/point_enum.hpp"

namespace hgcode {

enum class SelftestLevel { fast, full };

inline std::vector<oracle::OracleReport> run_selftest(const PolarSpace& ps, SelftestLevel level,
                                                      const oracle::Guards& guards = {}) {
  using oracle::make_report;
  const Field& f = ps.field();
  const int m = ps.m();
  const std::uint32_t q = f.q();
  std::vector<oracle::OracleReport> out;

  const auto points = oracle::enum_points_bf(f, m, guards);
  const auto lines = oracle::enum_lines_bf(f, m, guards);
  out.push_back(make_report("points", Count(points.size()), ps.num_points(), q, m));
  out.push_back(make_report("lines", Count(lines.size()), ps.num_lines(), q, m));

  PointEnumerator pe(ps);
  LineEnumerator le(ps);

  // Every prefix of an oracle object, plus all one-column extensions of those
  // prefixes, so unrealizable prefixes are exercised too.
  {
    std::map<Vec, Count> by_prefix;
    for (const auto& x : points)
      for (int t = 0; t <= m; ++t) ++by_prefix[Vec(x.begin(), x.begin() + t)];
    std::vector<Vec> extra;
    for (const auto& [d, c] : by_prefix)
      if (d.size() < static_cast<std::size_t>(m))
        for (std::uint32_t y = 0; y < f.size(); ++y) {
          Vec e = d;
          e.push_back(Elem{y});
          if (!by_prefix.count(e)) extra.push_back(e);
        }
    Count checked = 0, agree = 0;
    for (const auto& [d, c] : by_prefix) {
      ++checked;
      agree += pe.theta(d) == c;
    }
    for (const auto& d : extra) {
      ++checked;
      agree += pe.theta(d) == 0;
    }
    out.push_back(make_report("theta-prefixes", checked, agree, q, m));
  }
  {
    std::map<std::pair<Vec, Vec>, Count> by_prefix;
    for (const auto& l : lines)
      for (int t = 0; t <= m; ++t) ++by_prefix[{Vec(l.a.begin(), l.a.begin() + t), Vec(l.b.begin(), l.b.begin() + t)}];
    Count checked = 0, agree = 0;
    for (const auto& [d, c] : by_prefix) {
      ++checked;
      agree += le.psi(LinePrefix{d.first, d.second}) == c;
      if (level == SelftestLevel::full && d.first.size() < static_cast<std::size_t>(m)) {
        for (std::uint32_t c2 = 0; c2 < f.size() * f.size(); ++c2) {
          LinePrefix e{d.first, d.second};
          e.a.push_back(Elem{c2 / f.size()});
          e.b.push_back(Elem{c2 % f.size()});
          if (by_prefix.count({e.a, e.b})) continue;
          ++checked;
          agree += le.psi(e) == 0;
        }
      }
    }
    out.push_back(make_report("psi-prefixes", checked, agree, q, m));
  }
  {
    Count agree = 0;
    for (std::size_t i = 0; i < points.size(); ++i)
      agree += pe.rank(points[i]) == Count(i) && pe.unrank(Count(i)) == points[i];
    out.push_back(make_report("point-rank-bijection", Count(points.size()), agree, q, m));
  }
  {
    Count agree = 0;
    for (std::size_t i = 0; i < lines.size(); ++i)
      agree += le.rank(lines[i]) == Count(i) && le.unrank(Count(i)) == lines[i];
    out.push_back(make_report("line-rank-bijection", Count(lines.size()), agree, q, m));
  }

  if (m >= 4) {
    LineCode code(ps);
    const auto g = oracle::generator_matrix(f, m, lines);
    std::mt19937_64 rng(12345);
    const int samples = level == SelftestLevel::full ? 50 : 10;
    std::vector<Message> ws(samples, Message(code.dimension()));
    for (auto& w : ws)
      for (auto& x : w) x = Elem{static_cast<std::uint32_t>(rng() % f.size())};
    const auto cs = code.encode_many(ws);
    Count enc_ok = 0, dec_ok = 0;
    for (int k = 0; k < samples; ++k) {
      enc_ok += oracle::encode_bf(f, g, ws[k]) == cs[k];
      dec_ok += code.decode(cs[k]) == ws[k];
    }
    out.push_back(make_report("encode-vs-generator-matrix", samples, enc_ok, q, m));
    out.push_back(make_report("decode-round-trip", samples, dec_ok, q, m));
    if (level == SelftestLevel::full) {
      out.push_back(make_report("code-length", Count(lines.size()), code.params().N, q, m));
      try {
        const auto d = oracle::min_distance_bf(f, m, guards);
        out.push_back(make_report("minimum-distance", Count(d), code.params().d_min, q, m));
      } catch (const GuardError&) {
        // Exhaustive distance is out of reach here; the other checks stand.
      }
    }
  }
  return out;
}

}  // namespace hgcode
