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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "hgcode/codec.hpp"
#include "hgcode/line_enum.hpp"
#include "hgcode/oracle.hpp"
#include "hgcode/point_enum.hpp"

using namespace hgcode;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

Message random_message(const Field& f, int m, std::mt19937_64& rng) {
  Message w(message_length(m));
  for (auto& x : w) x = Elem{static_cast<std::uint32_t>(rng() % f.size())};
  return w;
}

template <class Fn>
void all_words(const Field& f, int len, Fn&& fn) {
  Vec w;
  auto rec = [&](auto&& self) -> void {
    fn(static_cast<const Vec&>(w));
    if (static_cast<int>(w.size()) == len) return;
    for (std::uint32_t y = 0; y < f.size(); ++y) {
      w.push_back(Elem{y});
      self(self);
      w.pop_back();
    }
  };
  rec(rec);
}

using PrefixCounts = std::map<std::pair<Vec, Vec>, Count>;

PrefixCounts line_prefix_counts(const std::vector<LineRREF>& lines, int m) {
  PrefixCounts out;
  for (const auto& l : lines)
    for (int t = 0; t <= m; ++t) ++out[{Vec(l.a.begin(), l.a.begin() + t), Vec(l.b.begin(), l.b.begin() + t)}];
  return out;
}

void criterion1(Outcome& o) {
  const Field f(2, 1);
  const auto a = code_params(2, 4), b = code_params(2, 5);
  o.check(a.N == 27 && a.K == 6 && a.d_min == 12, "(4,2) parameters");
  o.check(b.N == 297 && b.K == 10 && b.d_min == 192, "(5,2) parameters");
  o.check(a.N == capN(2, 4) && b.N == capN(2, 5), "N equals line count formula");
  o.check(a.N == Count(oracle::enum_lines_bf(f, 4).size()), "N equals oracle line count at m=4");
  o.check(b.N == Count(oracle::enum_lines_bf(f, 5).size()), "N equals oracle line count at m=5");
  o.detail << " (4,2)=[" << to_string(a.N) << "," << to_string(a.K) << "," << to_string(a.d_min) << "]"
           << " (5,2)=[" << to_string(b.N) << "," << to_string(b.K) << "," << to_string(b.d_min) << "]";
}

void criterion2(Outcome& o) {
  const Field f(2, 1);
  const auto t0 = std::chrono::steady_clock::now();
  const auto d4 = oracle::min_distance_bf(f, 4);
  const double s4 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const auto d5 = oracle::min_distance_bf(f, 5);
  const double s5 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() - s4;
  o.check(Count(d4) == code_params(2, 4).d_min && d4 == 12, "min distance (4,2)");
  o.check(Count(d5) == code_params(2, 5).d_min && d5 == 192, "min distance (5,2)");
  o.check(s4 < 10.0, "(4,2) within 10 s");
  o.check(s5 < 600.0, "(5,2) within 10 min");
  o.detail << " d(4,2)=" << d4 << " d(5,2)=" << d5;
}

void criterion3(Outcome& o) {
  const Field f(2, 1);
  const PolarSpace ps(f, 5);
  const PointEnumerator pe(ps);
  const LineEnumerator le(ps);
  const auto pts = oracle::enum_points_bf(f, 5);
  const auto lines = oracle::enum_lines_bf(f, 5);
  std::size_t np = 0, bad_p = 0;
  all_words(f, 5, [&](const Vec& d) {
    ++np;
    bad_p += pe.theta(d) != oracle::theta_bf(pts, d);
  });
  std::size_t nl = 0, bad_l = 0;
  for (const auto& [k, v] : line_prefix_counts(lines, 5)) {
    ++nl;
    bad_l += le.psi({k.first, k.second}) != oracle::psi_bf(lines, k.first, k.second);
    bad_l += le.psi({k.first, k.second}) != v;
  }
  o.check(np == 1365 && bad_p == 0, "theta agreement");
  o.check(bad_l == 0, "psi agreement");
  o.detail << " point prefixes=" << np << " mismatches=" << bad_p << "; line prefixes=" << nl
           << " mismatches=" << bad_l;
}

void criterion4(Outcome& o) {
  const Field f(2, 1);
  {
    const PolarSpace ps(f, 5);
    const PointEnumerator pe(ps);
    const LineEnumerator le(ps);
    const auto pts = oracle::enum_points_bf(f, 5);
    const auto lines = oracle::enum_lines_bf(f, 5);
    std::size_t bad = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
      bad += pe.rank(pts[i]) != Count(i) || pe.unrank(pe.rank(pts[i])) != pts[i];
    for (std::size_t i = 0; i < lines.size(); ++i)
      bad += le.rank(lines[i]) != Count(i) || le.unrank(le.rank(lines[i])) != lines[i];
    o.check(pts.size() == 165 && lines.size() == 297 && bad == 0, "(5,2) bijections and order");
    o.detail << " (5,2): 165 points, 297 lines, failures=" << bad;
  }
  {
    const PolarSpace ps(f, 6);
    const LineEnumerator le(ps);
    std::size_t bad = 0;
    for (Count i = 0; i < le.size(); ++i) bad += le.rank(le.unrank(i)) != i;
    o.check(le.size() == 6237 && bad == 0, "(6,2) line round trip");
    o.detail << "; (6,2): " << to_string(le.size()) << " lines, failures=" << bad;
  }
}

void criterion5(Outcome& o) {
  const Field f(2, 1);
  const PolarSpace ps(f, 5);
  const PointEnumerator pe(ps);
  const LineEnumerator le(ps);
  std::size_t checked = 0, bad = 0;
  all_words(f, 4, [&](const Vec& d) {
    Count s = 0;
    for (std::uint32_t y = 0; y < f.size(); ++y) {
      Vec e = d;
      e.push_back(Elem{y});
      s += pe.theta(e);
    }
    ++checked;
    bad += s != pe.theta(d);
  });
  // Every proper line prefix whose count is nonzero, plus all 2 x t prefixes
  // for t <= 2 (which include unrealizable ones).
  const auto counts = line_prefix_counts(oracle::enum_lines_bf(f, 5), 5);
  std::vector<LinePrefix> prefixes;
  for (const auto& [k, v] : counts)
    if (k.first.size() < 5) prefixes.push_back({k.first, k.second});
  const std::uint32_t n = f.size();
  std::vector<LinePrefix> level{LinePrefix{}};
  for (int t = 0; t < 3; ++t) {
    std::vector<LinePrefix> next;
    for (const auto& d : level) {
      prefixes.push_back(d);
      for (std::uint32_t c = 0; c < n * n; ++c) {
        LinePrefix e = d;
        e.a.push_back(Elem{c / n});
        e.b.push_back(Elem{c % n});
        next.push_back(e);
      }
    }
    level = std::move(next);
  }
  for (const auto& d : prefixes) {
    Count s = 0;
    for (std::uint32_t c = 0; c < n * n; ++c) {
      LinePrefix e = d;
      e.a.push_back(Elem{c / n});
      e.b.push_back(Elem{c % n});
      s += le.psi(e);
    }
    ++checked;
    bad += s != le.psi(d);
  }
  o.check(bad == 0, "consistency sums");
  o.detail << " identities checked=" << checked << " failures=" << bad;
}

void criterion6(Outcome& o) {
  std::mt19937_64 rng(2026);
  for (auto [p, m] : {std::pair{2u, 4}, {2u, 5}, {2u, 6}, {2u, 7}, {3u, 5}}) {
    const Field f(p, 1);
    const PolarSpace ps(f, m);
    const LineCode code(ps);
    std::size_t bad = 0;
    const int total = 500, batch = 100;
    for (int start = 0; start < total; start += batch) {
      std::vector<Message> ws;
      for (int k = 0; k < batch; ++k) ws.push_back(random_message(f, m, rng));
      const auto cs = code.encode_many(ws);
      for (int k = 0; k < batch; ++k) bad += code.decode(cs[k]) != ws[k];
    }
    o.check(bad == 0, "decode round trip at (" + std::to_string(m) + "," + std::to_string(p) + ")");
    o.detail << " (" << m << "," << p << "):" << total - static_cast<int>(bad) << "/" << total;
  }
}

void criterion7(Outcome& o) {
  const Field f(2, 1);
  const Count q4 = 16;
  std::mt19937_64 rng(77);
  double c_psi = 0, c_rank = 0;
  for (int m : {15, 21, 27}) {
    const PolarSpace ps(f, m);
    const LineEnumerator le(ps);
    std::uint64_t psi_max = 0, rank_max = 0;
    for (int k = 0; k < 5; ++k) {
      const Count r = static_cast<Count>(rng() % static_cast<std::uint64_t>(std::min<Count>(le.size(), Count(1) << 62)));
      const LineRREF l = le.unrank(r);
      for (int t = 0; t <= m; ++t) {
        const LinePrefix d{Vec(l.a.begin(), l.a.begin() + t), Vec(l.b.begin(), l.b.begin() + t)};
        MulCounter mc;
        le.psi(d);
        psi_max = std::max(psi_max, mc.count());
      }
      MulCounter mc;
      const Count back = le.rank(l);
      rank_max = std::max(rank_max, mc.count());
      o.check(back == r, "rank round trip at m=" + std::to_string(m));
    }
    const double psi_ratio = double(psi_max) / (double(m) * m);
    const double rank_ratio = double(rank_max) / (double(q4) * m * m * m);
    if (m == 15) {
      c_psi = psi_ratio;
      c_rank = rank_ratio;
    } else {
      o.check(psi_ratio <= c_psi, "psi multiplications within c m^2 at m=" + std::to_string(m));
      o.check(rank_ratio <= c_rank, "line_rank multiplications within c' q^4 m^3 at m=" + std::to_string(m));
    }
    o.detail << " m=" << m << ": psi<=" << psi_max << " rank<=" << rank_max;
  }
  o.detail << " (c=" << c_psi << ", c'=" << c_rank << ")";
}

void criterion8(Outcome& o) {
  const Field f(2, 1);
  const PolarSpace ps(f, 6);
  const LineCode code(ps);
  std::mt19937_64 rng(8);
  const int trials = 200, minority_trials = 100;
  std::vector<Message> ws;
  for (int k = 0; k < trials + minority_trials; ++k) ws.push_back(random_message(f, 6, rng));
  const auto cs = code.encode_many(ws);
  auto nonzero = [&] { return Elem{static_cast<std::uint32_t>(1 + rng() % (f.size() - 1))}; };
  int single_ok = 0, minority_ok = 0;
  for (int k = 0; k < trials; ++k) {
    Codeword r = cs[k];
    const std::size_t x = rng() % code.length();
    r[x] = f.add(r[x], nonzero());
    single_ok += code.correct(r, {Count(x)}).front() == cs[k][x];
  }
  for (int k = trials; k < trials + minority_trials; ++k) {
    Codeword r = cs[k];
    const std::size_t x = rng() % code.length();
    r[x] = f.add(r[x], nonzero());
    const auto planes = code.pencil_probes(Count(x));
    const auto& bad_plane = planes[rng() % planes.size()];
    for (const auto& pr : bad_plane.probes) {
      const auto i = static_cast<std::size_t>(pr.rank);
      r[i] = f.add(r[i], nonzero());
    }
    minority_ok += code.correct(r, {Count(x)}).front() == cs[k][x];
  }
  o.check(single_ok == trials, "single-error recovery");
  o.check(minority_ok == minority_trials, "recovery with one corrupted plane");
  o.detail << " single error " << single_ok << "/" << trials << "; one of 3 planes corrupted " << minority_ok << "/"
           << minority_trials;
}

void criterion9(Outcome& o) {
  std::mt19937_64 rng(9);
  for (auto [p, m] : {std::pair{2u, 4}, {2u, 5}, {2u, 6}, {2u, 7}, {3u, 5}}) {
    const Field f(p, 1);
    const PolarSpace ps(f, m);
    const LineCode code(ps);
    const int samples = 100;
    std::vector<Message> ws;
    std::vector<std::pair<Elem, Elem>> coeffs;
    for (int k = 0; k < samples; ++k) {
      const Message w = random_message(f, m, rng), v = random_message(f, m, rng);
      const Elem a{static_cast<std::uint32_t>(rng() % f.size())}, b{static_cast<std::uint32_t>(rng() % f.size())};
      Message mix(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) mix[i] = f.add(f.mul(a, w[i]), f.mul(b, v[i]));
      ws.push_back(w);
      ws.push_back(v);
      ws.push_back(mix);
      coeffs.emplace_back(a, b);
    }
    const auto cs = code.encode_many(ws);
    std::size_t bad = 0, light = 0;
    for (int k = 0; k < samples; ++k) {
      const auto [a, b] = coeffs[k];
      for (std::size_t i = 0; i < code.length(); ++i)
        if (cs[3 * k + 2][i] != f.add(f.mul(a, cs[3 * k][i]), f.mul(b, cs[3 * k + 1][i]))) {
          ++bad;
          break;
        }
      for (int j = 0; j < 3; ++j) {
        if (std::all_of(ws[3 * k + j].begin(), ws[3 * k + j].end(), [](Elem x) { return x == Field::zero(); }))
          continue;
        const auto weight = std::count_if(cs[3 * k + j].begin(), cs[3 * k + j].end(),
                                          [](Elem x) { return x != Field::zero(); });
        light += Count(weight) < code.params().d_min;
      }
    }
    o.check(bad == 0, "linearity at (" + std::to_string(m) + "," + std::to_string(p) + ")");
    o.check(light == 0, "nonzero codeword below d_min at (" + std::to_string(m) + "," + std::to_string(p) + ")");
    o.detail << " (" << m << "," << p << "):" << samples - static_cast<int>(bad) << "/" << samples;
  }
  o.detail << "; kernel trivial by decode round trips";
}

struct Criterion {
  int id;
  const char* name;
  double time_limit;  // seconds
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "code parameters", 1.0, criterion1},
      {2, "exhaustive minimum distance", 610.0, criterion2},
      {3, "prefix counts versus oracle", 60.0, criterion3},
      {4, "enumerator bijections", 120.0, criterion4},
      {5, "consistency identities", 120.0, criterion5},
      {6, "decoder round trip", 120.0, criterion6},
      {7, "cost contract", 120.0, criterion7},
      {8, "pencil-of-planes correction", 300.0, criterion8},
      {9, "linearity and injectivity", 300.0, criterion9},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.time_limit) {
      o.ok = false;
      o.detail << " [over time limit " << c.time_limit << " s]";
    }
    all = all && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "):" << o.detail.str() << " ["
              << secs << " s]" << std::endl;
  }
  return all ? 0 : 1;
}
