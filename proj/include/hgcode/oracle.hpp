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

/**
 * @file oracle.hpp
 * @brief Brute-force reference implementations for small instances.
 *
 * Nothing here uses the prefix counters or the lifted coordinates: the form
 * is written out directly for both parities of m, points and lines are
 * produced by exhaustive enumeration, and the code is built from an explicit
 * generator matrix. Every function checks a hard feasibility limit and throws
 * GuardError instead of running for hours.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgcode/count.hpp"
#include "hgcode/geometry.hpp"
#include "hgcode/gf.hpp"
#include "hgcode/message.hpp"

namespace hgcode {

/// A brute-force computation would exceed its feasibility limit.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace oracle {

/// Limits; `unguarded()` lifts them for callers that insist.
struct Guards {
  double max_point_space = 4294967296.0;  // q^{2m}
  double max_rref_count = 134217728.0;    // number of 2 x m RREF matrices
  double max_codeword_ops = 2.0e9;        // (q^{2K} / (q^2 - 1)) * N
  static Guards unguarded() {
    const double inf = std::numeric_limits<double>::infinity();
    return {inf, inf, inf};
  }
};

/// The form of H_m written out directly in m coordinates. Odd m: coordinate
/// 0 unpaired, pairs (1,2), (3,4), ...; even m: pairs (0,1), (2,3), ...
inline Elem form_bf(const Field& f, const Vec& x, const Vec& y) {
  const std::size_t m = x.size();
  Elem r = Field::zero();
  std::size_t start = 0;
  if (m % 2 == 1) {
    r = f.mul(f.pow(x[0], f.q()), y[0]);
    start = 1;
  }
  for (std::size_t i = start; i + 1 < m; i += 2) {
    r = f.add(r, f.mul(f.pow(x[i], f.q()), y[i + 1]));
    r = f.add(r, f.mul(f.pow(x[i + 1], f.q()), y[i]));
  }
  return r;
}

/// All normalized isotropic vectors of H_m, sorted lexicographically.
inline std::vector<Vec> enum_points_bf(const Field& f, int m, const Guards& g = {}) {
  if (std::pow(static_cast<double>(f.size()), m) > g.max_point_space)
    throw GuardError("oracle: point enumeration exceeds q^{2m} limit");
  std::vector<Vec> out;
  const std::uint32_t n = f.size();
  for (int lead = 0; lead < m; ++lead) {
    Vec x(m, Field::zero());
    x[lead] = Field::one();
    // Odometer over the free tail.
    while (true) {
      if (form_bf(f, x, x) == Field::zero()) out.push_back(x);
      int k = m - 1;
      while (k > lead && x[k].code + 1 == n) x[k--] = Field::zero();
      if (k == lead) break;
      x[k] = Elem{x[k].code + 1};
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline double rref_count(std::uint32_t n, int m) {
  // Gaussian binomial [m choose 2]_n.
  double a = std::pow(double(n), m) - 1, b = std::pow(double(n), m - 1) - 1;
  return a * b / ((double(n) * n - 1) * (double(n) - 1));
}

/// All RREF matrices of totally isotropic lines, column-lexicographically sorted.
inline std::vector<LineRREF> enum_lines_bf(const Field& f, int m, const Guards& g = {}) {
  if (rref_count(f.size(), m) > g.max_rref_count) throw GuardError("oracle: line enumeration exceeds RREF count limit");
  std::vector<LineRREF> out;
  const std::uint32_t n = f.size();
  for (int p1 = 0; p1 < m; ++p1)
    for (int p2 = p1 + 1; p2 < m; ++p2) {
      // Free slots: A after p1 except p2, B after p2.
      std::vector<std::pair<int, int>> slots;
      for (int j = p1 + 1; j < m; ++j)
        if (j != p2) slots.push_back({0, j});
      for (int j = p2 + 1; j < m; ++j) slots.push_back({1, j});
      LineRREF l{Vec(m, Field::zero()), Vec(m, Field::zero())};
      l.a[p1] = Field::one();
      l.b[p2] = Field::one();
      std::vector<std::uint32_t> digit(slots.size(), 0);
      while (true) {
        for (std::size_t s = 0; s < slots.size(); ++s) (slots[s].first == 0 ? l.a : l.b)[slots[s].second] = Elem{digit[s]};
        if (form_bf(f, l.a, l.a) == Field::zero() && form_bf(f, l.b, l.b) == Field::zero() &&
            form_bf(f, l.a, l.b) == Field::zero())
          out.push_back(l);
        std::size_t k = 0;
        while (k < digit.size() && digit[k] + 1 == n) digit[k++] = 0;
        if (k == digit.size()) break;
        ++digit[k];
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline Count theta_bf(const std::vector<Vec>& points, const Vec& prefix) {
  return std::count_if(points.begin(), points.end(),
                       [&](const Vec& x) { return std::equal(prefix.begin(), prefix.end(), x.begin()); });
}

inline Count psi_bf(const std::vector<LineRREF>& lines, const Vec& top, const Vec& bottom) {
  return std::count_if(lines.begin(), lines.end(), [&](const LineRREF& l) {
    return std::equal(top.begin(), top.end(), l.a.begin()) && std::equal(bottom.begin(), bottom.end(), l.b.begin());
  });
}

/// K x N generator matrix: column of line (A; B) holds a_i b_j - a_j b_i for
/// each pair i < j, in message order. Rows are stored contiguously.
struct GeneratorMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Elem> data;

  Elem at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

inline GeneratorMatrix generator_matrix(const Field& f, int m, const std::vector<LineRREF>& lines) {
  GeneratorMatrix g;
  g.rows = message_length(m);
  g.cols = lines.size();
  g.data.assign(g.rows * g.cols, Field::zero());
  for (std::size_t c = 0; c < lines.size(); ++c) {
    const auto& l = lines[c];
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        g.data[pair_index(m, i, j) * g.cols + c] = f.sub(f.mul(l.a[i], l.b[j]), f.mul(l.a[j], l.b[i]));
  }
  return g;
}

inline GeneratorMatrix generator_matrix(const Field& f, int m, const Guards& g = {}) {
  return generator_matrix(f, m, enum_lines_bf(f, m, g));
}

inline Codeword encode_bf(const Field& f, const GeneratorMatrix& g, const Message& w) {
  Codeword c(g.cols, Field::zero());
  for (std::size_t r = 0; r < g.rows; ++r) {
    if (w[r] == Field::zero()) continue;
    for (std::size_t k = 0; k < g.cols; ++k) c[k] = f.add(c[k], f.mul(w[r], g.at(r, k)));
  }
  return c;
}

/// Minimum Hamming weight over all nonzero codewords, by exhaustive search.
/// Scalar multiples share a weight, so only messages whose first nonzero
/// entry is 1 are visited.
inline std::size_t min_distance_bf(const Field& f, int m, const Guards& guards = {}) {
  const std::uint32_t n = f.size();
  const std::size_t K = message_length(m);
  const GeneratorMatrix g = generator_matrix(f, m, guards);
  const std::size_t N = g.cols;
  if (std::pow(double(n), double(K)) / (n - 1) * double(N) > guards.max_codeword_ops)
    throw GuardError("oracle: exhaustive minimum distance exceeds the work limit");

  // multiples[r][a] = a * row r
  std::vector<std::vector<Codeword>> multiples(K, std::vector<Codeword>(n, Codeword(N)));
  for (std::size_t r = 0; r < K; ++r)
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::size_t k = 0; k < N; ++k) multiples[r][a][k] = f.mul(Elem{a}, g.at(r, k));

  std::size_t best = N;
  std::vector<Codeword> acc(K + 1, Codeword(N, Field::zero()));
  auto weight = [&](const Codeword& c) {
    return static_cast<std::size_t>(std::count_if(c.begin(), c.end(), [](Elem x) { return x != Field::zero(); }));
  };
  auto add_into = [&](Codeword& dst, const Codeword& src, const Codeword& row) {
    for (std::size_t k = 0; k < N; ++k) dst[k] = f.add(src[k], row[k]);
  };
  // Depth-first over coefficients r+1.., with acc[r+1] the partial sum.
  auto rec = [&](auto&& self, std::size_t r) -> void {
    if (r == K) {
      best = std::min(best, weight(acc[K]));
      return;
    }
    for (std::uint32_t a = 0; a < n; ++a) {
      add_into(acc[r + 1], acc[r], multiples[r][a]);
      self(self, r + 1);
    }
  };
  // Leading coefficient 1 at position lead, zeros before it.
  for (std::size_t lead = 0; lead < K; ++lead) {
    std::fill(acc[lead].begin(), acc[lead].end(), Field::zero());
    add_into(acc[lead + 1], acc[lead], multiples[lead][1]);
    rec(rec, lead + 1);
  }
  return best;
}

/// One oracle-versus-fast-path comparison.
struct OracleReport {
  std::string quantity;
  Count oracle = 0;
  Count fast = 0;
  bool agree = false;
  std::uint32_t q = 0;
  int m = 0;

  std::string to_line() const {
    std::ostringstream os;
    os << (agree ? "AGREE " : "DISAGREE ") << quantity << " q=" << q << " m=" << m << " oracle=" << to_string(oracle)
       << " fast=" << to_string(fast);
    return os.str();
  }
};

inline OracleReport make_report(std::string quantity, Count oracle, Count fast, std::uint32_t q, int m) {
  return OracleReport{std::move(quantity), oracle, fast, oracle == fast, q, m};
}

}  // namespace oracle
}  // namespace hgcode
