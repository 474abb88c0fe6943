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

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hgcode/geometry.hpp"
#include "hgcode/gf.hpp"

namespace hgcode {

/// A message of length K = m(m-1)/2: the strict upper triangle of W_0 read
/// row by row.
using Message = Vec;
using Codeword = Vec;

inline std::size_t message_length(int m) { return static_cast<std::size_t>(m) * (m - 1) / 2; }

/// Position of the entry (i, j), 0 <= i < j < m, inside a message.
inline std::size_t pair_index(int m, int i, int j) {
  if (!(0 <= i && i < j && j < m)) throw std::out_of_range("hgcode: pair index needs 0 <= i < j < m");
  return static_cast<std::size_t>(i) * (2 * m - i - 1) / 2 + (j - i - 1);
}

/// The alternating Gram matrix W = W_0 - W_0^T of a message.
class GramMatrix {
 public:
  GramMatrix(const Field& f, int m, const Message& w) : m_(m), w_(static_cast<std::size_t>(m) * m, Field::zero()) {
    if (w.size() != message_length(m)) throw std::invalid_argument("hgcode: message has the wrong length");
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        Elem v = w[pair_index(m, i, j)];
        w_[i * m + j] = v;
        w_[j * m + i] = f.neg(v);
      }
  }

  int m() const { return m_; }
  Elem at(int i, int j) const { return w_[static_cast<std::size_t>(i) * m_ + j]; }

  /// x W y^T, the alternating form evaluated on (x, y).
  Elem eval(const Field& f, const Vec& x, const Vec& y) const {
    Elem r = Field::zero();
    for (int i = 0; i < m_; ++i) {
      if (x[i] == Field::zero()) continue;
      Elem row = Field::zero();
      for (int j = 0; j < m_; ++j)
        if (y[j] != Field::zero()) row = f.add(row, f.mul(at(i, j), y[j]));
      r = f.add(r, f.mul(x[i], row));
    }
    return r;
  }

 private:
  int m_;
  std::vector<Elem> w_;
};

}  // namespace hgcode
