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
 * @file geometry.hpp
 * @brief The Hermitian form, its isotropic points and lines, and canonical forms.
 *
 * Coordinates are 0-based in code. For odd dimension the form is
 *
 *     eta(X, Y) = x_0^q y_0 + sum_k (x_{2k-1}^q y_{2k} + x_{2k}^q y_{2k-1}),
 *
 * i.e. coordinate 0 is unpaired and (1,2), (3,4), ... are hyperbolic pairs.
 * An even-dimensional space is the hyperplane x_0 = 0 of the next odd one;
 * PolarSpace hides that lift from callers.
 */

#pragma once

#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hgcode/count.hpp"
#include "hgcode/gf.hpp"

namespace hgcode {

using Vec = std::vector<Elem>;

/// Partial form on the leading t coordinates (odd-dimension convention).
/// A pair whose second coordinate lies beyond t contributes nothing.
inline Elem eta(const Field& f, const Vec& x, const Vec& y, std::size_t t) {
  if (t > x.size() || t > y.size()) throw std::invalid_argument("hgcode: eta prefix longer than vector");
  if (t == 0) return Field::zero();
  Elem r = f.mul(f.conj(x[0]), y[0]);
  for (std::size_t i = 1; i + 1 < t; i += 2) {
    r = f.add(r, f.add(f.mul(f.conj(x[i]), y[i + 1]), f.mul(f.conj(x[i + 1]), y[i])));
  }
  return r;
}

inline Elem eta(const Field& f, const Vec& x, const Vec& y) { return eta(f, x, y, x.size()); }

inline bool is_isotropic_point(const Field& f, const Vec& x) { return eta(f, x, x) == Field::zero(); }

/// Number of points of a non-degenerate Hermitian variety in PG(m-1, q^2).
inline Count mu(std::uint32_t q, int m) {
  if (m < 0) throw std::invalid_argument("hgcode: negative dimension");
  if (m < 2) return 0;
  const Count sign = (m % 2 == 1) ? 1 : -1;
  const Count a = ipow(q, static_cast<unsigned>(m)) + sign;
  const Count b = ipow(q, static_cast<unsigned>(m - 1)) - sign;
  return exact_div(checked_mul(a, b), Count(q) * q - 1, "mu");
}

/// Number of totally isotropic lines of the same variety.
inline Count capN(std::uint32_t q, int m) {
  if (m < 0) throw std::invalid_argument("hgcode: negative dimension");
  if (m < 3) return 0;
  return exact_div(checked_mul(mu(q, m), mu(q, m - 2)), Count(q) * q + 1, "N_m");
}

/// A 2 x m matrix in row-reduced echelon form.
struct LineRREF {
  Vec a, b;

  std::size_t size() const { return a.size(); }
  friend bool operator==(const LineRREF&, const LineRREF&) = default;
  /// Column-wise lexicographic order, each column (a_j, b_j) compared lexicographically.
  friend std::strong_ordering operator<=>(const LineRREF& x, const LineRREF& y) {
    for (std::size_t j = 0; j < x.a.size() && j < y.a.size(); ++j) {
      if (auto c = x.a[j] <=> y.a[j]; c != 0) return c;
      if (auto c = x.b[j] <=> y.b[j]; c != 0) return c;
    }
    return x.a.size() <=> y.a.size();
  }
};

inline std::size_t leading_index(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != Field::zero()) return i;
  return v.size();
}

inline bool is_zero(const Vec& v) { return leading_index(v) == v.size(); }

/// The representative of <x> whose first nonzero entry is 1.
inline Vec normalize(const Field& f, const Vec& x) {
  std::size_t i = leading_index(x);
  if (i == x.size()) throw std::invalid_argument("hgcode: cannot normalize the zero vector");
  Elem s = f.inv(x[i]);
  Vec out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) out[j] = f.mul(s, x[j]);
  return out;
}

inline bool is_normalized(const Vec& x) {
  std::size_t i = leading_index(x);
  return i < x.size() && x[i] == Field::one();
}

inline bool is_rref(const LineRREF& l) {
  if (l.a.size() != l.b.size()) return false;
  std::size_t pa = leading_index(l.a), pb = leading_index(l.b);
  if (pa == l.a.size() || pb == l.b.size() || pa >= pb) return false;
  return l.a[pa] == Field::one() && l.b[pb] == Field::one() && l.a[pb] == Field::zero();
}

/// All three Gram values of the rows vanish (odd-dimension convention).
inline bool is_isotropic_line(const Field& f, const LineRREF& l) {
  const Elem z = Field::zero();
  return eta(f, l.a, l.a) == z && eta(f, l.b, l.b) == z && eta(f, l.a, l.b) == z;
}

/// The RREF basis (A; B) of <u, v> and det(M) where (u; v) = M (A; B).
inline std::pair<LineRREF, Elem> rref_of_pair(const Field& f, const Vec& u, const Vec& v) {
  if (u.size() != v.size()) throw std::invalid_argument("hgcode: vectors of different length");
  Vec r0 = u, r1 = v;
  const std::size_t n = u.size();
  Elem det_t = Field::one();  // determinant of T with T (u; v) = (A; B)

  auto scale = [&](Vec& r, Elem s) {
    for (auto& x : r) x = f.mul(s, x);
  };
  auto axpy = [&](Vec& r, Elem s, const Vec& src) {  // r -= s * src
    for (std::size_t k = 0; k < n; ++k) r[k] = f.sub(r[k], f.mul(s, src[k]));
  };

  std::size_t j = 0;
  while (j < n && r0[j] == Field::zero() && r1[j] == Field::zero()) ++j;
  if (j == n) throw std::invalid_argument("hgcode: linearly dependent vectors");
  if (r0[j] == Field::zero()) {
    std::swap(r0, r1);
    det_t = f.neg(det_t);
  }
  Elem s0 = f.inv(r0[j]);
  scale(r0, s0);
  det_t = f.mul(det_t, s0);
  if (r1[j] != Field::zero()) axpy(r1, r1[j], r0);

  std::size_t k = j + 1;
  while (k < n && r1[k] == Field::zero()) ++k;
  if (k == n) throw std::invalid_argument("hgcode: linearly dependent vectors");
  Elem s1 = f.inv(r1[k]);
  scale(r1, s1);
  det_t = f.mul(det_t, s1);
  if (r0[k] != Field::zero()) axpy(r0, r0[k], r1);

  return {LineRREF{std::move(r0), std::move(r1)}, f.inv(det_t)};
}

/// Prepends a zero coordinate, embedding V(m) as x_0 = 0 in V(m + 1).
inline Vec lift_even(const Vec& x, std::size_t m_even) {
  if (m_even % 2 != 0) throw std::invalid_argument("hgcode: lift_even needs an even dimension");
  if (x.size() > m_even) throw std::invalid_argument("hgcode: vector longer than the space");
  Vec out;
  out.reserve(x.size() + 1);
  out.push_back(Field::zero());
  out.insert(out.end(), x.begin(), x.end());
  return out;
}

inline LineRREF lift_even(const LineRREF& l, std::size_t m_even) {
  return LineRREF{lift_even(l.a, m_even), lift_even(l.b, m_even)};
}

/// A Hermitian polar space H_m over GF(q^2), for either parity of m.
///
/// Vectors passed in and returned use the caller's m coordinates; for even m
/// they are lifted to the odd ambient space by prepending a zero.
class PolarSpace {
 public:
  PolarSpace(const Field& f, int m) : f_(&f), m_(m) {
    if (m < 2) throw std::invalid_argument("hgcode: dimension must be >= 2");
    if (m > max_supported_dimension(f.q()))
      throw std::domain_error("hgcode: dimension " + std::to_string(m) + " exceeds the 128-bit count range for q = " +
                              std::to_string(f.q()));
    ambient_ = (m % 2 == 1) ? m : m + 1;
    mu_.resize(ambient_ + 1);
    capn_.resize(ambient_ + 1);
    qpow_.resize(2 * ambient_ + 2);
    for (int k = 0; k <= ambient_; ++k) {
      mu_[k] = hgcode::mu(f.q(), k);
      capn_[k] = hgcode::capN(f.q(), k);
    }
    for (std::size_t k = 0; k < qpow_.size(); ++k) qpow_[k] = ipow(f.q(), static_cast<unsigned>(k));
  }

  /// Largest m whose counts (and intermediate products) fit in Count.
  static int max_supported_dimension(std::uint32_t q) {
    // Intermediate products stay below q^{4M+6}; keep them under 2^125.
    const double bits = std::log2(static_cast<double>(q));
    int m = 3;
    while ((4.0 * (m + 2) + 6.0) * bits <= 125.0) m += 2;
    return m;  // odd ambient bound; an even m lifts to m + 1 <= bound
  }

  const Field& field() const { return *f_; }
  int m() const { return m_; }
  /// Dimension of the odd ambient space (m or m + 1).
  int ambient() const { return ambient_; }
  bool lifted() const { return ambient_ != m_; }
  std::uint32_t q() const { return f_->q(); }

  Count mu_at(int k) const { return k < 0 ? 0 : mu_.at(k); }
  Count capN_at(int k) const { return k < 0 ? 0 : capn_.at(k); }
  Count qpow(int k) const { return qpow_.at(k); }
  Count num_points() const { return mu_[m_]; }
  Count num_lines() const { return capn_[m_]; }

  Vec lift(const Vec& x) const { return lifted() ? lift_even(x, m_) : x; }
  LineRREF lift(const LineRREF& l) const { return lifted() ? lift_even(l, m_) : l; }

  Vec unlift(const Vec& x) const {
    if (!lifted()) return x;
    if (x.empty() || x[0] != Field::zero()) throw std::logic_error("hgcode: vector is not in the even hyperplane");
    return Vec(x.begin() + 1, x.end());
  }
  LineRREF unlift(const LineRREF& l) const { return LineRREF{unlift(l.a), unlift(l.b)}; }

  /// The form of H_m on full-length vectors in the caller's coordinates.
  Elem form(const Vec& x, const Vec& y) const {
    check_length(x);
    check_length(y);
    return eta(*f_, lift(x), lift(y));
  }

  bool is_point(const Vec& x) const {
    check_length(x);
    return !is_zero(x) && form(x, x) == Field::zero();
  }

  bool is_line(const LineRREF& l) const {
    check_length(l.a);
    check_length(l.b);
    return is_rref(l) && is_isotropic_line(*f_, lift(l));
  }

  void check_length(const Vec& x) const {
    if (x.size() != static_cast<std::size_t>(m_))
      throw std::invalid_argument("hgcode: expected a vector of length " + std::to_string(m_));
  }

 private:
  const Field* f_;
  int m_;
  int ambient_;
  std::vector<Count> mu_, capn_, qpow_;
};

}  // namespace hgcode
