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
 * @file point_enum.hpp
 * @brief Prefix counting and lexicographic rank/unrank for points of H_m.
 *
 * theta(D) counts the normalized isotropic vectors that begin with D. The
 * rank of X is the sum, over each position j, of theta(X_{<j} | y) for every
 * y preceding X_j in the encoding order; unrank inverts that greedily.
 */

#pragma once

#include <stdexcept>

#include "hgcode/count.hpp"
#include "hgcode/geometry.hpp"
#include "hgcode/gf.hpp"

namespace hgcode {

/// What theta needs to know about a prefix, maintained column by column.
struct PointPrefixState {
  std::size_t t = 0;
  bool valid = true;     // first nonzero entry (if any) is 1
  bool nonzero = false;
  Elem last{};           // d_t
  Elem self{};           // eta over the complete pairs of the prefix

  PointPrefixState extend(const Field& f, Elem x) const {
    PointPrefixState s = *this;
    s.t = t + 1;
    if (!nonzero) {
      if (x == Field::one()) {
        s.nonzero = true;
      } else if (x != Field::zero()) {
        s.valid = false;
      }
    }
    if (t == 0) {
      s.self = f.norm(x);
    } else if (t % 2 == 0) {
      // Coordinate t closes the pair (t - 1, t).
      s.self = f.add(self, f.trace(f.mul(f.conj(last), x)));
    }
    s.last = x;
    return s;
  }
};

namespace detail {

/// theta for a prefix of odd length t that is not all zero.
inline Count theta_odd_nonzero(const PolarSpace& ps, int t, Elem self) {
  const Count q = ps.q();
  const int rest = ps.ambient() - t;
  const Count s = checked_add(checked_mul(q * q - 1, ps.mu_at(rest)), 1);
  if (self == Field::zero()) return s;
  return exact_div(ps.qpow(2 * rest) - s, q - 1, "theta");
}

/// Closed-form theta of a valid prefix, in ambient coordinates.
inline Count theta_closed(const PolarSpace& ps, int t, bool nonzero, Elem last, Elem self) {
  const Count q = ps.q();
  const int M = ps.ambient();
  if (t % 2 == 1) {
    if (!nonzero) return ps.mu_at(M - t);
    return theta_odd_nonzero(ps, t, self);
  }
  if (!nonzero) {
    // theta(D|0) + theta(D|1); D|1 is anisotropic only when D is empty.
    Elem next_self = (t == 0) ? Field::one() : Field::zero();
    return checked_add(ps.mu_at(M - t - 1), theta_odd_nonzero(ps, t + 1, next_self));
  }
  if (last == Field::zero()) return checked_mul(q * q, theta_odd_nonzero(ps, t + 1, self));
  return ps.qpow(2 * (M - t) - 1);
}

inline Count theta_of(const PolarSpace& ps, const PointPrefixState& s) {
  if (!s.valid) return 0;
  return theta_closed(ps, static_cast<int>(s.t), s.nonzero, s.last, s.self);
}

}  // namespace detail

class PointEnumerator {
 public:
  explicit PointEnumerator(const PolarSpace& ps) : ps_(&ps) {}

  const PolarSpace& space() const { return *ps_; }
  Count size() const { return ps_->num_points(); }

  /// Number of points of H_m whose normalized vector begins with prefix
  /// (given in the caller's m coordinates).
  Count theta(const Vec& prefix) const {
    if (prefix.size() > static_cast<std::size_t>(ps_->m())) throw std::invalid_argument("hgcode: prefix longer than m");
    return theta_ambient(ps_->lifted() ? lift_even(prefix, ps_->m()) : prefix);
  }

  /// theta on an ambient (odd-dimension) prefix.
  Count theta_ambient(const Vec& prefix) const {
    if (prefix.size() > static_cast<std::size_t>(ps_->ambient()))
      throw std::invalid_argument("hgcode: prefix longer than the ambient dimension");
    PointPrefixState s;
    for (Elem x : prefix) {
      s = s.extend(ps_->field(), x);
      if (!s.valid) return 0;
    }
    return detail::theta_of(*ps_, s);
  }

  Count rank(const Vec& x) const {
    ps_->check_length(x);
    if (!is_normalized(x)) throw std::invalid_argument("hgcode: point vector is not normalized");
    if (!ps_->is_point(x)) throw std::invalid_argument("hgcode: vector is not isotropic");
    const Field& f = ps_->field();
    PointPrefixState s = root();
    Count r = 0;
    for (Elem xj : x) {
      for (std::uint32_t y = 0; y < xj.code; ++y) r += detail::theta_of(*ps_, s.extend(f, Elem{y}));
      s = s.extend(f, xj);
    }
    return r;
  }

  Vec unrank(Count i) const {
    if (i < 0 || i >= size()) throw std::out_of_range("hgcode: point rank " + to_string(i) + " out of range");
    const Field& f = ps_->field();
    PointPrefixState s = root();
    Vec out;
    out.reserve(ps_->m());
    for (int k = 0; k < ps_->m(); ++k) {
      bool chosen = false;
      for (std::uint32_t y = 0; y < f.size(); ++y) {
        auto next = s.extend(f, Elem{y});
        Count c = detail::theta_of(*ps_, next);
        if (c == 0) continue;
        if (i < c) {
          s = next;
          out.push_back(Elem{y});
          chosen = true;
          break;
        }
        i -= c;
      }
      if (!chosen) throw std::logic_error("hgcode: point unrank ran past the last extension");
    }
    return out;
  }

 private:
  PointPrefixState root() const {
    PointPrefixState s;
    if (ps_->lifted()) s = s.extend(ps_->field(), Field::zero());
    return s;
  }

  const PolarSpace* ps_;
};

}  // namespace hgcode
