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
 * @file line_enum.hpp
 * @brief Prefix counting and rank/unrank for totally isotropic lines of H_m.
 *
 * A line is identified with its 2 x m RREF matrix, read as a word over the
 * alphabet GF(q^2)^2 of columns (compared first on the top entry, then on
 * the bottom one). psi(D) counts the isotropic lines whose RREF starts with
 * the column sequence D.
 *
 * psi is evaluated by a case analysis on the prefix length parity and on
 * which rows are still zero. Every case depends only on the prefix length,
 * which rows are nonzero, the last column (even lengths) and the three Gram
 * values over complete coordinate pairs, so the recursion carries exactly
 * that summary instead of the prefix itself. Odd-length nodes are memoized
 * per evaluation on that summary; this keeps a single evaluation to O(m)
 * nodes with O(1) field work each.
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hgcode/count.hpp"
#include "hgcode/geometry.hpp"
#include "hgcode/gf.hpp"
#include "hgcode/point_enum.hpp"

namespace hgcode {

/// A 2 x t column prefix.
struct LinePrefix {
  Vec a, b;

  std::size_t size() const { return a.size(); }
};

namespace stats {
/// psi recursion nodes visited on this thread (all parities / odd only).
inline thread_local std::uint64_t psi_nodes = 0;
inline thread_local std::uint64_t psi_odd_nodes = 0;
}  // namespace stats

/// Everything psi depends on, maintained column by column.
struct LinePrefixState {
  std::size_t t = 0;
  bool valid = true;   // the columns can start the RREF of a rank-2 matrix
  bool a_nz = false;   // row A has its pivot inside the prefix
  bool b_nz = false;   // row B has its pivot inside the prefix
  Elem a_last{}, b_last{};
  Elem aa{}, bb{}, ab{};  // eta(A,A), eta(B,B), eta(A,B) over complete pairs

  LinePrefixState extend(const Field& f, Elem x, Elem y) const {
    LinePrefixState s = *this;
    s.t = t + 1;
    const Elem z = Field::zero(), one = Field::one();
    if (!a_nz) {
      // Before A's pivot both entries vanish; A's pivot column is (1, 0).
      if (y != z || (x != z && x != one)) s.valid = false;
      if (x == one) s.a_nz = true;
    } else if (!b_nz) {
      if (y == one) {
        if (x != z) s.valid = false;  // zero above B's pivot
        s.b_nz = true;
      } else if (y != z) {
        s.valid = false;
      }
    }
    if (t == 0) {
      s.aa = f.norm(x);
      s.bb = f.norm(y);
      s.ab = f.mul(f.conj(x), y);
    } else if (t % 2 == 0) {
      s.aa = f.add(aa, f.trace(f.mul(f.conj(a_last), x)));
      s.bb = f.add(bb, f.trace(f.mul(f.conj(b_last), y)));
      s.ab = f.add(ab, f.add(f.mul(f.conj(a_last), y), f.mul(f.conj(x), b_last)));
    }
    s.a_last = x;
    s.b_last = y;
    return s;
  }
};

class LineEnumerator {
 public:
  explicit LineEnumerator(const PolarSpace& ps) : ps_(&ps) {}

  const PolarSpace& space() const { return *ps_; }
  Count size() const { return ps_->num_lines(); }

  /// Lines of H_m whose RREF begins with the prefix, in the caller's m
  /// coordinates. Prefixes that cannot start an RREF count 0.
  Count psi(const LinePrefix& d) const {
    check_prefix(d, ps_->m());
    if (!ps_->lifted()) return psi_ambient(d);
    return psi_ambient(LinePrefix{lift_even(d.a, ps_->m()), lift_even(d.b, ps_->m())});
  }

  /// psi on an ambient (odd-dimension) prefix.
  Count psi_ambient(const LinePrefix& d) const {
    check_prefix(d, ps_->ambient());
    auto s = state_of(d);
    if (!s.valid) return 0;
    Eval ev;
    return node(s, ev);
  }

  Count psi_even(const LinePrefix& d) const {
    if (d.size() % 2 != 0) throw std::invalid_argument("hgcode: psi_even needs an even-length prefix");
    return psi_ambient(d);
  }

  Count psi_odd(const LinePrefix& d) const {
    if (d.size() % 2 != 1) throw std::invalid_argument("hgcode: psi_odd needs an odd-length prefix");
    return psi_ambient(d);
  }

  /// Number of nonzero lambda with eta_t(A - lambda B, A - lambda B) = 0.
  Count xi(const Vec& a, const Vec& b) const {
    if (a.size() != b.size()) throw std::invalid_argument("hgcode: xi rows of different length");
    const Field& f = ps_->field();
    return xi_from(eta(f, a, a, a.size()), eta(f, b, b, b.size()), eta(f, a, b, a.size()));
  }

  /// Sum of psi(A|alpha; B|beta) over nonzero alpha, beta, for an odd-length
  /// ambient prefix with B nonzero.
  Count zeta(const Vec& a, const Vec& b) const {
    if (a.size() != b.size()) throw std::invalid_argument("hgcode: zeta rows of different length");
    if (a.size() % 2 != 1 || a.size() + 2 > static_cast<std::size_t>(ps_->ambient()))
      throw std::invalid_argument("hgcode: zeta needs an odd prefix length t <= m - 2");
    if (is_zero(b)) throw std::invalid_argument("hgcode: zeta needs a nonzero second row");
    const Field& f = ps_->field();
    LinePrefixState s;
    s.t = a.size();
    s.a_nz = !is_zero(a);
    s.b_nz = true;
    s.aa = eta(f, a, a, a.size());
    s.bb = eta(f, b, b, b.size());
    s.ab = eta(f, a, b, a.size());
    return zeta_of(s);
  }

  Count rank(const LineRREF& l) const {
    if (!ps_->is_line(l)) throw std::invalid_argument("hgcode: not the RREF of a totally isotropic line");
    const Field& f = ps_->field();
    const std::uint32_t n = f.size();
    LinePrefixState s = root();
    Count r = 0;
    for (std::size_t j = 0; j < l.size(); ++j) {
      const std::uint32_t key = l.a[j].code * n + l.b[j].code;
      for (std::uint32_t c = 0; c < key; ++c) {
        auto next = s.extend(f, Elem{c / n}, Elem{c % n});
        if (!next.valid) continue;
        Eval ev;
        r += node(next, ev);
      }
      s = s.extend(f, l.a[j], l.b[j]);
    }
    return r;
  }

  LineRREF unrank(Count i) const {
    if (i < 0 || i >= size()) throw std::out_of_range("hgcode: line rank " + to_string(i) + " out of range");
    const Field& f = ps_->field();
    const std::uint32_t n = f.size();
    LinePrefixState s = root();
    LineRREF out;
    for (int k = 0; k < ps_->m(); ++k) {
      bool chosen = false;
      for (std::uint32_t c = 0; c < n * n; ++c) {
        auto next = s.extend(f, Elem{c / n}, Elem{c % n});
        if (!next.valid) continue;
        Eval ev;
        Count v = node(next, ev);
        if (v == 0) continue;
        if (i < v) {
          s = next;
          out.a.push_back(Elem{c / n});
          out.b.push_back(Elem{c % n});
          chosen = true;
          break;
        }
        i -= v;
      }
      if (!chosen) throw std::logic_error("hgcode: line unrank ran past the last extension");
    }
    return out;
  }

  /// Calls fn(rank, line) for every line in rank order. Subtrees with psi = 0
  /// are pruned, so this is much cheaper than unranking each index.
  template <class Fn>
  void for_each_line(Fn&& fn) const {
    const Field& f = ps_->field();
    const std::uint32_t n = f.size();
    const std::size_t skip = ps_->lifted() ? 1 : 0;
    LineRREF cur{Vec(ps_->m()), Vec(ps_->m())};
    Count r = 0;
    auto rec = [&](auto&& self, const LinePrefixState& s) -> void {
      if (s.t == static_cast<std::size_t>(ps_->ambient())) {
        fn(r++, static_cast<const LineRREF&>(cur));
        return;
      }
      for (std::uint32_t c = 0; c < n * n; ++c) {
        auto next = s.extend(f, Elem{c / n}, Elem{c % n});
        if (!next.valid) continue;
        Eval ev;
        if (node(next, ev) == 0) continue;
        cur.a[s.t - skip] = Elem{c / n};
        cur.b[s.t - skip] = Elem{c % n};
        self(self, next);
      }
    };
    rec(rec, root());
  }

 private:
  struct MemoEntry {
    std::size_t t;
    bool a_nz, b_nz;
    Elem aa, bb, ab;
    Count value;
  };
  struct Eval {
    std::vector<MemoEntry> memo;
  };

  static void check_prefix(const LinePrefix& d, int limit) {
    if (d.a.size() != d.b.size()) throw std::invalid_argument("hgcode: prefix rows of different length");
    if (d.size() > static_cast<std::size_t>(limit)) throw std::invalid_argument("hgcode: prefix longer than m");
  }

  LinePrefixState state_of(const LinePrefix& d) const {
    LinePrefixState s;
    for (std::size_t j = 0; j < d.size() && s.valid; ++j) s = s.extend(ps_->field(), d.a[j], d.b[j]);
    return s;
  }

  LinePrefixState root() const {
    LinePrefixState s;
    if (ps_->lifted()) s = s.extend(ps_->field(), Field::zero(), Field::zero());
    return s;
  }

  LinePrefixState ext(const LinePrefixState& s, unsigned x, unsigned y) const {
    return s.extend(ps_->field(), Elem{x}, Elem{y});
  }

  Count xi_from(Elem aa, Elem bb, Elem ab) const {
    const Field& f = ps_->field();
    const Count q = ps_->q();
    const Elem z = Field::zero();
    if (aa == z && bb == z) return ab == z ? q * q - 1 : q - 1;
    if (ab == z) return (aa == z || bb == z) ? 0 : q + 1;
    if (aa == z || bb == z) return q;
    // Both rows anisotropic, not orthogonal: tangent iff delta is a root.
    const Elem delta = f.conj(f.div(ab, bb));
    Elem lhs = f.mul(f.norm(delta), bb);
    lhs = f.sub(lhs, f.mul(delta, ab));
    lhs = f.sub(lhs, f.mul(f.conj(delta), f.conj(ab)));
    lhs = f.add(lhs, aa);
    return lhs == z ? 1 : q + 1;
  }

  Count zeta_of(const LinePrefixState& s) const {
    const Count q = ps_->q();
    const int t = static_cast<int>(s.t);
    const int M = ps_->ambient();
    const Count xi = xi_from(s.aa, s.bb, s.ab);
    const Count sv = checked_add(checked_mul(q * q - 1, ps_->mu_at(M - t - 2)), 1);
    const Count off = exact_div(ps_->qpow(2 * (M - t - 2)) - sv, q - 1, "zeta");
    const Count theta_b1 = detail::theta_closed(*ps_, t + 1, true, Field::one(), s.bb);
    const Count bracket = checked_add(checked_mul(xi, sv), checked_mul(q * q - 1 - xi, off));
    return checked_mul(checked_mul(q * q - 1, theta_b1), bracket);
  }

  Count node(const LinePrefixState& s, Eval& ev) const {
    ++stats::psi_nodes;
    if (s.t == static_cast<std::size_t>(ps_->ambient())) {
      const Elem z = Field::zero();
      return (s.a_nz && s.b_nz && s.aa == z && s.bb == z && s.ab == z) ? 1 : 0;
    }
    return s.t % 2 == 0 ? even_node(s, ev) : odd_node(s, ev);
  }

  Count even_node(LinePrefixState s, Eval& ev) const {
    const Field& f = ps_->field();
    const Count q = ps_->q();
    const Count q2 = q * q, q4 = q2 * q2;
    const int t = static_cast<int>(s.t);
    const int M = ps_->ambient();
    const Elem z = Field::zero();

    if (t == 0) return ps_->capN_at(M);

    // Row-reduce so that at most one of a_t, b_t is nonzero.
    if (s.a_last != z && s.b_last != z) {
      const Elem c = f.div(s.a_last, s.b_last);
      const Elem cq = f.conj(c);
      Elem aa = f.sub(s.aa, f.mul(c, s.ab));
      aa = f.sub(aa, f.mul(cq, f.conj(s.ab)));
      aa = f.add(aa, f.mul(f.norm(c), s.bb));
      s.ab = f.sub(s.ab, f.mul(cq, s.bb));
      s.aa = aa;
      s.a_last = z;
    }

    if (!s.a_nz) {
      if (s.b_nz) return 0;
      // Both rows zero: lines of a cone over H_{m-t-1}.
      return checked_add(ps_->mu_at(M - t - 1), checked_mul(q4, ps_->capN_at(M - t - 1)));
    }
    if (!s.b_nz) {
      if (s.a_last != z) {
        const Count m1 = ps_->mu_at(M - t - 1);
        return m1 == 0 ? 0 : checked_mul(ps_->qpow(2 * M - 2 * t - 3), m1);
      }
      return checked_add(checked_mul(q2, node(ext(s, 0, 0), ev)), node(ext(s, 0, 1), ev));
    }
    if (s.a_last != z || s.b_last != z) {
      const Count ta = detail::theta_closed(*ps_, t, true, s.a_last, s.aa);
      const Count tb = detail::theta_closed(*ps_, t, true, s.b_last, s.bb);
      return exact_div(checked_mul(ta, tb), q2, "psi (E3/E4)");
    }
    return checked_mul(q4, node(ext(s, 0, 0), ev));
  }

  Count odd_node(const LinePrefixState& s, Eval& ev) const {
    ++stats::psi_odd_nodes;
    for (const auto& e : ev.memo)
      if (e.t == s.t && e.a_nz == s.a_nz && e.b_nz == s.b_nz && e.aa == s.aa && e.bb == s.bb && e.ab == s.ab)
        return e.value;

    const Count q = ps_->q();
    const Count q2 = q * q, q4 = q2 * q2;
    const int t = static_cast<int>(s.t);
    const int M = ps_->ambient();
    Count v;
    if (!s.a_nz) {
      v = s.b_nz ? 0 : ps_->capN_at(M - t);
    } else if (!s.b_nz) {
      const auto s00 = ext(s, 0, 0);
      v = checked_mul(q2 - 1, node(ext(s, 1, 0), ev));
      v = checked_add(v, node(ext(s, 0, 1), ev));
      v = checked_add(v, checked_mul(q2, node(ext(s00, 0, 0), ev)));
      v = checked_add(v, node(ext(s00, 0, 1), ev));
    } else {
      v = zeta_of(s);
      v = checked_add(v, checked_mul(q2 - 1, checked_add(node(ext(s, 0, 1), ev), node(ext(s, 1, 0), ev))));
      v = checked_add(v, checked_mul(q4, node(ext(ext(s, 0, 0), 0, 0), ev)));
    }
    ev.memo.push_back({s.t, s.a_nz, s.b_nz, s.aa, s.bb, s.ab, v});
    return v;
  }

  const PolarSpace* ps_;
};

}  // namespace hgcode
