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
 * @file codec.hpp
 * @brief The line Hermitian Grassmann code: parameters, encoder, local
 *        decoder and pencil-of-planes corrector.
 *
 * Component i of the codeword of a message w is A W B^T, where (A; B) is the
 * line of rank i and W the alternating matrix of w. Components are addressed
 * by 0-based rank. No generator matrix is ever formed; every component is
 * obtained from the line enumerator.
 *
 * Decoding and correction read components on lines given by convenient bases
 * (u, v). A codeword stores the form on the RREF basis, so such a read is
 * det(M) * c[rank] where (u; v) = M (A; B).
 */

#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hgcode/count.hpp"
#include "hgcode/geometry.hpp"
#include "hgcode/gf.hpp"
#include "hgcode/line_enum.hpp"
#include "hgcode/message.hpp"

namespace hgcode {

struct CodeParams {
  Count N = 0;
  Count K = 0;
  Count d_min = 0;
  Count mu_m = 0;
  Count N_m = 0;
};

/// [N, K, d_min] of the code for H_m over GF(q^2), m >= 4.
inline CodeParams code_params(std::uint32_t q, int m) {
  if (m < 4) throw std::invalid_argument("hgcode: code parameters need m >= 4");
  const Count s = (m % 2 == 1) ? 1 : -1;
  const auto p = [&](int k) { return ipow(q, static_cast<unsigned>(k)); };
  const Count Q = q;
  Count num = checked_mul(p(m) + s, p(m - 1) - s);
  num = checked_mul(num, p(m - 2) + s);
  num = checked_mul(num, p(m - 3) - s);
  const Count den = checked_mul(checked_mul(Q * Q - 1, Q * Q - 1), Q * Q + 1);

  CodeParams cp;
  cp.N = exact_div(num, den, "code length");
  cp.K = Count(m) * (m - 1) / 2;
  if (m == 4 || m == 6)
    cp.d_min = p(4 * m - 12) - p(2 * m - 6);
  else if (m % 2 == 0)
    cp.d_min = p(4 * m - 12);
  else
    cp.d_min = p(4 * m - 12) - p(3 * m - 9);
  cp.mu_m = mu(q, m);
  cp.N_m = capN(q, m);
  if (cp.N != cp.N_m) throw std::logic_error("hgcode: code length disagrees with the line count");
  return cp;
}

/// A component read: the value of the form on a line basis is det * c[rank].
struct Probe {
  Count rank = 0;
  Elem det{};
  Vec u, v;  // the basis the read refers to
};

/// One plane of the pencil through a line, with a triangle of probe lines.
/// The form on the line's RREF basis equals sum_k weight[k] * c[probe[k].rank].
struct PlaneProbe {
  Vec point;  // spans the plane together with the line
  std::array<Probe, 3> probes;
  std::array<Elem, 3> weight;
};

namespace detail {

/// Basis of {x : rows * x = 0}, by Gauss-Jordan elimination.
inline std::vector<Vec> nullspace(const Field& f, std::vector<Vec> rows, std::size_t n) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t k = r;
    while (k < rows.size() && rows[k][c] == Field::zero()) ++k;
    if (k == rows.size()) continue;
    std::swap(rows[r], rows[k]);
    const Elem s = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(s, x);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == Field::zero()) continue;
      const Elem g = rows[i][c];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(g, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<Vec> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    Vec x(n, Field::zero());
    x[free] = Field::one();
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = f.neg(rows[i][free]);
    out.push_back(std::move(x));
  }
  return out;
}

/// Incremental row echelon basis; insert() reports linear independence.
class Span {
 public:
  Span(const Field& f, std::size_t n) : f_(&f), n_(n) {}

  bool insert(Vec v) {
    for (const auto& [c, row] : rows_) {
      if (v[c] == Field::zero()) continue;
      const Elem g = v[c];
      for (std::size_t j = 0; j < n_; ++j) v[j] = f_->sub(v[j], f_->mul(g, row[j]));
    }
    const std::size_t c = leading_index(v);
    if (c == n_) return false;
    rows_.emplace_back(c, normalize(*f_, v));
    return true;
  }

 private:
  const Field* f_;
  std::size_t n_;
  std::vector<std::pair<std::size_t, Vec>> rows_;
};

/// Inverse of a 3 x 3 matrix, or nothing if singular.
inline bool invert3(const Field& f, std::array<std::array<Elem, 3>, 3> a, std::array<std::array<Elem, 3>, 3>& inv) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) inv[i][j] = (i == j) ? Field::one() : Field::zero();
  for (int c = 0; c < 3; ++c) {
    int k = c;
    while (k < 3 && a[k][c] == Field::zero()) ++k;
    if (k == 3) return false;
    std::swap(a[c], a[k]);
    std::swap(inv[c], inv[k]);
    const Elem s = f.inv(a[c][c]);
    for (int j = 0; j < 3; ++j) {
      a[c][j] = f.mul(s, a[c][j]);
      inv[c][j] = f.mul(s, inv[c][j]);
    }
    for (int i = 0; i < 3; ++i) {
      if (i == c || a[i][c] == Field::zero()) continue;
      const Elem g = a[i][c];
      for (int j = 0; j < 3; ++j) {
        a[i][j] = f.sub(a[i][j], f.mul(g, a[c][j]));
        inv[i][j] = f.sub(inv[i][j], f.mul(g, inv[c][j]));
      }
    }
  }
  return true;
}

}  // namespace detail

class LineCode {
 public:
  explicit LineCode(const PolarSpace& ps) : ps_(&ps), lines_(ps) {
    if (ps.m() < 4) throw std::invalid_argument("hgcode: the code needs m >= 4");
    params_ = code_params(ps.q(), ps.m());
    build_decoder();
  }

  const PolarSpace& space() const { return *ps_; }
  const LineEnumerator& lines() const { return lines_; }
  const CodeParams& params() const { return params_; }
  std::size_t length() const { return static_cast<std::size_t>(params_.N); }
  std::size_t dimension() const { return message_length(ps_->m()); }

  /// Component i of the codeword of w.
  Elem eval_component(const Message& w, Count i) const {
    check_message(w);
    const LineRREF l = lines_.unrank(i);
    return dot(w, pluecker(l));
  }

  Codeword encode(const Message& w) const { return encode_many({w}).front(); }

  /// Encodes several messages in one pass over the lines.
  std::vector<Codeword> encode_many(const std::vector<Message>& ws) const {
    for (const auto& w : ws) check_message(w);
    std::vector<Codeword> out(ws.size(), Codeword(length(), Field::zero()));
    lines_.for_each_line([&](Count r, const LineRREF& l) {
      const Vec pl = pluecker(l);
      for (std::size_t k = 0; k < ws.size(); ++k) out[k][static_cast<std::size_t>(r)] = dot(ws[k], pl);
    });
    return out;
  }

  Message decode(const Codeword& c) const {
    if (c.size() != length()) throw std::invalid_argument("hgcode: codeword has the wrong length");
    return decode_with([&](Count r) { return c[static_cast<std::size_t>(r)]; });
  }

  /// Decodes from an accessor get(rank) -> component, reading only O(K)
  /// components.
  template <class Get>
  Message decode_with(Get&& get) const {
    const Field& f = ps_->field();
    const int m = ps_->m();
    GramWork W(f, m);
    auto read = [&](const Probe& p) { return f.mul(p.det, get(p.rank)); };

    for (const auto& s : type1_) W.set(s.i, s.j, read(s.probe));
    for (const auto& s : type2_) {
      // sigma X + gamma Y = R1 and sigma^q X - sigma Y = R2.
      const Elem sq = f.conj(sigma_);
      const Elem gamma = f.neg(sq);
      const Elem known_ij = W.at(s.i, s.j), known_pq = W.at(s.jp, s.ip);
      Elem r1 = f.sub(read(s.first), known_ij);
      r1 = f.sub(r1, f.mul(f.mul(gamma, sigma_), known_pq));
      Elem r2 = f.sub(read(s.second), known_ij);
      r2 = f.sub(r2, f.mul(f.mul(f.neg(sigma_), sq), known_pq));
      const Elem g2 = f.neg(sigma_);
      const Elem det = f.sub(f.mul(sigma_, g2), f.mul(gamma, sq));
      const Elem x = f.div(f.sub(f.mul(r1, g2), f.mul(gamma, r2)), det);
      const Elem y = f.div(f.sub(f.mul(sigma_, r2), f.mul(sq, r1)), det);
      W.set(s.i, s.ip, x);
      W.set(s.jp, s.j, y);
    }
    for (const auto& s : type3_) {
      Elem v = f.sub(read(s.probe), f.mul(lambda_, W.at(s.k1, s.j)));
      v = f.sub(v, W.at(s.k2, s.j));
      W.set(0, s.j, v);
    }
    Message w(dimension());
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) w[pair_index(m, i, j)] = W.at(i, j);
    return w;
  }

  /// Every line read by the decoder.
  std::vector<Probe> decode_probes() const {
    std::vector<Probe> out;
    for (const auto& s : type1_) out.push_back(s.probe);
    for (const auto& s : type2_) {
      out.push_back(s.first);
      out.push_back(s.second);
    }
    for (const auto& s : type3_) out.push_back(s.probe);
    return out;
  }

  Elem sigma() const { return sigma_; }
  Elem lambda() const { return lambda_; }

  /// The planes of the pencil through line x, each with its probe triangle.
  std::vector<PlaneProbe> pencil_probes(Count x) const {
    if (ps_->m() < 6) throw std::domain_error("hgcode: correction needs m >= 6");
    const Field& f = ps_->field();
    const std::size_t m = static_cast<std::size_t>(ps_->m());
    const LineRREF l = lines_.unrank(x);

    std::vector<Vec> eqs(2, Vec(m));
    for (std::size_t k = 0; k < m; ++k) {
      Vec e(m, Field::zero());
      e[k] = Field::one();
      eqs[0][k] = ps_->form(l.a, e);
      eqs[1][k] = ps_->form(l.b, e);
    }
    detail::Span span(f, m);
    span.insert(l.a);
    span.insert(l.b);
    std::vector<Vec> comp;
    for (auto& v : detail::nullspace(f, eqs, m))
      if (span.insert(v)) comp.push_back(v);

    std::vector<PlaneProbe> out;
    const std::uint32_t n = f.size();
    std::vector<std::uint32_t> coef(comp.size(), 0);
    for (std::size_t lead = 0; lead < comp.size(); ++lead) {
      std::fill(coef.begin(), coef.end(), 0);
      coef[lead] = 1;
      while (true) {
        Vec p(m, Field::zero());
        for (std::size_t k = 0; k < comp.size(); ++k)
          if (coef[k] != 0)
            for (std::size_t j = 0; j < m; ++j) p[j] = f.add(p[j], f.mul(Elem{coef[k]}, comp[k][j]));
        if (ps_->form(p, p) == Field::zero()) out.push_back(plane(l, p));
        std::size_t k = comp.size() - 1;
        while (k > lead && coef[k] + 1 == n) coef[k--] = 0;
        if (k == lead) break;
        ++coef[k];
      }
    }
    if (out.empty()) throw std::logic_error("hgcode: empty pencil");
    return out;
  }

  /// Majority-vote estimate of each requested component of r. A value wins
  /// only with a strict majority of planes; otherwise r is kept.
  std::vector<Elem> correct(const Codeword& r, const std::vector<Count>& indices) const {
    if (ps_->m() < 6) throw std::domain_error("hgcode: correction needs m >= 6");
    if (r.size() != length()) throw std::invalid_argument("hgcode: received word has the wrong length");
    const Field& f = ps_->field();
    std::vector<Elem> out;
    out.reserve(indices.size());
    for (Count x : indices) {
      if (x < 0 || x >= params_.N) throw std::out_of_range("hgcode: component index out of range");
      const auto planes = pencil_probes(x);
      std::map<Elem, std::size_t> votes;
      for (const auto& pl : planes) {
        Elem v = Field::zero();
        for (int k = 0; k < 3; ++k)
          v = f.add(v, f.mul(pl.weight[k], r[static_cast<std::size_t>(pl.probes[k].rank)]));
        ++votes[v];
      }
      Elem best = r[static_cast<std::size_t>(x)];
      for (const auto& [v, cnt] : votes)
        if (2 * cnt > planes.size()) best = v;
      out.push_back(best);
    }
    return out;
  }

 private:
  struct TypeOne {
    int i, j;
    Probe probe;
  };
  struct TypeTwo {
    int i, ip, j, jp;
    Probe first, second;
  };
  struct TypeThree {
    int j, k1, k2;  // read = W[0][j] + lambda W[k1][j] + W[k2][j]
    Probe probe;
  };

  /// Dense alternating matrix filled in during decoding.
  class GramWork {
   public:
    GramWork(const Field& f, int m) : f_(&f), m_(m), w_(static_cast<std::size_t>(m) * m, Field::zero()) {}
    Elem at(int i, int j) const { return w_[static_cast<std::size_t>(i) * m_ + j]; }
    void set(int i, int j, Elem v) {
      w_[static_cast<std::size_t>(i) * m_ + j] = v;
      w_[static_cast<std::size_t>(j) * m_ + i] = f_->neg(v);
    }

   private:
    const Field* f_;
    int m_;
    std::vector<Elem> w_;
  };

  void check_message(const Message& w) const {
    if (w.size() != dimension()) throw std::invalid_argument("hgcode: message has the wrong length");
  }

  Vec pluecker(const LineRREF& l) const {
    const Field& f = ps_->field();
    const int m = ps_->m();
    Vec out(dimension());
    std::size_t k = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) out[k++] = f.sub(f.mul(l.a[i], l.b[j]), f.mul(l.a[j], l.b[i]));
    return out;
  }

  Elem dot(const Message& w, const Vec& pl) const {
    const Field& f = ps_->field();
    Elem r = Field::zero();
    for (std::size_t k = 0; k < pl.size(); ++k)
      if (w[k] != Field::zero() && pl[k] != Field::zero()) r = f.add(r, f.mul(w[k], pl[k]));
    return r;
  }

  Vec unit(int k) const {
    Vec e(ps_->m(), Field::zero());
    e[k] = Field::one();
    return e;
  }

  /// Hyperbolic partner of coordinate k in the caller's coordinates, or -1.
  int partner(int k) const {
    if (ps_->m() % 2 == 1) {
      if (k == 0) return -1;
      return (k % 2 == 1) ? k + 1 : k - 1;
    }
    return (k % 2 == 0) ? k + 1 : k - 1;
  }

  Probe probe(const Vec& u, const Vec& v) const {
    auto [l, det] = rref_of_pair(ps_->field(), u, v);
    if (!ps_->is_line(l)) throw std::logic_error("hgcode: probe line is not totally isotropic");
    return Probe{lines_.rank(l), det, u, v};
  }

  void build_decoder() {
    const Field& f = ps_->field();
    const int m = ps_->m();
    const bool odd = m % 2 == 1;

    for (std::uint32_t c = 0; c < f.size(); ++c) {
      const Elem x{c};
      if (!f.in_subfield(x) && f.trace(x) != Field::zero()) {
        sigma_ = x;
        break;
      }
    }
    for (std::uint32_t c = 0; c < f.size(); ++c) {
      const Elem x{c};
      if (f.trace(x) == f.neg(Field::one())) {
        lambda_ = x;
        break;
      }
    }

    for (int i = odd ? 1 : 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (partner(i) != j) type1_.push_back({i, j, probe(unit(i), unit(j))});

    std::vector<int> firsts;
    for (int i = odd ? 1 : 0; i + 1 < m; i += 2) firsts.push_back(i);
    auto add_pair = [&](int i, int j) {
      const int ip = i + 1, jp = j + 1;
      TypeTwo s{i, ip, j, jp, {}, {}};
      for (int which = 0; which < 2; ++which) {
        const Elem sg = which == 0 ? sigma_ : f.conj(sigma_);
        const Elem gamma = f.neg(f.conj(sg));
        Vec u = unit(i), v(m, Field::zero());
        u[jp] = gamma;
        v[ip] = sg;
        v[j] = Field::one();
        (which == 0 ? s.first : s.second) = probe(u, v);
      }
      type2_.push_back(std::move(s));
    };
    for (std::size_t k = 0; k + 1 < firsts.size(); k += 2) add_pair(firsts[k], firsts[k + 1]);
    if (firsts.size() % 2 == 1) add_pair(firsts.back(), firsts.front());

    if (odd) {
      for (int j = 1; j < m; ++j) {
        const int k1 = j >= 3 ? 1 : 3, k2 = j >= 3 ? 2 : 4;
        Vec u = unit(0);
        u[k1] = lambda_;
        u[k2] = Field::one();
        type3_.push_back({j, k1, k2, probe(u, unit(j))});
      }
    }
  }

  PlaneProbe plane(const LineRREF& l, const Vec& p) const {
    const Field& f = ps_->field();
    const std::size_t m = p.size();
    const Elem z = Field::zero(), o = Field::one();
    using C3 = std::array<Elem, 3>;
    auto combine = [&](const C3& c) {
      Vec v(m, z);
      for (std::size_t j = 0; j < m; ++j)
        v[j] = f.add(f.add(f.mul(c[0], l.a[j]), f.mul(c[1], l.b[j])), f.mul(c[2], p[j]));
      return v;
    };
    // Coefficients, in the basis (A, B, p), of the unknowns
    // (w(A,B), w(A,p), w(B,p)) in the value on <u, v>.
    auto row = [&](const C3& u, const C3& v) {
      return C3{f.sub(f.mul(u[0], v[1]), f.mul(u[1], v[0])), f.sub(f.mul(u[0], v[2]), f.mul(u[2], v[0])),
                f.sub(f.mul(u[1], v[2]), f.mul(u[2], v[1]))};
    };
    const std::array<std::array<std::pair<C3, C3>, 3>, 3> candidates{{
        {{{C3{o, z, z}, C3{z, z, o}}, {C3{z, o, z}, C3{z, z, o}}, {C3{o, z, o}, C3{z, o, z}}}},
        {{{C3{o, z, z}, C3{z, z, o}}, {C3{z, o, z}, C3{z, z, o}}, {C3{o, z, z}, C3{z, o, o}}}},
        {{{C3{o, z, o}, C3{z, o, z}}, {C3{o, z, z}, C3{z, o, o}}, {C3{o, o, z}, C3{z, z, o}}}},
    }};
    for (const auto& tri : candidates) {
      std::array<std::array<Elem, 3>, 3> mat, inv;
      for (int k = 0; k < 3; ++k) mat[k] = row(tri[k].first, tri[k].second);
      if (!detail::invert3(f, mat, inv)) continue;
      PlaneProbe pp;
      pp.point = p;
      for (int k = 0; k < 3; ++k) {
        pp.probes[k] = probe(combine(tri[k].first), combine(tri[k].second));
        // w(A,B) = sum_k inv[0][k] * read_k, with read_k = det_k * c[rank_k].
        pp.weight[k] = f.mul(inv[0][k], pp.probes[k].det);
      }
      return pp;
    }
    throw std::logic_error("hgcode: no nonsingular triangle in plane");
  }

  const PolarSpace* ps_;
  LineEnumerator lines_;
  CodeParams params_;
  Elem sigma_{}, lambda_{};
  std::vector<TypeOne> type1_;
  std::vector<TypeTwo> type2_;
  std::vector<TypeThree> type3_;
};

}  // namespace hgcode
