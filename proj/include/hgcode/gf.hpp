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
 * @file gf.hpp
 * @brief Arithmetic in GF(q^2) = GF(p^{2e}) together with its subfield GF(q).
 *
 * Elements use the polynomial basis over GF(p): the element
 * c_0 + c_1 x + ... + c_{2e-1} x^{2e-1} is encoded as the integer
 * sum c_i p^i, which is a bijection onto [0, q^2). The encoding order is the
 * total order used by every enumerator in this library; zero is its minimum.
 *
 * Small fields (q^2 <= 2^16 by default) get log/antilog tables and a
 * conjugation table; larger ones fall back to polynomial arithmetic.
 */

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgcode {

/// A field element, stored as its integer encoding.
struct Elem {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(const Elem&, const Elem&) = default;
};

namespace stats {
/// Field multiplications (and inversions) performed on this thread.
inline thread_local std::uint64_t field_multiplications = 0;
}  // namespace stats

/// Counts field multiplications issued on the current thread while alive.
class MulCounter {
 public:
  MulCounter() : start_(stats::field_multiplications) {}
  std::uint64_t count() const { return stats::field_multiplications - start_; }

 private:
  std::uint64_t start_;
};

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

using Poly = std::vector<unsigned>;  // low degree first, over GF(p)

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Remainder of a modulo a monic-or-not divisor b (b nonzero, trimmed).
inline Poly poly_mod(Poly a, const Poly& b, unsigned p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  // Inverse of the leading coefficient of b in GF(p).
  unsigned lead_inv = 1;
  for (unsigned k = 1; k < p; ++k)
    if ((k * b.back()) % p == 1) lead_inv = k;
  while (a.size() > db) {
    unsigned f = (a.back() * lead_inv) % p;
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + (p - f) * b[i]) % p;
    trim(a);
  }
  return a;
}

inline bool is_irreducible(const Poly& f, unsigned p) {
  const std::size_t n = f.size() - 1;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    // All monic divisors of degree d.
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t k = 0; k < count; ++k) {
      Poly g(d + 1, 0);
      std::uint64_t x = k;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(x % p);
        x /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

/// Lexicographically smallest monic irreducible polynomial of degree n over
/// GF(p), comparing coefficient lists low-degree-first.
inline Poly canonical_modulus(unsigned p, std::size_t n) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= p;
  for (std::uint64_t k = 0; k < count; ++k) {
    Poly f(n + 1, 0);
    std::uint64_t x = k;
    // c_0 is the most significant digit of k.
    for (std::size_t i = n; i-- > 0;) {
      f[i] = static_cast<unsigned>(x % p);
      x /= p;
    }
    f[n] = 1;
    if (f[0] != 0 && is_irreducible(f, p)) return f;
  }
  throw std::logic_error("hgcode: no irreducible polynomial found");
}

}  // namespace detail

/// Arithmetic context for GF(q^2), q = p^e. Immutable after construction.
class Field {
 public:
  static constexpr std::uint32_t kDefaultTableThreshold = 1u << 16;

  Field(unsigned p, unsigned e, std::optional<std::vector<unsigned>> modulus = std::nullopt,
        std::uint32_t table_threshold = kDefaultTableThreshold)
      : p_(p), e_(e) {
    if (!detail::is_prime(p)) throw std::invalid_argument("hgcode: characteristic " + std::to_string(p) + " is not prime");
    if (e < 1) throw std::invalid_argument("hgcode: extension degree e must be >= 1");
    degree_ = 2 * e;
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
      q *= p;
      if (q > (1u << 12)) throw std::invalid_argument("hgcode: field too large (q must be <= 4096)");
    }
    q_ = static_cast<std::uint32_t>(q);
    size_ = q_ * q_;
    if (modulus) {
      modulus_ = *modulus;
      if (modulus_.size() != degree_ + 1 || modulus_.back() != 1)
        throw std::invalid_argument("hgcode: modulus must be monic of degree 2e");
      for (unsigned c : modulus_)
        if (c >= p) throw std::invalid_argument("hgcode: modulus coefficient out of range");
      if (!detail::is_irreducible(modulus_, p)) throw std::invalid_argument("hgcode: modulus is reducible");
    } else {
      modulus_ = detail::canonical_modulus(p, degree_);
    }
    pow_p_.resize(degree_ + 1);
    pow_p_[0] = 1;
    for (unsigned i = 1; i <= degree_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;

    primitive_ = find_primitive();
    if (size_ <= table_threshold) build_tables();
    if (size_ <= 256) build_add_table();
  }

  unsigned p() const { return p_; }
  unsigned e() const { return e_; }
  /// Order of the subfield.
  std::uint32_t q() const { return q_; }
  /// Order of the field, q^2.
  std::uint32_t size() const { return size_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }
  bool has_tables() const { return !log_.empty(); }
  Elem primitive() const { return primitive_; }

  static constexpr Elem zero() { return Elem{0}; }
  static constexpr Elem one() { return Elem{1}; }

  std::uint32_t enc(Elem x) const { return x.code; }
  Elem dec(std::uint64_t code) const {
    if (code >= size_) throw std::out_of_range("hgcode: element encoding " + std::to_string(code) + " >= q^2");
    return Elem{static_cast<std::uint32_t>(code)};
  }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return Elem{a.code ^ b.code};
    if (!add_table_.empty()) return Elem{add_table_[a.code * size_ + b.code]};
    std::uint32_t r = 0;
    std::uint32_t x = a.code, y = b.code;
    for (unsigned i = 0; i < degree_; ++i) {
      r += ((x % p_ + y % p_) % p_) * pow_p_[i];
      x /= p_;
      y /= p_;
    }
    return Elem{r};
  }

  Elem neg(Elem a) const {
    if (p_ == 2) return a;
    std::uint32_t r = 0;
    std::uint32_t x = a.code;
    for (unsigned i = 0; i < degree_; ++i) {
      r += ((p_ - x % p_) % p_) * pow_p_[i];
      x /= p_;
    }
    return Elem{r};
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    ++stats::field_multiplications;
    return mul_raw(a, b);
  }

  Elem inv(Elem a) const {
    if (a.code == 0) throw std::domain_error("hgcode: inverse of zero");
    ++stats::field_multiplications;
    if (has_tables()) return Elem{exp_[(size_ - 1 - log_[a.code]) % (size_ - 1)]};
    return pow_raw(a, size_ - 2);
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem pow(Elem a, std::uint64_t k) const {
    ++stats::field_multiplications;
    return pow_raw(a, k);
  }

  /// x^q, the involutory automorphism fixing GF(q).
  Elem conj(Elem x) const {
    if (!conj_.empty()) return Elem{conj_[x.code]};
    // e successive Frobenius steps x -> x^p.
    Elem r = x;
    for (unsigned i = 0; i < e_; ++i) r = pow_raw(r, p_);
    return r;
  }

  /// Tr(x) = x + x^q, lands in GF(q).
  Elem trace(Elem x) const { return add(x, conj(x)); }

  /// N(x) = x^{q+1}, lands in GF(q).
  Elem norm(Elem x) const { return mul(x, conj(x)); }

  bool in_subfield(Elem x) const { return conj(x) == x; }

  /// All lambda with lambda^{q+1} = c, in increasing encoding order.
  std::vector<Elem> norm_solutions(Elem c) const {
    if (c.code == 0) return {zero()};
    std::vector<Elem> out;
    if (has_tables()) {
      std::uint32_t lc = log_[c.code];
      if (lc % (q_ + 1) != 0) return out;
      std::uint32_t base = lc / (q_ + 1);
      for (std::uint32_t k = 0; k <= q_; ++k) out.push_back(Elem{exp_[(base + k * (q_ - 1)) % (size_ - 1)]});
    } else {
      for (std::uint32_t i = 1; i < size_; ++i)
        if (mul_raw(Elem{i}, conj(Elem{i})) == c) out.push_back(Elem{i});
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<unsigned> digits(Elem a) const {
    std::vector<unsigned> d(degree_);
    std::uint32_t x = a.code;
    for (unsigned i = 0; i < degree_; ++i) {
      d[i] = x % p_;
      x /= p_;
    }
    return d;
  }

  Elem from_digits(const std::vector<unsigned>& d) const {
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < d.size() && i < degree_; ++i) r += d[i] * pow_p_[i];
    return Elem{r};
  }

  Elem mul_poly(Elem a, Elem b) const {
    auto x = digits(a), y = digits(b);
    detail::Poly prod(2 * degree_, 0);
    for (unsigned i = 0; i < degree_; ++i) {
      if (x[i] == 0) continue;
      for (unsigned j = 0; j < degree_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    }
    return from_digits(detail::poly_mod(std::move(prod), modulus_, p_));
  }

  Elem mul_raw(Elem a, Elem b) const {
    if (a.code == 0 || b.code == 0) return zero();
    if (has_tables()) return Elem{exp_[log_[a.code] + log_[b.code]]};
    return mul_poly(a, b);
  }

  Elem pow_raw(Elem a, std::uint64_t k) const {
    if (k == 0) return one();
    if (a.code == 0) return zero();
    if (has_tables()) return Elem{exp_[(static_cast<std::uint64_t>(log_[a.code]) * (k % (size_ - 1))) % (size_ - 1)]};
    Elem r = one(), b = a;
    while (k > 0) {
      if (k & 1) r = mul_poly(r, b);
      b = mul_poly(b, b);
      k >>= 1;
    }
    return r;
  }

  Elem find_primitive() const {
    const std::uint64_t n = size_ - 1;
    if (n == 1) return one();
    const auto factors = detail::prime_factors(n);
    for (std::uint32_t g = 2; g < size_; ++g) {
      bool ok = true;
      for (auto r : factors) {
        Elem h{g};
        Elem acc = one();
        std::uint64_t k = n / r;
        while (k > 0) {
          if (k & 1) acc = mul_poly(acc, h);
          h = mul_poly(h, h);
          k >>= 1;
        }
        if (acc == one()) {
          ok = false;
          break;
        }
      }
      if (ok) return Elem{g};
    }
    throw std::logic_error("hgcode: no primitive element");
  }

  void build_tables() {
    const std::uint32_t n = size_ - 1;
    exp_.assign(2 * static_cast<std::size_t>(n), 0);
    log_.assign(size_, 0);
    Elem x = one();
    for (std::uint32_t i = 0; i < n; ++i) {
      exp_[i] = x.code;
      exp_[i + n] = x.code;
      log_[x.code] = i;
      x = mul_poly(x, primitive_);
    }
    conj_.resize(size_);
    conj_[0] = 0;
    for (std::uint32_t a = 1; a < size_; ++a)
      conj_[a] = exp_[(static_cast<std::uint64_t>(log_[a]) * q_) % n];
  }

  void build_add_table() {
    add_table_.resize(static_cast<std::size_t>(size_) * size_);
    for (std::uint32_t a = 0; a < size_; ++a) {
      auto x = digits(Elem{a});
      for (std::uint32_t b = 0; b < size_; ++b) {
        auto y = digits(Elem{b});
        std::vector<unsigned> s(degree_);
        for (unsigned i = 0; i < degree_; ++i) s[i] = (x[i] + y[i]) % p_;
        add_table_[a * size_ + b] = from_digits(s).code;
      }
    }
  }

  unsigned p_, e_, degree_ = 0;
  std::uint32_t q_ = 0, size_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<std::uint32_t> pow_p_;
  Elem primitive_{};
  std::vector<std::uint32_t> exp_, log_, conj_, add_table_;
};

/// An element bound to its field context, for operator-style arithmetic.
/// Mixing elements of different contexts throws std::invalid_argument.
class FieldElement {
 public:
  FieldElement(const Field& f, Elem v) : f_(&f), v_(v) {}
  FieldElement(const Field& f, std::uint64_t code) : f_(&f), v_(f.dec(code)) {}

  const Field& field() const { return *f_; }
  Elem value() const { return v_; }
  std::uint32_t enc() const { return v_.code; }

  FieldElement operator+(const FieldElement& o) const { return {same(o), f_->add(v_, o.v_)}; }
  FieldElement operator-(const FieldElement& o) const { return {same(o), f_->sub(v_, o.v_)}; }
  FieldElement operator*(const FieldElement& o) const { return {same(o), f_->mul(v_, o.v_)}; }
  FieldElement operator/(const FieldElement& o) const { return {same(o), f_->div(v_, o.v_)}; }
  FieldElement operator-() const { return {*f_, f_->neg(v_)}; }

  FieldElement inv() const { return {*f_, f_->inv(v_)}; }
  FieldElement pow(std::uint64_t k) const { return {*f_, f_->pow(v_, k)}; }
  FieldElement conj() const { return {*f_, f_->conj(v_)}; }
  FieldElement trace() const { return {*f_, f_->trace(v_)}; }
  bool in_subfield() const { return f_->in_subfield(v_); }

  bool operator==(const FieldElement& o) const {
    same(o);
    return v_ == o.v_;
  }
  std::strong_ordering operator<=>(const FieldElement& o) const {
    same(o);
    return v_ <=> o.v_;
  }

 private:
  const Field& same(const FieldElement& o) const {
    if (f_ != o.f_) throw std::invalid_argument("hgcode: elements from different field contexts");
    return *f_;
  }

  const Field* f_;
  Elem v_;
};

}  // namespace hgcode
