#pragma once

// Exact arithmetic in F_{p^e}, p an odd prime.
//
// Elements are packed integers in [0, p^e): the residue polynomial
// c_0 + c_1 t + ... + c_{e-1} t^{e-1} is stored as sum c_i p^i.  The modulus
// is the lexicographically least monic irreducible of degree e (candidates
// ordered by packed constant-first value), so a (p, e) pair names one field.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace superalg {

enum class ErrorCode {
  NotOddPrime,
  DegreeTooLarge,
  BadCharacteristic,
  TooLarge,
  Unsupported,
  OddInput,
  NotOnCartan,
  UnsolvableOverField,
  NilpotencyTooDeep,
  WeightNotCompatible,
  NotCentral,
  NotRegular,
  NoStableLine,
  NotUnique,
  ConfigError,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotOddPrime: return "NotOddPrime";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::BadCharacteristic: return "BadCharacteristic";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::OddInput: return "OddInput";
    case ErrorCode::NotOnCartan: return "NotOnCartan";
    case ErrorCode::UnsolvableOverField: return "UnsolvableOverField";
    case ErrorCode::NilpotencyTooDeep: return "NilpotencyTooDeep";
    case ErrorCode::WeightNotCompatible: return "WeightNotCompatible";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NoStableLine: return "NoStableLine";
    case ErrorCode::NotUnique: return "NotUnique";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

/// Domain error carrying a stable machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

namespace detail {

// Polynomial helpers over F_p, little-endian coefficient vectors.  Used for
// modulus selection and as the table-free fallback; never hot.

inline void poly_trim(std::vector<uint32_t>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::vector<uint32_t> poly_mulmod(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b,
                                         const std::vector<uint32_t>& f,
                                         uint64_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint64_t> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + uint64_t(a[i]) * b[j]) % p;
  }
  // reduce by monic f
  size_t e = f.size() - 1;
  for (size_t i = prod.size(); i-- > e;) {
    uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (size_t j = 0; j < e; ++j)
      prod[i - e + j] = (prod[i - e + j] + (p - f[j] % p) % p * c) % p;
  }
  std::vector<uint32_t> out;
  out.reserve(std::min(prod.size(), e));
  for (size_t i = 0; i < std::min(prod.size(), e); ++i)
    out.push_back(uint32_t(prod[i]));
  poly_trim(out);
  return out;
}

inline std::vector<uint32_t> poly_powmod(std::vector<uint32_t> base,
                                         uint64_t k,
                                         const std::vector<uint32_t>& f,
                                         uint64_t p) {
  std::vector<uint32_t> acc{1};
  while (k) {
    if (k & 1) acc = poly_mulmod(acc, base, f, p);
    base = poly_mulmod(base, base, f, p);
    k >>= 1;
  }
  return acc;
}

inline std::vector<uint32_t> poly_gcd(std::vector<uint32_t> a,
                                      std::vector<uint32_t> b, uint64_t p) {
  auto inv_mod = [&](uint64_t x) {
    uint64_t r = 1, e = p - 2, base = x % p;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    // a mod b
    uint64_t lead_inv = inv_mod(b.back());
    while (a.size() >= b.size()) {
      uint64_t c = uint64_t(a.back()) * lead_inv % p;
      if (c != 0) {
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
          a[off + i] =
              uint32_t((a[off + i] + (p - c * b[i] % p)) % p);
      }
      poly_trim(a);
      if (a.empty()) break;
      if (a.size() < b.size()) break;
      if (a.size() == b.size() && a.back() == 0) poly_trim(a);
    }
    std::swap(a, b);
    poly_trim(b);
  }
  return a;
}

// Rabin test: monic f of degree e is irreducible over F_p iff t^{p^e} = t
// (mod f) and gcd(t^{p^{e/r}} - t, f) = 1 for every prime r | e.  Frobenius
// powers are iterated t -> t^p so exponents never overflow.
inline bool poly_irreducible(const std::vector<uint32_t>& f, uint64_t p) {
  size_t e = f.size() - 1;
  if (e == 1) return true;
  auto frob_iter = [&](std::vector<uint32_t> g, size_t times) {
    for (size_t i = 0; i < times; ++i) g = poly_powmod(g, p, f, p);
    return g;
  };
  std::vector<uint32_t> t{0, 1};
  if (frob_iter(t, e) != t) return false;
  size_t rem = e;
  for (size_t r = 2; r * r <= rem; ++r) {
    if (rem % r) continue;
    while (rem % r == 0) rem /= r;
    auto g = frob_iter(t, e / r);
    // g - t
    if (g.size() < 2) g.resize(2, 0);
    g[1] = uint32_t((g[1] + p - 1) % p);
    poly_trim(g);
    auto d = poly_gcd(g, f, p);
    if (d.size() != 1) return false;
  }
  if (rem > 1) {
    auto g = frob_iter(t, e / rem);
    if (g.size() < 2) g.resize(2, 0);
    g[1] = uint32_t((g[1] + p - 1) % p);
    poly_trim(g);
    auto d = poly_gcd(g, f, p);
    if (d.size() != 1) return false;
  }
  return true;
}

}  // namespace detail

/// F_{p^e} context: immutable after construction, shared by all values built
/// over it.  Small fields (p^e <= 2^16) get log/antilog multiplication and
/// chunked addition tables; larger ones fall back to digit arithmetic.
class FieldCtx {
 public:
  static constexpr uint64_t kTableLimit = 1u << 16;
  static constexpr uint64_t kEnumLimit = 1u << 22;  // exhaustive-scan bound

  FieldCtx(uint64_t p, uint64_t e) : p_(p), e_(e) {
    if (p < 3 || !is_prime(p))
      throw Error(ErrorCode::NotOddPrime,
                  "field characteristic must be an odd prime, got " +
                      std::to_string(p));
    if (e < 1 || e > 12)
      throw Error(ErrorCode::DegreeTooLarge,
                  "extension degree must be in [1,12], got " +
                      std::to_string(e));
    q_ = 1;
    for (uint64_t i = 0; i < e; ++i) {
      if (q_ > (uint64_t(1) << 62) / p)
        throw Error(ErrorCode::TooLarge, "p^e exceeds the representable range");
      q_ *= p;
    }
    pow_p_.resize(e + 1);
    pow_p_[0] = 1;
    for (uint64_t i = 1; i <= e; ++i) pow_p_[i] = pow_p_[i - 1] * p;
    select_modulus();
    if (q_ <= kTableLimit) build_tables();
  }

  uint64_t p() const { return p_; }
  uint64_t ext_degree() const { return e_; }
  uint64_t order() const { return q_; }
  /// Monic modulus, little-endian, length e+1 (t itself when e = 1).
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  uint32_t zero() const { return 0; }
  uint32_t one() const { return 1; }

  uint32_t add(uint32_t a, uint32_t b) const {
    if (e_ == 1) {
      uint32_t s = a + b;
      return s >= p_ ? s - uint32_t(p_) : s;
    }
    if (!add_lo_.empty()) {
      uint32_t lo = add_lo_[(a % chunk_) * chunk_ + b % chunk_];
      uint32_t hi = add_lo_[(a / chunk_) * chunk_ + b / chunk_];
      return hi * uint32_t(chunk_) + lo;
    }
    return slow_add(a, b);
  }

  uint32_t neg(uint32_t a) const {
    if (e_ == 1) return a == 0 ? 0 : uint32_t(p_) - a;
    if (!neg_tab_.empty()) return neg_tab_[a];
    return slow_neg(a);
  }

  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

  uint32_t mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) {
      uint64_t s = uint64_t(log_[a]) + log_[b];
      if (s >= q_ - 1) s -= q_ - 1;
      return exp_[s];
    }
    if (e_ == 1) return uint32_t(uint64_t(a) * b % p_);
    return slow_mul(a, b);
  }

  uint32_t inv(uint32_t a) const {
    if (a == 0) throw std::logic_error("inverse of zero");
    if (!log_.empty()) {
      uint64_t l = log_[a];
      return exp_[l == 0 ? 0 : q_ - 1 - l];
    }
    return pow(a, int64_t(q_) - 2);
  }

  uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

  uint32_t pow(uint32_t a, int64_t k) const {
    if (k < 0) return inv(pow(a, -k));
    if (a == 0) return k == 0 ? 1 : 0;
    uint32_t acc = 1, base = a;
    uint64_t kk = uint64_t(k) % (q_ - 1);
    while (kk) {
      if (kk & 1) acc = mul(acc, base);
      base = mul(base, base);
      kk >>= 1;
    }
    return acc;
  }

  uint32_t frobenius(uint32_t a) const { return pow(a, int64_t(p_)); }

  uint32_t half() const { return inv(2); }  // p odd, so 2 is a unit

  /// Embed an integer through the prime subfield.
  uint32_t from_int(int64_t v) const {
    int64_t r = v % int64_t(p_);
    if (r < 0) r += int64_t(p_);
    return uint32_t(r);
  }

  bool in_prime_subfield(uint32_t a) const { return a < p_; }

  std::vector<uint32_t> digits(uint32_t a) const {
    std::vector<uint32_t> d(e_);
    for (uint64_t i = 0; i < e_; ++i) {
      d[i] = uint32_t(a % p_);
      a = uint32_t(a / p_);
    }
    return d;
  }

  uint32_t from_digits(const std::vector<uint32_t>& d) const {
    uint64_t v = 0;
    for (size_t i = d.size(); i-- > 0;) v = v * p_ + d[i] % p_;
    return uint32_t(v);
  }

  /// dst[i] += c * src[i]; the elimination workhorse.
  void axpy_row(uint32_t* dst, const uint32_t* src, uint32_t c,
                size_t n) const {
    if (c == 0) return;
    if (!log_.empty()) {
      const uint32_t lc = log_[c];
      const uint64_t m = q_ - 1;
      for (size_t i = 0; i < n; ++i) {
        uint32_t s = src[i];
        if (s == 0) continue;
        uint64_t l = uint64_t(lc) + log_[s];
        if (l >= m) l -= m;
        dst[i] = add(dst[i], exp_[l]);
      }
      return;
    }
    for (size_t i = 0; i < n; ++i)
      if (src[i] != 0) dst[i] = add(dst[i], mul(c, src[i]));
  }

  void scale_row(uint32_t* dst, uint32_t c, size_t n) const {
    for (size_t i = 0; i < n; ++i) dst[i] = mul(dst[i], c);
  }

  std::string to_string(uint32_t a) const { return std::to_string(a); }

 private:
  static bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  void select_modulus() {
    // Lexicographically least monic irreducible: scan packed low parts
    // ascending; the leading coefficient is the implicit 1.
    for (uint64_t c = 0; c < q_; ++c) {
      std::vector<uint32_t> f(e_ + 1, 0);
      uint64_t v = c;
      for (uint64_t i = 0; i < e_; ++i) {
        f[i] = uint32_t(v % p_);
        v /= p_;
      }
      f[e_] = 1;
      if (detail::poly_irreducible(f, p_)) {
        modulus_ = f;
        return;
      }
    }
    throw std::logic_error("no irreducible modulus found");
  }

  std::vector<uint32_t> to_poly(uint32_t a) const {
    std::vector<uint32_t> d;
    while (a) {
      d.push_back(uint32_t(a % p_));
      a = uint32_t(a / p_);
    }
    return d;
  }

  uint32_t from_poly(const std::vector<uint32_t>& d) const {
    uint64_t v = 0;
    for (size_t i = d.size(); i-- > 0;) v = v * p_ + d[i];
    return uint32_t(v);
  }

  uint32_t slow_add(uint32_t a, uint32_t b) const {
    uint64_t out = 0;
    for (uint64_t i = 0; i < e_ && (a || b); ++i) {
      uint64_t da = a % p_, db = b % p_;
      out += (da + db) % p_ * pow_p_[i];
      a = uint32_t(a / p_);
      b = uint32_t(b / p_);
    }
    return uint32_t(out);
  }

  uint32_t slow_neg(uint32_t a) const {
    uint64_t out = 0;
    for (uint64_t i = 0; i < e_ && a; ++i) {
      uint64_t d = a % p_;
      if (d) out += (p_ - d) * pow_p_[i];
      a = uint32_t(a / p_);
    }
    return uint32_t(out);
  }

  uint32_t slow_mul(uint32_t a, uint32_t b) const {
    return from_poly(detail::poly_mulmod(to_poly(a), to_poly(b), modulus_, p_));
  }

  void build_tables() {
    // negation and chunked addition
    if (e_ > 1) {
      uint64_t h = (e_ + 1) / 2;
      chunk_ = pow_p_[h];
      add_lo_.resize(chunk_ * chunk_);
      for (uint64_t a = 0; a < chunk_; ++a)
        for (uint64_t b = 0; b < chunk_; ++b) {
          uint64_t out = 0, x = a, y = b;
          for (uint64_t i = 0; i < h; ++i) {
            out += (x % p_ + y % p_) % p_ * pow_p_[i];
            x /= p_;
            y /= p_;
          }
          add_lo_[a * chunk_ + b] = uint32_t(out);
        }
      neg_tab_.resize(q_);
      for (uint64_t a = 0; a < q_; ++a) neg_tab_[a] = slow_neg(uint32_t(a));
    }
    // multiplicative tables from a primitive element
    uint64_t m = q_ - 1;
    std::vector<uint64_t> prime_factors;
    uint64_t mm = m;
    for (uint64_t d = 2; d * d <= mm; ++d)
      if (mm % d == 0) {
        prime_factors.push_back(d);
        while (mm % d == 0) mm /= d;
      }
    if (mm > 1) prime_factors.push_back(mm);
    auto slow_pow_packed = [&](uint32_t a, uint64_t k) {
      uint32_t acc = 1, base = a;
      while (k) {
        if (k & 1) acc = slow_mul_generic(acc, base);
        base = slow_mul_generic(base, base);
        k >>= 1;
      }
      return acc;
    };
    uint32_t g = 0;
    for (uint64_t cand = 2; cand < q_; ++cand) {
      bool ok = true;
      for (uint64_t f : prime_factors)
        if (slow_pow_packed(uint32_t(cand), m / f) == 1) {
          ok = false;
          break;
        }
      if (ok) {
        g = uint32_t(cand);
        break;
      }
    }
    if (g == 0) throw std::logic_error("no primitive element");
    exp_.resize(m);
    log_.assign(q_, 0);
    uint32_t cur = 1;
    for (uint64_t i = 0; i < m; ++i) {
      exp_[i] = cur;
      log_[cur] = uint32_t(i);
      cur = slow_mul_generic(cur, g);
    }
  }

  uint32_t slow_mul_generic(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (e_ == 1) return uint32_t(uint64_t(a) * b % p_);
    return slow_mul(a, b);
  }

  uint64_t p_, e_, q_;
  std::vector<uint64_t> pow_p_;
  std::vector<uint32_t> modulus_;
  std::vector<uint32_t> exp_, log_;
  std::vector<uint32_t> add_lo_, neg_tab_;
  uint64_t chunk_ = 0;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

inline FieldPtr make_field(uint64_t p, uint64_t e) {
  return std::make_shared<FieldCtx>(p, e);
}

/// All t with t^p - t = c, ascending by packed value; empty or exactly p.
inline std::vector<uint32_t> artin_schreier_roots(const FieldCtx& F,
                                                  uint32_t c) {
  if (F.order() > FieldCtx::kEnumLimit)
    throw Error(ErrorCode::TooLarge, "field too large for exhaustive scan");
  std::vector<uint32_t> roots;
  for (uint64_t t = 0; t < F.order(); ++t) {
    uint32_t tt = uint32_t(t);
    if (F.sub(F.frobenius(tt), tt) == c) roots.push_back(tt);
  }
  return roots;
}

}  // namespace superalg
