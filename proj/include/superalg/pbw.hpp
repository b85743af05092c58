#pragma once
// Enveloping superalgebra U(g): PBW normal form and super straightening,
// p-center generators xi_i = x_i^p - x_i^{[p]}, the Casimir element, ad and
// ad' actions, and the Harish-Chandra projection gamma = beta . gamma_1.
//
// Elements are stored in the "storage" PBW order (even basis elements by
// index, then odd ones).  gamma_1 internally re-straightens into a triangular
// order n^- < h < n^+ and keeps the purely toral component.

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "superalg/weyl.hpp"

namespace superalg {

struct PbwMonomial {
  std::vector<uint16_t> even_exps;  // length s
  uint32_t odd_mask = 0;            // bit k = odd basis element s+k

  size_t degree() const {
    size_t d = 0;
    for (uint16_t e : even_exps) d += e;
    uint32_t m = odd_mask;
    while (m) d += m & 1, m >>= 1;
    return d;
  }
  int parity() const {
    uint32_t m = odd_mask;
    int p = 0;
    while (m) p ^= m & 1, m >>= 1;
    return p;
  }
  bool is_one() const {
    if (odd_mask) return false;
    for (uint16_t e : even_exps)
      if (e) return false;
    return true;
  }
  auto operator<=>(const PbwMonomial&) const = default;
};

// Normal-form element of U(g); no zero coefficients, so map equality is
// element equality and rendering is canonical.
struct EnvElement {
  std::map<PbwMonomial, uint32_t> terms;

  bool is_zero() const { return terms.empty(); }
  uint32_t coeff(const PbwMonomial& m) const {
    auto it = terms.find(m);
    return it == terms.end() ? 0 : it->second;
  }
  bool operator==(const EnvElement&) const = default;
};

inline void env_accum(const FieldCtx& F, EnvElement& a, const PbwMonomial& m,
                      uint32_t c) {
  if (c == 0) return;
  auto [it, fresh] = a.terms.try_emplace(m, 0);
  it->second = F.add(it->second, c);
  if (it->second == 0) a.terms.erase(it);
}

inline EnvElement env_add(const FieldCtx& F, const EnvElement& a,
                          const EnvElement& b) {
  EnvElement out = a;
  for (const auto& [m, c] : b.terms) env_accum(F, out, m, c);
  return out;
}

inline EnvElement env_scale(const FieldCtx& F, const EnvElement& a,
                            uint32_t c) {
  EnvElement out;
  if (c == 0) return out;
  for (const auto& [m, v] : a.terms) out.terms.emplace(m, F.mul(v, c));
  return out;
}

inline EnvElement env_sub(const FieldCtx& F, const EnvElement& a,
                          const EnvElement& b) {
  return env_add(F, a, env_scale(F, b, F.neg(1)));
}

// Polynomial on the Cartan subalgebra: sparse exponent vectors over the toral
// basis H_1..H_r.  Evaluation at a weight is a ring homomorphism.
struct HCPolynomial {
  std::map<std::vector<uint16_t>, uint32_t> terms;
  bool operator==(const HCPolynomial&) const = default;
  bool is_zero() const { return terms.empty(); }
};

inline HCPolynomial hc_one(size_t r) {
  HCPolynomial p;
  p.terms.emplace(std::vector<uint16_t>(r, 0), 1);
  return p;
}

inline HCPolynomial hc_variable(size_t r, size_t i, uint32_t c = 1) {
  HCPolynomial p;
  std::vector<uint16_t> e(r, 0);
  e[i] = 1;
  if (c) p.terms.emplace(std::move(e), c);
  return p;
}

inline void hc_accum(const FieldCtx& F, HCPolynomial& a,
                     const std::vector<uint16_t>& e, uint32_t c) {
  if (c == 0) return;
  auto [it, fresh] = a.terms.try_emplace(e, 0);
  it->second = F.add(it->second, c);
  if (it->second == 0) a.terms.erase(it);
}

inline HCPolynomial hc_add(const FieldCtx& F, const HCPolynomial& a,
                           const HCPolynomial& b) {
  HCPolynomial out = a;
  for (const auto& [e, c] : b.terms) hc_accum(F, out, e, c);
  return out;
}

inline HCPolynomial hc_scale(const FieldCtx& F, const HCPolynomial& a,
                             uint32_t c) {
  HCPolynomial out;
  if (c == 0) return out;
  for (const auto& [e, v] : a.terms) out.terms.emplace(e, F.mul(v, c));
  return out;
}

inline HCPolynomial hc_sub(const FieldCtx& F, const HCPolynomial& a,
                           const HCPolynomial& b) {
  return hc_add(F, a, hc_scale(F, b, F.neg(1)));
}

inline HCPolynomial hc_mul(const FieldCtx& F, const HCPolynomial& a,
                           const HCPolynomial& b) {
  HCPolynomial out;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      std::vector<uint16_t> e = ea;
      for (size_t i = 0; i < e.size(); ++i)
        e[i] = static_cast<uint16_t>(e[i] + eb[i]);
      hc_accum(F, out, e, F.mul(ca, cb));
    }
  return out;
}

inline HCPolynomial hc_pow(const FieldCtx& F, size_t r, const HCPolynomial& a,
                           size_t k) {
  HCPolynomial out = hc_one(r);
  for (size_t i = 0; i < k; ++i) out = hc_mul(F, out, a);
  return out;
}

/// Substitute variable i by images[i] in every monomial.
inline HCPolynomial hc_substitute(const FieldCtx& F, const HCPolynomial& p,
                                  const std::vector<HCPolynomial>& images) {
  size_t r = images.size();
  HCPolynomial out;
  for (const auto& [e, c] : p.terms) {
    HCPolynomial term = hc_one(r);
    for (size_t i = 0; i < r; ++i)
      if (e[i]) term = hc_mul(F, term, hc_pow(F, r, images[i], e[i]));
    out = hc_add(F, out, hc_scale(F, term, c));
  }
  return out;
}

/// Ring-homomorphic evaluation at a weight.
inline uint32_t evaluate_hc(const FieldCtx& F, const HCPolynomial& p,
                            const Weight& lambda) {
  uint32_t acc = 0;
  for (const auto& [e, c] : p.terms) {
    uint32_t v = c;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) v = F.mul(v, F.pow(lambda.values[i], e[i]));
    acc = F.add(acc, v);
  }
  return acc;
}

/// (w.p)(lambda) = p(w^{-1} lambda): substitute H_i by w(H_i) in the toral
/// basis, read off w's matrix on the Cartan.
inline HCPolynomial weyl_act_on_hc(const LieSuperalgebra& g,
                                   const WeylElement& w,
                                   const HCPolynomial& p) {
  size_t r = g.rank();
  std::vector<HCPolynomial> images(r);
  for (size_t i = 0; i < r; ++i) {
    HCPolynomial img;
    for (size_t j = 0; j < r; ++j)
      img = hc_add(*g.F, img, hc_variable(r, j, w.h_mat(j, i)));
    images[i] = std::move(img);
  }
  return hc_substitute(*g.F, p, images);
}

inline std::string hc_to_string(const LieSuperalgebra& g,
                                const HCPolynomial& p) {
  if (p.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms) {
    if (!first) os << " + ";
    first = false;
    bool has_var = false;
    for (uint16_t x : e) has_var |= x != 0;
    if (c != 1 || !has_var) os << g.F->to_string(c);
    bool lead = c != 1 || !has_var;
    for (size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!lead) lead = true; else os << "*";
      os << g.basis[g.cartan[i]].label;
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

// PBW straightening context.  Holds the memo tables for both generator
// orders; elements are immutable values, so the only shared mutable state is
// the caches, guarded by a single lock.
class Pbw {
 public:
  explicit Pbw(const LieSuperalgebra& g, size_t degree_cap = 0)
      : g_(&g), F_(g.F), cap_(degree_cap ? degree_cap : 3 * g.F->p()) {
    if (3 * static_cast<size_t>(F_->p()) > 60000)
      throw Error(ErrorCode::TooLarge,
                  "characteristic too large for enveloping-algebra work");
    storage_.pos.resize(g.dim());
    for (size_t i = 0; i < g.dim(); ++i) storage_.pos[i] = i;
    // Triangular order n^- < h < n^+: rank by (class, basis index).
    std::vector<int> cls(g.dim(), 1);
    size_t classified = g.rank();
    for (const Root& rt : g.roots) {
      cls[rt.e_index] = 2;
      cls[rt.f_index] = 0;
      classified += 2;
    }
    if (classified != g.dim())
      throw std::logic_error("basis has elements outside h and root spaces");
    std::vector<size_t> seq(g.dim());
    for (size_t i = 0; i < g.dim(); ++i) seq[i] = i;
    std::sort(seq.begin(), seq.end(), [&](size_t a, size_t b) {
      return std::make_pair(cls[a], a) < std::make_pair(cls[b], b);
    });
    tri_.pos.resize(g.dim());
    for (size_t k = 0; k < g.dim(); ++k) tri_.pos[seq[k]] = k;
  }

  const LieSuperalgebra& algebra() const { return *g_; }
  size_t degree_cap() const { return cap_; }

  EnvElement one() const {
    EnvElement e;
    e.terms.emplace(PbwMonomial{std::vector<uint16_t>(g_->s, 0), 0}, 1);
    return e;
  }
  EnvElement scalar(uint32_t c) const { return env_scale(*F_, one(), c); }

  PbwMonomial unit_monomial(size_t basis_index) const {
    PbwMonomial m{std::vector<uint16_t>(g_->s, 0), 0};
    if (basis_index < g_->s)
      m.even_exps[basis_index] = 1;
    else
      m.odd_mask |= 1u << (basis_index - g_->s);
    return m;
  }
  EnvElement generator(size_t basis_index) const {
    EnvElement e;
    e.terms.emplace(unit_monomial(basis_index), 1);
    return e;
  }
  EnvElement from_sparse(const SparseVec& a) const {
    EnvElement e;
    for (const auto& [i, c] : a) e.terms.emplace(unit_monomial(i), c);
    return e;
  }
  EnvElement monomial(PbwMonomial m) const {
    EnvElement e;
    e.terms.emplace(std::move(m), 1);
    return e;
  }

  /// PBW normal form of a*b.
  EnvElement mul(const EnvElement& a, const EnvElement& b) {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    EnvElement out;
    for (const auto& [m, c] : a.terms)
      out = env_add(*F_, out, env_scale(*F_, mono_times(storage_, m, b), c));
    return out;
  }

  /// ad x(u) = xu - (-1)^{|x||u|} ux, extended additively over the parity
  /// decomposition of u.
  EnvElement ad(size_t x, const EnvElement& u) {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    return commutator_action(x, u, /*prime=*/false);
  }

  /// ad' x(u) = xu - (-1)^{|x|(|u|+1)} ux (the twisted action whose kernel at
  /// reduced level is the anti-center).
  EnvElement ad_prime(size_t x, const EnvElement& u) {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    return commutator_action(x, u, /*prime=*/true);
  }

  /// xi_i = x_i^p - x_i^{[p]} for an even basis element; central in U(g).
  EnvElement p_center_generator(size_t i) {
    if (i >= g_->s) throw Error(ErrorCode::OddInput, "xi_i needs an even index");
    PbwMonomial m{std::vector<uint16_t>(g_->s, 0), 0};
    m.even_exps[i] = static_cast<uint16_t>(F_->p());
    EnvElement out = monomial(std::move(m));
    return env_sub(*F_, out, from_sparse(g_->p_map[i]));
  }

  /// Casimir element from dual bases of the invariant form:
  /// Omega = sum_i (-1)^{|b_i|} b_i b^i with (b_i, b^j) = delta_ij.
  /// Centrality is checked against every generator on first use.
  EnvElement casimir() {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    if (casimir_) return *casimir_;
    Matrix inv = g_->form.inverse();
    if (inv.rows() == 0)
      throw std::logic_error("invariant form is degenerate");
    EnvElement omega;
    for (size_t i = 0; i < g_->dim(); ++i) {
      SparseVec dual;
      for (size_t k = 0; k < g_->dim(); ++k)
        if (inv(k, i)) dual.push_back({k, inv(k, i)});
      EnvElement prod = mul(generator(i), from_sparse(dual));
      if (g_->parity(i)) prod = env_scale(*F_, prod, F_->neg(1));
      omega = env_add(*F_, omega, prod);
    }
    for (const auto& [m, c] : omega.terms)
      if (m.parity() != 0)
        throw std::logic_error("Casimir has an odd component");
    for (size_t x = 0; x < g_->dim(); ++x)
      if (!commutator_action(x, omega, false).is_zero())
        throw std::logic_error("Casimir is not central");
    casimir_ = omega;
    return omega;
  }

  /// Image of u under the algebra automorphism extending the Lie-algebra
  /// automorphism `aut` (e.g. Ad of a Weyl-group representative).
  EnvElement apply_automorphism(const Matrix& aut, const EnvElement& u) {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    EnvElement out;
    for (const auto& [m, c] : u.terms) {
      EnvElement acc = one();
      for (size_t i = 0; i < g_->s; ++i)
        for (uint16_t rep = 0; rep < m.even_exps[i]; ++rep)
          acc = mul(acc, from_sparse(apply_aut(*g_, aut, {{i, 1}})));
      for (size_t k = 0; k < g_->t; ++k)
        if (m.odd_mask >> k & 1)
          acc = mul(acc, from_sparse(apply_aut(*g_, aut, {{g_->s + k, 1}})));
      out = env_add(*F_, out, env_scale(*F_, acc, c));
    }
    return out;
  }

  /// Re-straighten a storage-order element into the triangular generator
  /// order n^- < h < n^+ (monomials of the result are read in that order).
  EnvElement to_triangular(const EnvElement& u) {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    EnvElement out;
    for (const auto& [m, c] : u.terms)
      out = env_add(*F_, out, env_scale(*F_, mono_times(tri_, m, one()), c));
    return out;
  }

  /// Word position of a basis generator in the triangular order.
  size_t triangular_pos(size_t basis_index) const {
    return tri_.pos[basis_index];
  }

  /// gamma_1(u): re-straighten into the triangular order and keep the purely
  /// toral component phi_0 of u = phi_0 + sum u_i^- u_i^+ phi_i.
  HCPolynomial gamma1(const EnvElement& u) {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    size_t r = g_->rank();
    HCPolynomial out;
    for (const auto& [m, c] : u.terms) {
      EnvElement tri = mono_times(tri_, m, one());
      for (const auto& [tm, tc] : tri.terms) {
        if (tm.odd_mask) continue;
        bool pure = true;
        for (size_t i = r; i < g_->s && pure; ++i) pure = tm.even_exps[i] == 0;
        if (!pure) continue;
        std::vector<uint16_t> e(tm.even_exps.begin(),
                                tm.even_exps.begin() + r);
        hc_accum(*F_, out, e, F_->mul(c, tc));
      }
    }
    return out;
  }

  /// beta: H_i -> H_i - rho(H_i), so that gamma(z)(lambda) = gamma_1(z)(lambda - rho).
  HCPolynomial beta(const HCPolynomial& p) const {
    size_t r = g_->rank();
    std::vector<HCPolynomial> images(r);
    for (size_t i = 0; i < r; ++i)
      images[i] = hc_add(*F_, hc_variable(r, i),
                         hc_scale(*F_, hc_one(r), F_->neg(g_->rho.values[i])));
    return hc_substitute(*F_, p, images);
  }

  HCPolynomial gamma(const EnvElement& u) { return beta(gamma1(u)); }

  std::string to_string(const EnvElement& u) const {
    if (u.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : u.terms) {
      if (!first) os << " + ";
      first = false;
      bool lead = c != 1 || m.is_one();
      if (lead) os << F_->to_string(c);
      for (size_t i = 0; i < g_->s; ++i) {
        if (!m.even_exps[i]) continue;
        if (!lead) lead = true; else os << "*";
        os << g_->basis[i].label;
        if (m.even_exps[i] > 1) os << "^" << m.even_exps[i];
      }
      for (size_t k = 0; k < g_->t; ++k) {
        if (!(m.odd_mask >> k & 1)) continue;
        if (!lead) lead = true; else os << "*";
        os << g_->basis[g_->s + k].label;
      }
    }
    return os.str();
  }

 private:
  struct Order {
    std::vector<size_t> pos;  // pos[basis_index] = slot in the PBW word
    std::map<std::pair<size_t, PbwMonomial>, EnvElement> gen_memo;
  };

  const LieSuperalgebra* g_;
  FieldPtr F_;
  size_t cap_;
  Order storage_, tri_;
  std::optional<EnvElement> casimir_;
  mutable std::recursive_mutex mu_;

  // Active factors of m sorted by word position under `o`.
  std::vector<size_t> factors(const Order& o, const PbwMonomial& m) const {
    std::vector<size_t> f;
    for (size_t i = 0; i < g_->s; ++i)
      if (m.even_exps[i]) f.push_back(i);
    for (size_t k = 0; k < g_->t; ++k)
      if (m.odd_mask >> k & 1) f.push_back(g_->s + k);
    std::sort(f.begin(), f.end(),
              [&](size_t a, size_t b) { return o.pos[a] < o.pos[b]; });
    return f;
  }

  static PbwMonomial erase_one(PbwMonomial m, size_t idx, size_t s) {
    if (idx < s)
      --m.even_exps[idx];
    else
      m.odd_mask &= ~(1u << (idx - s));
    return m;
  }

  // Straighten generator * normal monomial under order o.
  EnvElement gen_times(Order& o, size_t gen, const PbwMonomial& m) {
    auto key = std::make_pair(gen, m);
    auto hit = o.gen_memo.find(key);
    if (hit != o.gen_memo.end()) return hit->second;

    EnvElement out;
    if (m.is_one()) {
      out = generator(gen);
    } else {
      std::vector<size_t> f = factors(o, m);
      size_t v = f.front();
      if (o.pos[gen] < o.pos[v] ||
          (gen == v && gen < g_->s)) {  // prepend / raise exponent
        if (m.degree() + 1 > cap_)
          throw Error(ErrorCode::TooLarge,
                      "filtration degree cap exceeded; use the reduced algebra");
        PbwMonomial n = m;
        if (gen < g_->s)
          ++n.even_exps[gen];
        else
          n.odd_mask |= 1u << (gen - g_->s);
        out.terms.emplace(std::move(n), 1);
      } else if (gen == v) {  // odd square: y*(y*rest) = (1/2)[y,y]*rest
        PbwMonomial rest = erase_one(m, v, g_->s);
        for (const auto& [k, c] : g_->bracket(gen, gen))
          out = env_add(*F_, out,
                        env_scale(*F_, gen_times(o, k, rest),
                                  F_->mul(F_->half(), c)));
      } else {  // swap past the leading factor
        PbwMonomial rest = erase_one(m, v, g_->s);
        EnvElement inner = gen_times(o, gen, rest);
        uint32_t sign = (g_->parity(gen) && g_->parity(v)) ? F_->neg(1) : 1;
        for (const auto& [im, ic] : inner.terms)
          out = env_add(*F_, out,
                        env_scale(*F_, gen_times(o, v, im), F_->mul(sign, ic)));
        for (const auto& [k, c] : g_->bracket(gen, v))
          out = env_add(*F_, out, env_scale(*F_, gen_times(o, k, rest), c));
      }
    }
    o.gen_memo.emplace(std::move(key), out);
    return out;
  }

  EnvElement gen_times_elem(Order& o, size_t gen, const EnvElement& u) {
    EnvElement out;
    for (const auto& [m, c] : u.terms)
      out = env_add(*F_, out, env_scale(*F_, gen_times(o, gen, m), c));
    return out;
  }

  // m * u where m's word is read in storage order (valid for storage-normal
  // monomials); straightening happens under `o`, so this also converts
  // storage-normal input into o-normal form.
  EnvElement mono_times(Order& o, const PbwMonomial& m, const EnvElement& u) {
    EnvElement acc = u;
    for (size_t k = g_->t; k-- > 0;)
      if (m.odd_mask >> k & 1) acc = gen_times_elem(o, g_->s + k, acc);
    for (size_t i = g_->s; i-- > 0;)
      for (uint16_t rep = 0; rep < m.even_exps[i]; ++rep)
        acc = gen_times_elem(o, i, acc);
    return acc;
  }

  EnvElement commutator_action(size_t x, const EnvElement& u, bool prime) {
    EnvElement even_part, odd_part;
    for (const auto& [m, c] : u.terms)
      (m.parity() ? odd_part : even_part).terms.emplace(m, c);
    uint32_t sx = g_->parity(x) ? F_->neg(1) : 1;
    // ad:  sign(u0) = 1,  sign(u1) = (-1)^{|x|}
    // ad': sign(u0) = (-1)^{|x|}, sign(u1) = 1
    EnvElement left = mul(generator(x), u);
    EnvElement right0 = mul(even_part, generator(x));
    EnvElement right1 = mul(odd_part, generator(x));
    if (prime) std::swap(right0, right1);
    EnvElement out = env_sub(*F_, left, right0);
    return env_sub(*F_, out, env_scale(*F_, right1, sx));
  }
};

}  // namespace superalg
