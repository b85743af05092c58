#pragma once
// Reduced enveloping superalgebra U_chi(g) for a p-character chi.
//
// Basis: PBW monomials with even exponents < p and odd bits, dim = p^s 2^t.
// Products are straightened in U(g) and then reduced by the central
// substitution x_i^p -> x_i^{[p]} + chi(x_i)^p * 1 until all exponents are
// below p.  Requires p odd; the ambient straightening context carries an
// enlarged degree cap 2(s(p-1)+t)+2 so products of two reduced monomials
// never trip it.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superalg/pbw.hpp"

namespace superalg {

// Sparse coefficient vector over the reduced monomial basis.
using AlgebraElement = SparseVec;

struct CentralCharacterTable {
  std::vector<Weight> lambdas;                 // enumerate_lambda order
  std::vector<std::vector<uint32_t>> values;   // values[l][k] = Theta_l(z_k)
};

class ReducedAlgebra {
 public:
  static constexpr uint64_t kDimLimit = 4000;

  ReducedAlgebra(const LieSuperalgebra& g, PCharacter chi)
      : g_(&g),
        F_(g.F),
        chi_(std::move(chi)),
        pbw_(g, 2 * (g.s * (g.F->p() - 1) + g.t) + 2) {
    if (chi_.values.size() != g_->s)
      throw std::logic_error("p-character length does not match the algebra");
    uint64_t d = 1;
    for (size_t i = 0; i < g_->s; ++i) {
      d *= F_->p();
      if (d > kDimLimit)
        throw Error(ErrorCode::TooLarge,
                    "reduced algebra dimension p^s 2^t exceeds " +
                        std::to_string(kDimLimit));
    }
    for (size_t i = 0; i < g_->t; ++i) {
      d *= 2;
      if (d > kDimLimit)
        throw Error(ErrorCode::TooLarge,
                    "reduced algebra dimension p^s 2^t exceeds " +
                        std::to_string(kDimLimit));
    }
    dim_ = static_cast<size_t>(d);
    pow_p_.resize(g_->s + 1);
    pow_p_[0] = 1;
    for (size_t i = 0; i < g_->s; ++i) pow_p_[i + 1] = pow_p_[i] * F_->p();
    chi_p_.resize(g_->s);
    for (size_t i = 0; i < g_->s; ++i)
      chi_p_[i] = F_->pow(g.chi_value(chi_, i), F_->p());
    // ad-h eigenvalue of each basis generator: [H_i, x_j] = wcoord_[i][j] x_j.
    wcoord_.assign(g_->rank(), std::vector<uint32_t>(g_->dim(), 0));
    for (size_t i = 0; i < g_->rank(); ++i)
      for (size_t j = 0; j < g_->dim(); ++j)
        wcoord_[i][j] = sv_get(g_->table[g_->cartan[i]][j], j);
  }

  const LieSuperalgebra& algebra() const { return *g_; }
  const PCharacter& chi() const { return chi_; }
  size_t dim() const { return dim_; }
  Pbw& pbw() { return pbw_; }

  // Mixed-radix rank: even exponents are base-p digits (slot i has weight
  // p^i), the odd mask occupies the high digits.  Index 0 is the unit.
  size_t index_of(const PbwMonomial& m) const {
    uint64_t idx = static_cast<uint64_t>(m.odd_mask) * pow_p_[g_->s];
    for (size_t i = 0; i < g_->s; ++i) {
      if (m.even_exps[i] >= F_->p())
        throw std::logic_error("monomial is not reduced");
      idx += static_cast<uint64_t>(m.even_exps[i]) * pow_p_[i];
    }
    return static_cast<size_t>(idx);
  }

  PbwMonomial monomial_at(size_t idx) const {
    PbwMonomial m;
    m.even_exps.assign(g_->s, 0);
    uint64_t v = idx;
    for (size_t i = 0; i < g_->s; ++i) {
      m.even_exps[i] = static_cast<uint16_t>(v % F_->p());
      v /= F_->p();
    }
    m.odd_mask = static_cast<uint32_t>(v);
    return m;
  }

  int parity_at(size_t idx) const {
    return std::popcount(static_cast<uint32_t>(idx / pow_p_[g_->s])) & 1;
  }

  AlgebraElement unit() const { return {{0, 1}}; }

  // Image of a straightened U(g) element under U(g) ->> U_chi(g).
  AlgebraElement reduce(const EnvElement& u) {
    std::lock_guard<std::mutex> lk(mu_);
    return reduce_locked(u);
  }

  EnvElement lift(const AlgebraElement& a) const {
    EnvElement u;
    for (const auto& [idx, c] : a)
      if (c) u.terms.emplace(monomial_at(idx), c);
    return u;
  }

  AlgebraElement mult(const AlgebraElement& a, const AlgebraElement& b) {
    std::lock_guard<std::mutex> lk(mu_);
    std::map<size_t, uint32_t> acc;
    for (const auto& [i, ci] : a) {
      for (const auto& [j, cj] : b) {
        uint32_t c = F_->mul(ci, cj);
        if (!c) continue;
        for (const auto& [k, ck] : basis_mult_locked(i, j)) {
          uint32_t& slot = acc[k];
          slot = F_->add(slot, F_->mul(c, ck));
        }
      }
    }
    return compact(acc);
  }

  AlgebraElement scale(const AlgebraElement& a, uint32_t c) const {
    AlgebraElement out;
    for (const auto& [i, v] : a) {
      uint32_t w = F_->mul(v, c);
      if (w) out.emplace_back(i, w);
    }
    return out;
  }

  AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) const {
    std::map<size_t, uint32_t> acc(a.begin(), a.end());
    for (const auto& [i, v] : b) {
      uint32_t& slot = acc[i];
      slot = F_->add(slot, v);
    }
    return compact(acc);
  }

  AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) const {
    return add(a, scale(b, F_->neg(1)));
  }

  // ad x_g (a) = x_g a - (-1)^{|x_g||a|} a x_g on a basis monomial.
  AlgebraElement ad_gen(size_t gen, size_t idx) {
    std::lock_guard<std::mutex> lk(mu_);
    return ad_gen_nolock(gen, idx);
  }

  // ad' x_g (a) = x_g a - (-1)^{|x_g|(|a|+1)} a x_g on a basis monomial.
  AlgebraElement ad_prime_gen(size_t gen, size_t idx) {
    std::lock_guard<std::mutex> lk(mu_);
    return ad_prime_gen_nolock(gen, idx);
  }

  // ad-h weight of a basis monomial: r field eigenvalues, one per H_i.
  std::vector<uint32_t> weight_of(size_t idx) const {
    PbwMonomial m = monomial_at(idx);
    std::vector<uint32_t> w(g_->rank(), 0);
    for (size_t i = 0; i < g_->rank(); ++i) {
      uint32_t acc = 0;
      for (size_t j = 0; j < g_->s; ++j)
        if (m.even_exps[j])
          acc = F_->add(acc, F_->mul(F_->from_int(m.even_exps[j]),
                                     wcoord_[i][j]));
      for (size_t k = 0; k < g_->t; ++k)
        if (m.odd_mask >> k & 1) acc = F_->add(acc, wcoord_[i][g_->s + k]);
      w[i] = acc;
    }
    return w;
  }

  // Basis of the center: joint kernel of ad x over all basis generators,
  // returned parity-homogeneous (the homogeneous components of a central
  // element are central, since ad x respects the monomial parity split).
  // The center is purely even at regular semisimple chi, but odd central
  // elements do occur at singular characters once p divides a sum of
  // positive roots: for osp(1|2) at p = 3, chi = 0, the monomial weight of
  // x e is 3*eps = 0, and the kernel picks it up.  Callers assert evenness
  // where the theory claims it.
  const std::vector<AlgebraElement>& center_basis() {
    std::lock_guard<std::mutex> lk(mu_);
    if (!center_) {
      center_ = split_homogeneous(ad_kernel_locked(false));
      center_space_.emplace(F_, dim_);
      for (const AlgebraElement& z : *center_) center_space_->insert(dense(z));
    }
    return *center_;
  }

  // Basis of the anti-center: joint kernel of ad' x, parity-homogeneous.
  // Purely even for every configuration in range (unlike the center, this
  // survives the singular-character collapse).
  const std::vector<AlgebraElement>& anticenter_basis() {
    std::lock_guard<std::mutex> lk(mu_);
    if (!anticenter_)
      anticenter_ = split_homogeneous(ad_kernel_locked(true));
    return *anticenter_;
  }

  bool is_central(const AlgebraElement& z) {
    center_basis();
    std::lock_guard<std::mutex> lk(mu_);
    return center_space_->contains(dense(z));
  }

  // Scalar by which a central element acts on the highest-weight line of the
  // baby Verma module Z_chi(lambda); computed as gamma_1(lift(z))(lambda),
  // which is well defined on Lambda(chi) because lambda respects the
  // reduction x^p = x^{[p]} + chi(x)^p.
  uint32_t central_character(const AlgebraElement& z, const Weight& lambda) {
    if (!is_central(z))
      throw Error(ErrorCode::NotCentral,
                  "central_character requires a central element");
    require_weight_compatible(lambda);
    std::lock_guard<std::mutex> lk(mu_);
    HCPolynomial phi = pbw_.gamma1(lift(z));
    return evaluate_hc(*F_, phi, lambda);
  }

  // All central characters of Lambda(chi) on the center basis; column l is
  // the algebra homomorphism Theta_lambda restricted to the center.
  CentralCharacterTable central_character_table() {
    CentralCharacterTable t;
    t.lambdas = g_->enumerate_lambda(chi_);
    const auto& zs = center_basis();
    for (const Weight& lam : t.lambdas) {
      std::vector<uint32_t> row;
      row.reserve(zs.size());
      for (const AlgebraElement& z : zs)
        row.push_back(central_character(z, lam));
      t.values.push_back(std::move(row));
    }
    return t;
  }

  // Rank of left multiplication by a on the regular module.
  size_t left_mult_rank(const AlgebraElement& a) {
    Matrix L(F_, dim_, dim_);
    {
      std::lock_guard<std::mutex> lk(mu_);
      for (const auto& [i, ci] : a) {
        if (!ci) continue;
        for (size_t j = 0; j < dim_; ++j)
          for (const auto& [k, ck] : basis_mult_locked(i, j))
            L(k, j) = F_->add(L(k, j), F_->mul(ci, ck));
      }
    }
    return L.rank();
  }

  void require_weight_compatible(const Weight& lambda) const {
    if (lambda.values.size() != g_->rank())
      throw Error(ErrorCode::WeightNotCompatible,
                  "weight length does not match the Cartan rank");
    for (size_t i = 0; i < g_->rank(); ++i) {
      uint32_t l = lambda.values[i];
      // H_i^{[p]} = H_i on the toral basis, so the compatibility equation
      // lambda(H)^p - lambda(H^{[p]}) = chi(H)^p reads l^p - l = chi_p.
      if (F_->sub(F_->pow(l, F_->p()), l) != chi_p_[g_->cartan[i]])
        throw Error(ErrorCode::WeightNotCompatible,
                    "weight is not in Lambda(chi) at coordinate " +
                        std::to_string(i));
    }
  }

 private:
  AlgebraElement compact(const std::map<size_t, uint32_t>& acc) const {
    AlgebraElement out;
    for (const auto& [k, v] : acc)
      if (v) out.emplace_back(k, v);
    return out;
  }

  std::vector<uint32_t> dense(const AlgebraElement& a) const {
    std::vector<uint32_t> v(dim_, 0);
    for (const auto& [i, c] : a) v[i] = F_->add(v[i], c);
    return v;
  }

  AlgebraElement reduce_locked(const EnvElement& u) {
    std::map<size_t, uint32_t> acc;
    std::vector<std::pair<PbwMonomial, uint32_t>> work(u.terms.begin(),
                                                       u.terms.end());
    while (!work.empty()) {
      auto [m, c] = work.back();
      work.pop_back();
      if (!c) continue;
      size_t over = g_->s;
      for (size_t i = 0; i < g_->s; ++i)
        if (m.even_exps[i] >= F_->p()) {
          over = i;
          break;
        }
      if (over == g_->s) {
        uint32_t& slot = acc[index_of(m)];
        slot = F_->add(slot, c);
        continue;
      }
      // m = L x^p R with the p-fold factor taken from the slot `over`;
      // substitute the central relation x^p = x^{[p]} + chi(x)^p.
      PbwMonomial left = m, right = m;
      left.odd_mask = 0;
      for (size_t i = 0; i < g_->s; ++i) {
        if (i < over) right.even_exps[i] = 0;
        if (i == over) {
          left.even_exps[i] = static_cast<uint16_t>(m.even_exps[i] - F_->p());
          right.even_exps[i] = 0;
        }
        if (i > over) left.even_exps[i] = 0;
      }
      EnvElement mid = env_add(*F_, pbw_.from_sparse(g_->p_map[over]),
                               pbw_.scalar(chi_p_[over]));
      EnvElement prod =
          pbw_.mul(pbw_.monomial(left),
                   pbw_.mul(mid, pbw_.monomial(right)));
      for (const auto& [tm, tc] : prod.terms)
        work.emplace_back(tm, F_->mul(c, tc));
    }
    return compact(acc);
  }

  const AlgebraElement& basis_mult_locked(size_t i, size_t j) {
    auto key = std::make_pair(i, j);
    auto it = pair_cache_.find(key);
    if (it != pair_cache_.end()) return it->second;
    EnvElement prod =
        pbw_.mul(pbw_.monomial(monomial_at(i)), pbw_.monomial(monomial_at(j)));
    return pair_cache_.emplace(key, reduce_locked(prod)).first->second;
  }

  const AlgebraElement& gen_mult_locked(size_t gen, size_t idx) {
    auto key = std::make_pair(gen, idx);
    auto it = gen_left_.find(key);
    if (it != gen_left_.end()) return it->second;
    EnvElement prod = pbw_.mul(pbw_.generator(gen),
                               pbw_.monomial(monomial_at(idx)));
    return gen_left_.emplace(key, reduce_locked(prod)).first->second;
  }

  const AlgebraElement& mult_gen_locked(size_t idx, size_t gen) {
    auto key = std::make_pair(idx, gen);
    auto it = gen_right_.find(key);
    if (it != gen_right_.end()) return it->second;
    EnvElement prod = pbw_.mul(pbw_.monomial(monomial_at(idx)),
                               pbw_.generator(gen));
    return gen_right_.emplace(key, reduce_locked(prod)).first->second;
  }

  // Joint kernel of ad (or ad') over all basis generators.  Toral ad is
  // diagonal on the monomial basis, so the kernel lives in the span of
  // weight-zero monomials; only root-vector actions are stacked, and only
  // their nonzero image rows are materialised.
  std::vector<AlgebraElement> ad_kernel_locked(bool prime) {
    std::vector<size_t> cands;
    for (size_t idx = 0; idx < dim_; ++idx) {
      std::vector<uint32_t> w = weight_of(idx);
      bool zero = true;
      for (uint32_t v : w) zero &= (v == 0);
      if (zero) cands.push_back(idx);
    }
    std::vector<size_t> gens;
    std::vector<bool> toral(g_->dim(), false);
    for (size_t c : g_->cartan) toral[c] = true;
    for (size_t x = 0; x < g_->dim(); ++x)
      if (!toral[x]) gens.push_back(x);

    std::map<std::pair<size_t, size_t>, size_t> row_id;  // (gen slot, row)
    std::vector<std::vector<std::pair<size_t, uint32_t>>> cols(cands.size());
    for (size_t c = 0; c < cands.size(); ++c) {
      for (size_t gslot = 0; gslot < gens.size(); ++gslot) {
        size_t x = gens[gslot];
        AlgebraElement v =
            prime ? ad_prime_gen_nolock(x, cands[c]) : ad_gen_nolock(x, cands[c]);
        for (const auto& [row, val] : v) {
          auto it = row_id.try_emplace(std::make_pair(gslot, row),
                                       row_id.size());
          cols[c].emplace_back(it.first->second, val);
        }
      }
    }
    Matrix M(F_, std::max<size_t>(row_id.size(), 1), cands.size());
    for (size_t c = 0; c < cands.size(); ++c)
      for (const auto& [r, val] : cols[c]) M(r, c) = val;
    Matrix ns = M.nullspace();
    std::vector<AlgebraElement> out;
    for (size_t k = 0; k < ns.rows(); ++k) {
      AlgebraElement el;
      for (size_t c = 0; c < cands.size(); ++c)
        if (uint32_t v = ns(k, c)) el.emplace_back(cands[c], v);
      out.push_back(std::move(el));
    }
    return out;
  }

  // Split kernel elements into their even and odd parts; each part stays in
  // the kernel, so the span is unchanged and the returned basis (even parts
  // first) has the same size.
  std::vector<AlgebraElement> split_homogeneous(
      const std::vector<AlgebraElement>& raw) const {
    RowSpace seen(F_, dim_);
    std::vector<AlgebraElement> out;
    for (int par : {0, 1})
      for (const AlgebraElement& z : raw) {
        AlgebraElement part;
        for (const auto& [idx, c] : z)
          if (parity_at(idx) == par) part.emplace_back(idx, c);
        if (part.empty()) continue;
        if (seen.insert(dense(part))) out.push_back(std::move(part));
      }
    return out;
  }

  AlgebraElement ad_gen_nolock(size_t gen, size_t idx) {
    AlgebraElement left = gen_mult_locked(gen, idx);
    AlgebraElement right = mult_gen_locked(idx, gen);
    bool flip = g_->parity(gen) && parity_at(idx);
    std::map<size_t, uint32_t> acc(left.begin(), left.end());
    uint32_t s = flip ? 1u : F_->neg(1);
    for (const auto& [k, v] : right) {
      uint32_t& slot = acc[k];
      slot = F_->add(slot, F_->mul(s, v));
    }
    return compact(acc);
  }

  AlgebraElement ad_prime_gen_nolock(size_t gen, size_t idx) {
    AlgebraElement left = gen_mult_locked(gen, idx);
    AlgebraElement right = mult_gen_locked(idx, gen);
    bool flip = g_->parity(gen) && !parity_at(idx);
    std::map<size_t, uint32_t> acc(left.begin(), left.end());
    uint32_t s = flip ? 1u : F_->neg(1);
    for (const auto& [k, v] : right) {
      uint32_t& slot = acc[k];
      slot = F_->add(slot, F_->mul(s, v));
    }
    return compact(acc);
  }

  const LieSuperalgebra* g_;
  FieldPtr F_;
  PCharacter chi_;
  Pbw pbw_;
  size_t dim_ = 0;
  std::vector<uint64_t> pow_p_;
  std::vector<uint32_t> chi_p_;
  std::vector<std::vector<uint32_t>> wcoord_;
  std::map<std::pair<size_t, size_t>, AlgebraElement> pair_cache_;
  std::map<std::pair<size_t, size_t>, AlgebraElement> gen_left_, gen_right_;
  std::optional<std::vector<AlgebraElement>> center_, anticenter_;
  std::optional<RowSpace> center_space_;
  std::mutex mu_;
};

inline ReducedAlgebra build_reduced(const LieSuperalgebra& g, PCharacter chi) {
  return ReducedAlgebra(g, std::move(chi));
}

}  // namespace superalg
