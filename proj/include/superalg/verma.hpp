#pragma once
// Baby Verma modules Z_chi(lambda) over the reduced enveloping superalgebra,
// their irreducibility and intertwiners, Weyl twists, and the truncated
// annihilator check.
//
// The module basis consists of monomials in the negative root vectors (even
// exponents < p, odd bits) applied to a highest-weight vector v_lambda, which
// is declared even.  Generator actions are straightened into the triangular
// order n^- < h < n^+, evaluated against h v = lambda(h) v and n^+ v = 0,
// and exponent overflows f^p collapse through f^p = f^{[p]} + chi(f)^p = 0
// (chi is supported on the Cartan and the negative root vectors have trivial
// p-th power, which is checked at construction).

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superalg/reduced.hpp"
#include "superalg/weyl.hpp"

namespace superalg {

struct BabyVerma {
  const LieSuperalgebra* g = nullptr;
  PCharacter chi;
  Weight lambda;               // highest weight (nominal label after a twist)
  size_t dim = 0;
  size_t hw_index = 0;         // position of v_lambda in the basis
  std::vector<int> parity;     // parity of each basis vector, v_lambda even
  std::vector<Matrix> actions; // actions[k] = rho(x_k) on the module
  std::vector<size_t> neg_even, neg_odd;  // basis indices of the f_alpha / y_beta
};

namespace detail {

inline std::vector<uint32_t> flatten(const Matrix& m) {
  std::vector<uint32_t> v;
  v.reserve(m.rows() * m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

// rho([a,b]) = rho(a)rho(b) - (-1)^{|a||b|} rho(b)rho(a) for all generator
// pairs, and rho(x)^p - rho(x^{[p]}) = chi(x)^p id for even x.
inline void verify_module_relations(const BabyVerma& M) {
  const LieSuperalgebra& g = *M.g;
  const FieldCtx& K = *g.F;
  for (size_t a = 0; a < g.dim(); ++a) {
    for (size_t b = 0; b < g.dim(); ++b) {
      Matrix rhs = M.actions[a] * M.actions[b];
      Matrix ba = M.actions[b] * M.actions[a];
      rhs = (g.parity(a) && g.parity(b)) ? rhs + ba : rhs - ba;
      Matrix lhs(g.F, M.dim, M.dim);
      for (const auto& [k, c] : g.table[a][b])
        lhs = lhs + M.actions[k].scaled(c);
      if (lhs != rhs)
        throw std::logic_error(g.name +
                               ": module violates the bracket relation at "
                               "generator pair (" +
                               std::to_string(a) + "," + std::to_string(b) +
                               ")");
    }
  }
  for (size_t a = 0; a < g.s; ++a) {
    Matrix lhs = M.actions[a].pow(K.p());
    for (const auto& [k, c] : g.p_map[a]) lhs = lhs - M.actions[k].scaled(c);
    uint32_t cp = K.pow(g.chi_value(M.chi, a), K.p());
    Matrix rhs = Matrix::identity(g.F, M.dim).scaled(cp);
    if (lhs != rhs)
      throw std::logic_error(g.name +
                             ": module violates the p-th power relation at "
                             "even generator " +
                             std::to_string(a));
  }
}

}  // namespace detail

/// Baby Verma module Z_chi(lambda) for chi supported on the Cartan and
/// lambda in Lambda(chi).  dim = p^{(s-r)/2} 2^{t/2}.
inline BabyVerma build_verma(const LieSuperalgebra& g, const PCharacter& chi,
                             const Weight& lambda) {
  const FieldCtx& K = *g.F;
  g.require_on_cartan(chi);
  if (lambda.values.size() != g.rank())
    throw Error(ErrorCode::WeightNotCompatible,
                "weight length does not match the Cartan rank");
  for (size_t i = 0; i < g.rank(); ++i) {
    uint32_t l = lambda.values[i];
    uint32_t cp = K.pow(g.chi_value(chi, g.cartan[i]), K.p());
    if (K.sub(K.pow(l, K.p()), l) != cp)
      throw Error(ErrorCode::WeightNotCompatible,
                  "weight is not in Lambda(chi) at coordinate " +
                      std::to_string(i));
  }

  BabyVerma M;
  M.g = &g;
  M.chi = chi;
  M.lambda = lambda;
  for (const Root& rt : g.roots)
    (rt.parity ? M.neg_odd : M.neg_even).push_back(rt.f_index);
  std::sort(M.neg_even.begin(), M.neg_even.end());
  std::sort(M.neg_odd.begin(), M.neg_odd.end());
  for (size_t f : M.neg_even)
    if (!g.p_map[f].empty())
      throw std::logic_error(g.name +
                             ": negative root vector has nonzero p-th power");
  uint64_t d = 1;
  for (size_t i = 0; i < M.neg_even.size(); ++i) d *= K.p();
  d <<= M.neg_odd.size();
  M.dim = static_cast<size_t>(d);
  M.hw_index = 0;

  std::vector<uint64_t> powp(M.neg_even.size() + 1, 1);
  for (size_t i = 0; i < M.neg_even.size(); ++i) powp[i + 1] = powp[i] * K.p();
  auto monomial_of = [&](size_t idx) {
    PbwMonomial m;
    m.even_exps.assign(g.s, 0);
    uint64_t v = idx;
    for (size_t i = 0; i < M.neg_even.size(); ++i) {
      m.even_exps[M.neg_even[i]] = static_cast<uint16_t>(v % K.p());
      v /= K.p();
    }
    for (size_t k = 0; k < M.neg_odd.size(); ++k)
      if (v >> k & 1) m.odd_mask |= 1u << (M.neg_odd[k] - g.s);
    return m;
  };
  M.parity.assign(M.dim, 0);
  for (size_t j = 0; j < M.dim; ++j)
    M.parity[j] = std::popcount(static_cast<uint32_t>(
                      j / powp[M.neg_even.size()])) &
                  1;

  // project a triangular-order monomial applied to v_lambda
  std::vector<int> is_cartan(g.dim(), -1);
  for (size_t i = 0; i < g.rank(); ++i) is_cartan[g.cartan[i]] = int(i);
  std::vector<int> neg_even_slot(g.dim(), -1), neg_odd_slot(g.dim(), -1);
  for (size_t i = 0; i < M.neg_even.size(); ++i)
    neg_even_slot[M.neg_even[i]] = int(i);
  for (size_t k = 0; k < M.neg_odd.size(); ++k)
    neg_odd_slot[M.neg_odd[k]] = int(k);

  Pbw U(g, 2 * (g.s * (K.p() - 1) + g.t) + 2);
  M.actions.assign(g.dim(), Matrix(g.F, M.dim, M.dim));
  for (size_t k = 0; k < g.dim(); ++k) {
    for (size_t j = 0; j < M.dim; ++j) {
      EnvElement tri = U.to_triangular(
          U.mul(U.generator(k), U.monomial(monomial_of(j))));
      for (const auto& [tm, tc] : tri.terms) {
        uint32_t c = tc;
        uint64_t target = 0;
        bool dead = false;
        for (size_t i = 0; i < g.s && !dead; ++i) {
          uint16_t e = tm.even_exps[i];
          if (!e) continue;
          if (is_cartan[i] >= 0) {
            for (uint16_t q = 0; q < e; ++q)
              c = K.mul(c, lambda.values[size_t(is_cartan[i])]);
          } else if (neg_even_slot[i] >= 0) {
            if (e >= K.p()) dead = true;  // f^p = f^{[p]} + chi(f)^p = 0
            else target += uint64_t(e) * powp[size_t(neg_even_slot[i])];
          } else {
            dead = true;  // positive root vector reaches v_lambda
          }
        }
        for (size_t b = 0; b < g.t && !dead; ++b) {
          if (!(tm.odd_mask >> b & 1)) continue;
          int slot = neg_odd_slot[g.s + b];
          if (slot < 0) dead = true;  // positive odd root vector
          else target += powp[M.neg_even.size()] << size_t(slot);
        }
        if (dead || !c) continue;
        uint32_t& cell = M.actions[k](static_cast<size_t>(target), j);
        cell = K.add(cell, c);
      }
    }
  }

  detail::verify_module_relations(M);
  for (size_t i = 0; i < g.rank(); ++i)
    for (size_t row = 0; row < M.dim; ++row) {
      uint32_t want = row == M.hw_index ? lambda.values[i] : 0;
      if (M.actions[g.cartan[i]](row, M.hw_index) != want)
        throw std::logic_error(g.name + ": v_lambda is not an h-eigenvector");
    }
  for (const Root& rt : g.roots)
    for (size_t row = 0; row < M.dim; ++row)
      if (M.actions[rt.e_index](row, M.hw_index))
        throw std::logic_error(g.name + ": n^+ does not annihilate v_lambda");
  return M;
}

/// rho(m) for a PBW monomial (factors in storage order).
inline Matrix monomial_action(const BabyVerma& M, const PbwMonomial& m) {
  const LieSuperalgebra& g = *M.g;
  Matrix acc = Matrix::identity(g.F, M.dim);
  for (size_t i = 0; i < g.s; ++i)
    for (uint16_t q = 0; q < m.even_exps[i]; ++q) acc = acc * M.actions[i];
  for (size_t b = 0; b < g.t; ++b)
    if (m.odd_mask >> b & 1) acc = acc * M.actions[g.s + b];
  return acc;
}

/// rho(a) for an element of the reduced algebra containing the module.
inline Matrix element_action(const BabyVerma& M, const ReducedAlgebra& A,
                             const AlgebraElement& a) {
  Matrix acc(M.g->F, M.dim, M.dim);
  for (const auto& [idx, c] : a)
    acc = acc + monomial_action(M, A.monomial_at(idx)).scaled(c);
  return acc;
}

/// Burnside criterion: the algebra generated by the rho(x_k) and the unit is
/// all of End(M) iff M is absolutely irreducible.  Deterministic span
/// closure seeded with the identity.
inline bool is_absolutely_irreducible(const BabyVerma& M) {
  const LieSuperalgebra& g = *M.g;
  size_t d = M.dim;
  RowSpace span(g.F, d * d);
  std::vector<Matrix> pool;
  auto push = [&](const Matrix& a) {
    if (span.insert(detail::flatten(a))) pool.push_back(a);
  };
  push(Matrix::identity(g.F, d));
  for (size_t head = 0; head < pool.size(); ++head) {
    Matrix cur = pool[head];  // pool may reallocate while we extend it
    for (size_t k = 0; k < g.dim(); ++k) push(M.actions[k] * cur);
  }
  return pool.size() == d * d;
}

struct Intertwiner {
  bool exists = false;
  bool invertible = false;
  Matrix matrix;  // one nonzero solution when exists
};

/// Solve X rho_1(x_k) = rho_2(x_k) X for all generators, intersecting the
/// solution space one generator at a time.
inline Intertwiner find_intertwiner(const BabyVerma& M1, const BabyVerma& M2) {
  if (M1.g != M2.g)
    throw std::logic_error("intertwiner requires modules over one algebra");
  const LieSuperalgebra& g = *M1.g;
  const FieldCtx& K = *g.F;
  size_t d1 = M1.dim, d2 = M2.dim, n = d2 * d1;
  // rows of `basis` span the current space of candidate X, flattened row-major
  Matrix basis = Matrix::identity(g.F, n);
  for (size_t k = 0; k < g.dim() && basis.rows(); ++k) {
    const Matrix& r1 = M1.actions[k];
    const Matrix& r2 = M2.actions[k];
    // (r2 X - X r1)(i,j) for X = basis row a reshaped d2 x d1
    Matrix eq(g.F, n, basis.rows());
    for (size_t a = 0; a < basis.rows(); ++a)
      for (size_t i = 0; i < d2; ++i)
        for (size_t j = 0; j < d1; ++j) {
          uint32_t acc = 0;
          for (size_t b = 0; b < d2; ++b)
            acc = K.add(acc, K.mul(r2(i, b), basis(a, b * d1 + j)));
          for (size_t b = 0; b < d1; ++b)
            acc = K.sub(acc, K.mul(basis(a, i * d1 + b), r1(b, j)));
          eq(i * d1 + j, a) = acc;
        }
    Matrix ns = eq.nullspace();
    basis = ns * basis;
  }
  Intertwiner out;
  if (!basis.rows()) return out;
  out.exists = true;
  Matrix first(g.F, d2, d1);
  for (size_t i = 0; i < d2; ++i)
    for (size_t j = 0; j < d1; ++j) first(i, j) = basis(0, i * d1 + j);
  out.matrix = first;
  if (d1 == d2)
    for (size_t a = 0; a < basis.rows() && !out.invertible; ++a) {
      Matrix X(g.F, d2, d1);
      for (size_t i = 0; i < d2; ++i)
        for (size_t j = 0; j < d1; ++j) X(i, j) = basis(a, i * d1 + j);
      if (X.rank() == d1) {
        out.invertible = true;
        out.matrix = X;
      }
    }
  return out;
}

/// Twist by a Weyl representative: rho^w(x) = rho(Ad(n_w)^{-1} x), a module
/// over the w-translated p-character.  The relabelled highest weight is not
/// assumed; highest_weight_of recovers it.
inline BabyVerma twist_by_weyl(const BabyVerma& M, const WeylElement& w) {
  const LieSuperalgebra& g = *M.g;
  Matrix aut = representative_of(g, w);  // may raise NilpotencyTooDeep
  Matrix aut_inv = aut.inverse();
  if (!aut_inv.rows())
    throw std::logic_error(g.name + ": Weyl representative not invertible");
  BabyVerma T;
  T.g = M.g;
  T.dim = M.dim;
  T.hw_index = M.hw_index;
  T.parity = M.parity;
  T.neg_even = M.neg_even;
  T.neg_odd = M.neg_odd;
  T.lambda = act_on_weight(g, w, M.lambda);
  T.chi.values.assign(g.s, 0);
  for (size_t i = 0; i < g.s; ++i) {
    uint32_t acc = 0;
    for (size_t j = 0; j < g.s; ++j)
      acc = g.F->add(acc, g.F->mul(aut_inv(j, i), M.chi.values[j]));
    T.chi.values[i] = acc;
  }
  T.actions.assign(g.dim(), Matrix(g.F, M.dim, M.dim));
  for (size_t k = 0; k < g.dim(); ++k) {
    Matrix acc(g.F, M.dim, M.dim);
    for (size_t j = 0; j < g.dim(); ++j)
      if (uint32_t c = aut_inv(j, k)) acc = acc + M.actions[j].scaled(c);
    T.actions[k] = std::move(acc);
  }
  detail::verify_module_relations(T);
  return T;
}

/// The unique b-stable line of the module: intersection of the kernels of
/// all positive root vectors, read off as a toral eigenvector.
inline Weight highest_weight_of(const BabyVerma& M) {
  const LieSuperalgebra& g = *M.g;
  Matrix C = Matrix::identity(g.F, M.dim);  // columns span the candidate space
  for (const Root& rt : g.roots) {
    Matrix img = M.actions[rt.e_index] * C;
    Matrix ns = img.nullspace();
    C = C * ns.transposed();
    if (!C.cols())
      throw Error(ErrorCode::NoStableLine,
                  g.name + ": positive root vectors have no common kernel");
  }
  if (C.cols() > 1)
    throw Error(ErrorCode::NotUnique,
                g.name + ": the n^+-stable subspace has dimension " +
                    std::to_string(C.cols()));
  size_t pivot = 0;
  while (pivot < M.dim && !C(pivot, 0)) ++pivot;
  Weight out;
  out.values.assign(g.rank(), 0);
  for (size_t i = 0; i < g.rank(); ++i) {
    // mu_i from the pivot row, then the whole column must match exactly
    Matrix hv = M.actions[g.cartan[i]] * C;
    uint32_t mu = g.F->mul(hv(pivot, 0), g.F->inv(C(pivot, 0)));
    for (size_t row = 0; row < M.dim; ++row)
      if (hv(row, 0) != g.F->mul(mu, C(row, 0)))
        throw Error(ErrorCode::NoStableLine,
                    g.name + ": stable line is not a toral eigenvector");
    out.values[i] = mu;
  }
  return out;
}

struct LemmaWaReport {
  PCharacter twisted_chi;
  Weight expected;   // w(lambda) - (rho - w(rho))
  Weight observed;   // highest weight of the twisted module
  bool weight_matches = false;
  // s(w) = sum of w-flipped even positive roots minus w-flipped odd positive
  // roots equals rho - w(rho), checked integrally (doubled, eps-lattice) and
  // on the toral basis over the field.
  bool shift_matches_roots = false;
  bool ok = false;
};

/// Twist Z_chi(lambda) by w and compare the observed highest weight with
/// lambda_w = w(lambda) - (rho - w(rho)).
inline LemmaWaReport verify_lemma_wa(const LieSuperalgebra& g,
                                     const PCharacter& chi,
                                     const Weight& lambda,
                                     const WeylElement& w) {
  const FieldCtx& K = *g.F;
  BabyVerma M = build_verma(g, chi, lambda);
  BabyVerma T = twist_by_weyl(M, w);
  LemmaWaReport rep;
  rep.twisted_chi = T.chi;
  rep.observed = highest_weight_of(T);

  Weight wrho = act_on_weight(g, w, g.rho);
  Weight wl = act_on_weight(g, w, lambda);
  rep.expected.values.assign(g.rank(), 0);
  for (size_t i = 0; i < g.rank(); ++i)
    rep.expected.values[i] =
        K.sub(wl.values[i], K.sub(g.rho.values[i], wrho.values[i]));
  rep.weight_matches = rep.observed == rep.expected;

  std::map<std::vector<int64_t>, int> pos;  // eps -> parity
  for (const Root& rt : g.roots) pos[rt.eps] = rt.parity;
  std::vector<int64_t> s_eps(g.eps_dim, 0);
  for (const Root& rt : g.roots) {
    std::vector<int64_t> img = apply_eps(w.eps_map, rt.eps);
    if (pos.count(img)) continue;  // stays positive
    std::vector<int64_t> neg(img.size());
    for (size_t k = 0; k < img.size(); ++k) neg[k] = -img[k];
    auto it = pos.find(neg);
    if (it == pos.end() || it->second != rt.parity)
      throw std::logic_error(g.name + ": Weyl image is not a root");
    for (size_t k = 0; k < g.eps_dim; ++k)
      s_eps[k] += (rt.parity ? -1 : 1) * rt.eps[k];
  }
  std::vector<int64_t> wrho2 = apply_eps(w.eps_map, g.rho2_eps);
  bool integral = true;
  for (size_t k = 0; k < g.eps_dim; ++k)
    integral &= (2 * s_eps[k] == g.rho2_eps[k] - wrho2[k]);
  Weight s_field = g.weight_from_eps(s_eps);
  bool field_match = true;
  for (size_t i = 0; i < g.rank(); ++i)
    field_match &= (s_field.values[i] ==
                    K.sub(g.rho.values[i], wrho.values[i]));
  rep.shift_matches_roots = integral && field_match;
  rep.ok = rep.weight_matches && rep.shift_matches_roots;
  return rep;
}

struct WedderburnReport {
  size_t lambda_count = 0;
  size_t verma_dim = 0;
  bool lambda_count_ok = false;   // |Lambda(chi)| = p^r
  bool all_irreducible = false;   // every Z_chi(lambda) absolutely irreducible
  bool pairwise_distinct = false; // no intertwiners between distinct lambda
  bool dim_identity = false;      // p^r d^2 = dim U_chi(g)
  bool ok = false;
};

/// Mechanical Wedderburn decomposition for regular semisimple chi:
/// U_chi(g) is a direct sum of p^r matrix blocks of size d = p^{(s-r)/2} 2^{t/2}.
inline WedderburnReport wedderburn_check(const ReducedAlgebra& A) {
  const LieSuperalgebra& g = A.algebra();
  if (!g.is_regular_semisimple(A.chi()))
    throw Error(ErrorCode::NotRegular,
                "Wedderburn structure requires a regular semisimple "
                "p-character");
  WedderburnReport rep;
  std::vector<Weight> lams = g.enumerate_lambda(A.chi());
  rep.lambda_count = lams.size();
  uint64_t pr = 1;
  for (size_t i = 0; i < g.rank(); ++i) pr *= g.F->p();
  rep.lambda_count_ok = (rep.lambda_count == pr);

  std::vector<BabyVerma> mods;
  rep.all_irreducible = true;
  for (const Weight& lam : lams) {
    mods.push_back(build_verma(g, A.chi(), lam));
    if (mods.back().dim != mods.front().dim)
      throw std::logic_error(g.name + ": baby Verma dimensions disagree");
    rep.all_irreducible &= is_absolutely_irreducible(mods.back());
  }
  rep.verma_dim = mods.empty() ? 0 : mods.front().dim;
  rep.pairwise_distinct = true;
  for (size_t i = 0; i < mods.size(); ++i)
    for (size_t j = i + 1; j < mods.size(); ++j)
      rep.pairwise_distinct &= !find_intertwiner(mods[i], mods[j]).exists;
  rep.dim_identity =
      (pr * rep.verma_dim * rep.verma_dim == uint64_t(A.dim()));
  rep.ok = rep.lambda_count_ok && rep.all_irreducible &&
           rep.pairwise_distinct && rep.dim_identity;
  return rep;
}

/// Rank of the trace form B(u,v) = tr(uv on M) on the image of the reduced
/// algebra in End(M); d^2 exactly when the image is a full matrix block.
inline size_t trace_form_rank(const ReducedAlgebra& A, const BabyVerma& M) {
  const LieSuperalgebra& g = A.algebra();
  const FieldCtx& K = *g.F;
  size_t d = M.dim;
  // rho of every reduced basis monomial, peeling the leftmost factor
  std::vector<Matrix> rep(A.dim());
  rep[0] = Matrix::identity(g.F, d);
  RowSpace span(g.F, d * d);
  std::vector<Matrix> image;
  span.insert(detail::flatten(rep[0]));
  image.push_back(rep[0]);
  for (size_t idx = 1; idx < A.dim(); ++idx) {
    PbwMonomial m = A.monomial_at(idx);
    size_t factor = g.dim();
    for (size_t i = 0; i < g.s; ++i)
      if (m.even_exps[i]) {
        factor = i;
        m.even_exps[i] -= 1;
        break;
      }
    if (factor == g.dim())
      for (size_t b = 0; b < g.t; ++b)
        if (m.odd_mask >> b & 1) {
          factor = g.s + b;
          m.odd_mask &= ~(1u << b);
          break;
        }
    rep[idx] = M.actions[factor] * rep[A.index_of(m)];
    if (span.insert(detail::flatten(rep[idx]))) image.push_back(rep[idx]);
  }
  Matrix gram(g.F, image.size(), image.size());
  for (size_t a = 0; a < image.size(); ++a)
    for (size_t b = 0; b < image.size(); ++b) {
      uint32_t acc = 0;
      for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
          acc = K.add(acc, K.mul(image[a](i, j), image[b](j, i)));
      gram(a, b) = acc;
    }
  return gram.rank();
}

struct TruncationReport {
  size_t monomial_count = 0;
  size_t rank = 0;
  bool injective = false;
};

/// Stack the evaluation maps u -> rho_M(u) over a sample of baby Verma
/// modules and test injectivity on the PBW monomials of degree <= D.  With
/// enough regular characters in the sample the joint annihilator of the
/// modules meets the degree-D filtration trivially.
inline TruncationReport annihilator_truncation_check(
    const LieSuperalgebra& g, size_t D,
    const std::vector<std::pair<PCharacter, Weight>>& sample) {
  if (D > 2 * size_t(g.F->p()))
    throw Error(ErrorCode::TooLarge,
                "truncation degree must stay within twice the characteristic");
  std::vector<BabyVerma> mods;
  size_t width = 0;
  for (const auto& [chi, lam] : sample) {
    mods.push_back(build_verma(g, chi, lam));
    width += mods.back().dim * mods.back().dim;
  }
  std::vector<PbwMonomial> monos;
  PbwMonomial m;
  m.even_exps.assign(g.s, 0);
  const auto rec = [&](auto&& self, size_t slot, size_t budget) -> void {
    if (slot == g.s) {
      for (uint32_t mask = 0; mask < (1u << g.t); ++mask)
        if (size_t(std::popcount(mask)) <= budget) {
          m.odd_mask = mask;
          monos.push_back(m);
        }
      m.odd_mask = 0;
      return;
    }
    for (uint16_t e = 0; e <= budget; ++e) {
      m.even_exps[slot] = e;
      self(self, slot + 1, budget - e);
    }
    m.even_exps[slot] = 0;
  };
  rec(rec, 0, D);

  TruncationReport rep;
  rep.monomial_count = monos.size();
  RowSpace span(g.F, width);
  for (const PbwMonomial& mono : monos) {
    std::vector<uint32_t> row;
    row.reserve(width);
    for (const BabyVerma& M : mods) {
      std::vector<uint32_t> flat = detail::flatten(monomial_action(M, mono));
      row.insert(row.end(), flat.begin(), flat.end());
    }
    if (span.insert(std::move(row))) ++rep.rank;
  }
  rep.injective = (rep.rank == rep.monomial_count);
  return rep;
}

}  // namespace superalg
