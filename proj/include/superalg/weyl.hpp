#pragma once

// Weyl group of the even root system: concrete signed permutations of the
// eps-lattice, their action on the Cartan and on weights, and automorphism
// representatives n_w = exp(ad e) exp(-ad f) exp(ad e) on the algebra.

#include <map>
#include <vector>

#include "superalg/algebra.hpp"

namespace superalg {

/// Signed permutation: entry k is (image index, sign) of eps_k.
using EpsMap = std::vector<std::pair<size_t, int>>;

struct WeylElement {
  std::vector<size_t> word;  // generator indices, applied right-to-left
  EpsMap eps_map;
  Matrix h_mat;      // w(H_i) = sum_j h_mat(j,i) H_j on the toral basis
  Matrix hstar_mat;  // (w.lambda)_i = sum_j hstar_mat(i,j) lambda_j

  bool is_identity() const {
    for (size_t k = 0; k < eps_map.size(); ++k)
      if (eps_map[k] != std::pair<size_t, int>{k, 1}) return false;
    return true;
  }
};

inline EpsMap compose_eps(const EpsMap& a, const EpsMap& b) {
  EpsMap out(b.size());
  for (size_t k = 0; k < b.size(); ++k) {
    auto [mid, sb] = b[k];
    auto [img, sa] = a[mid];
    out[k] = {img, sa * sb};
  }
  return out;
}

inline std::vector<int64_t> apply_eps(const EpsMap& m,
                                      const std::vector<int64_t>& v) {
  std::vector<int64_t> out(v.size(), 0);
  for (size_t k = 0; k < v.size(); ++k) {
    auto [img, sgn] = m[k];
    out[img] += sgn * v[k];
  }
  return out;
}

inline WeylElement weyl_identity(const LieSuperalgebra& g) {
  WeylElement w;
  for (size_t k = 0; k < g.eps_dim; ++k) w.eps_map.push_back({k, 1});
  w.h_mat = Matrix::identity(g.F, g.rank());
  w.hstar_mat = Matrix::identity(g.F, g.rank());
  return w;
}

/// a then b is "a after b": (ab)(v) = a(b(v)).
inline WeylElement weyl_compose(const WeylElement& a, const WeylElement& b) {
  WeylElement w;
  w.word = a.word;
  w.word.insert(w.word.end(), b.word.begin(), b.word.end());
  w.eps_map = compose_eps(a.eps_map, b.eps_map);
  w.h_mat = a.h_mat * b.h_mat;
  w.hstar_mat = a.hstar_mat * b.hstar_mat;
  return w;
}

inline std::vector<WeylElement> weyl_generators(const LieSuperalgebra& g) {
  std::vector<WeylElement> gens;
  for (size_t gi = 0; gi < g.simple_reflections.size(); ++gi) {
    const SimpleReflection& sr = g.simple_reflections[gi];
    WeylElement w;
    w.word = {gi};
    w.eps_map = sr.eps_map;
    // action on the Cartan: conjugation by the diagonal-position permutation
    w.h_mat = Matrix(g.F, g.rank(), g.rank());
    for (size_t i = 0; i < g.rank(); ++i) {
      const Matrix& rep = g.basis[g.cartan[i]].rep;
      Matrix moved(g.F, g.N, g.N);
      for (size_t k = 0; k < g.N; ++k)
        moved(sr.diag_perm[k], sr.diag_perm[k]) = rep(k, k);
      SparseVec coords = g.expand(moved);
      for (const auto& [idx, c] : coords) {
        bool on_cartan = false;
        for (size_t j = 0; j < g.rank(); ++j)
          if (g.cartan[j] == idx) {
            w.h_mat(j, i) = c;
            on_cartan = true;
          }
        if (!on_cartan)
          throw std::logic_error(g.name + ": reflection leaves the Cartan");
      }
    }
    w.hstar_mat = w.h_mat.inverse().transposed();
    gens.push_back(std::move(w));
  }
  return gens;
}

/// Full group by breadth-first closure; identity first, then by word length
/// with ties broken by generator order.  Signed eps-permutations are a
/// faithful encoding for all supported families.
inline std::vector<WeylElement> weyl_group(const LieSuperalgebra& g) {
  auto gens = weyl_generators(g);
  std::vector<WeylElement> out{weyl_identity(g)};
  std::map<std::vector<int64_t>, bool> seen;
  auto key = [](const EpsMap& m) {
    std::vector<int64_t> k;
    for (auto [img, sgn] : m) k.push_back(int64_t(img) * 2 + (sgn < 0));
    return k;
  };
  seen[key(out[0].eps_map)] = true;
  for (size_t head = 0; head < out.size(); ++head) {
    for (const auto& s : gens) {
      WeylElement next = weyl_compose(out[head], s);
      auto k = key(next.eps_map);
      if (!seen.count(k)) {
        seen[k] = true;
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

inline Weight act_on_weight(const LieSuperalgebra& g, const WeylElement& w,
                            const Weight& lambda) {
  (void)g;
  return Weight{w.hstar_mat.apply(lambda.values)};
}

/// Semisimple characters transform like weights through their toral values.
inline PCharacter act_on_pchar(const LieSuperalgebra& g, const WeylElement& w,
                               const PCharacter& chi) {
  g.require_on_cartan(chi);
  return g.chi_from_toral(w.hstar_mat.apply(g.chi_toral_values(chi)));
}

inline bool is_strongly_regular(const LieSuperalgebra& g,
                                const PCharacter& chi) {
  auto toral = g.chi_toral_values(chi);
  for (const auto& w : weyl_group(g)) {
    if (w.is_identity()) continue;
    if (w.hstar_mat.apply(toral) == toral) return false;
  }
  return true;
}

/// exp(ad x) for nilpotent ad x; requires (ad x)^p = 0.
inline Matrix exp_ad(const LieSuperalgebra& g, const SparseVec& x) {
  const FieldCtx& K = *g.F;
  Matrix adx = g.ad_matrix(x);
  Matrix acc = Matrix::identity(g.F, g.dim());
  Matrix power = Matrix::identity(g.F, g.dim());
  uint32_t factorial_inv = 1;
  for (uint64_t k = 1;; ++k) {
    power = power * adx;
    if (power.is_zero()) break;
    if (k >= K.p())
      throw Error(ErrorCode::NilpotencyTooDeep,
                  "(ad x)^p does not vanish; exponential truncation unsound");
    factorial_inv = K.mul(factorial_inv, K.inv(uint32_t(k % K.p())));
    acc = acc + power.scaled(factorial_inv);
  }
  return acc;
}

/// n_w for one simple reflection, as a matrix acting on basis coordinates.
/// The (e, f) pair is sl2-normalized: alpha([e,f]) = 2, checked here.
inline Matrix representative_automorphism(const LieSuperalgebra& g,
                                          size_t gen_index) {
  const SimpleReflection& sr = g.simple_reflections[gen_index];
  const Root& alpha = g.roots[sr.root_index];
  SparseVec e{{alpha.e_index, 1}}, f{{alpha.f_index, 1}};
  SparseVec coroot = g.bracket(e, f);
  if (g.eval_toral_form(alpha.coords, coroot) != g.F->from_int(2))
    throw std::logic_error(g.name + ": reflection pair not sl2-normalized");
  Matrix expe = exp_ad(g, e);
  Matrix expf = exp_ad(g, sv_scale(*g.F, f, g.F->neg(1)));
  return expe * expf * expe;
}

/// Representative of an arbitrary word, composing simple representatives.
inline Matrix representative_of(const LieSuperalgebra& g,
                                const WeylElement& w) {
  Matrix acc = Matrix::identity(g.F, g.dim());
  for (size_t gi : w.word) acc = acc * representative_automorphism(g, gi);
  return acc;
}

/// Image of an algebra element under an automorphism matrix.
inline SparseVec apply_aut(const LieSuperalgebra& g, const Matrix& aut,
                           const SparseVec& a) {
  std::vector<std::pair<size_t, uint32_t>> acc;
  for (const auto& [j, c] : a)
    for (size_t i = 0; i < g.dim(); ++i)
      if (aut(i, j)) acc.push_back({i, g.F->mul(c, aut(i, j))});
  return sv_normalize(*g.F, std::move(acc));
}

}  // namespace superalg
