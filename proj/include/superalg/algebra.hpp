#pragma once

// Basic classical Lie superalgebras over F_{p^e}, realized by matrices in the
// defining representation.  Structure constants, the restricted p-map, the
// invariant form, and root data are extracted from the matrix model once at
// construction and then verified exhaustively; everything downstream works
// from the tables.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "superalg/field.hpp"
#include "superalg/matrix.hpp"

namespace superalg {

/// Sparse coordinate vector over the algebra basis: sorted indices, no zeros.
using SparseVec = std::vector<std::pair<size_t, uint32_t>>;

inline SparseVec sv_normalize(const FieldCtx& F,
                              std::vector<std::pair<size_t, uint32_t>> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (const auto& [i, c] : terms) {
    if (!out.empty() && out.back().first == i)
      out.back().second = F.add(out.back().second, c);
    else
      out.push_back({i, c});
    if (out.back().second == 0) out.pop_back();
  }
  return out;
}

inline SparseVec sv_add(const FieldCtx& F, const SparseVec& a,
                        const SparseVec& b) {
  std::vector<std::pair<size_t, uint32_t>> t(a.begin(), a.end());
  t.insert(t.end(), b.begin(), b.end());
  return sv_normalize(F, std::move(t));
}

inline SparseVec sv_scale(const FieldCtx& F, const SparseVec& a, uint32_t c) {
  if (c == 0) return {};
  SparseVec out;
  out.reserve(a.size());
  for (const auto& [i, v] : a) out.push_back({i, F.mul(v, c)});
  return out;
}

inline uint32_t sv_get(const SparseVec& a, size_t i) {
  for (const auto& [j, c] : a)
    if (j == i) return c;
  return 0;
}

struct BasisVector {
  std::string label;
  int parity;  // 0 even, 1 odd
  Matrix rep;  // defining-representation matrix
};

struct Root {
  std::vector<uint32_t> coords;  // values on the toral basis (field)
  std::vector<int64_t> eps;      // integer coordinates in the eps-lattice;
                                 // field coords can collide mod p, these not
  int parity;
  size_t e_index, f_index;  // basis indices of the +/- root vectors
};

struct Weight {
  std::vector<uint32_t> values;  // lambda(H_1..H_r)
  bool operator==(const Weight& o) const { return values == o.values; }
  bool operator!=(const Weight& o) const { return !(*this == o); }
};

/// Linear form on the even part, stored on the even basis (length s).
/// Semisimple characters are supported on the toral coordinates only.
struct PCharacter {
  std::vector<uint32_t> values;
};

/// Data of one simple reflection of the even root system: the permutation it
/// induces on defining-rep diagonal positions and the signed permutation on
/// the eps-lattice.
struct SimpleReflection {
  size_t root_index;                             // an even positive root
  std::vector<size_t> diag_perm;                 // size N
  std::vector<std::pair<size_t, int>> eps_map;   // eps_i -> sign * eps_target
};

class LieSuperalgebra {
 public:
  FieldPtr F;
  std::string name;
  size_t N = 0;          // defining representation size
  size_t even_rows = 0;  // rows 0..even_rows-1 are the even block
  std::vector<BasisVector> basis;  // evens first (cartan leading), then odds
  size_t s = 0, t = 0;             // even / odd dimensions
  std::vector<std::vector<SparseVec>> table;  // bracket of basis pairs
  std::vector<SparseVec> p_map;               // x_i^{[p]} for even i
  Matrix form;                                // Gram matrix of the basis
  std::vector<size_t> cartan;       // toral basis indices H_1..H_r
  std::vector<Root> roots;
  std::vector<size_t> positive;     // indices into roots
  Weight rho;                       // on the toral basis
  std::vector<int64_t> rho2_eps;    // 2*rho in eps coordinates (integral)
  size_t eps_dim = 0;
  std::vector<size_t> eps_rows;     // defining-rep diagonal position of eps_k
  std::vector<SimpleReflection> simple_reflections;

  size_t dim() const { return basis.size(); }
  size_t rank() const { return cartan.size(); }
  int parity(size_t i) const { return basis[i].parity; }

  int parity_of(const SparseVec& a) const {
    int par = -1;
    for (const auto& [i, c] : a) {
      (void)c;
      if (par == -1)
        par = parity(i);
      else if (par != parity(i))
        return -2;  // inhomogeneous
    }
    return par;  // -1 for zero
  }

  const SparseVec& bracket(size_t i, size_t j) const { return table[i][j]; }

  SparseVec bracket(const SparseVec& a, const SparseVec& b) const {
    std::vector<std::pair<size_t, uint32_t>> acc;
    for (const auto& [i, ca] : a)
      for (const auto& [j, cb] : b) {
        uint32_t c = F->mul(ca, cb);
        for (const auto& [k, v] : table[i][j]) acc.push_back({k, F->mul(c, v)});
      }
    return sv_normalize(*F, std::move(acc));
  }

  /// Matrix of ad b_i on the basis (column j = [b_i, b_j]).
  Matrix ad_matrix(size_t i) const {
    Matrix m(F, dim(), dim());
    for (size_t j = 0; j < dim(); ++j)
      for (const auto& [k, c] : table[i][j]) m(k, j) = c;
    return m;
  }

  Matrix ad_matrix(const SparseVec& a) const {
    Matrix m(F, dim(), dim());
    for (const auto& [i, c] : a) {
      for (size_t j = 0; j < dim(); ++j)
        for (const auto& [k, v] : table[i][j])
          m(k, j) = F->add(m(k, j), F->mul(c, v));
    }
    return m;
  }

  Matrix rep_of(const SparseVec& a) const {
    Matrix m(F, N, N);
    for (const auto& [i, c] : a) m = m + basis[i].rep.scaled(c);
    return m;
  }

  /// Coordinates of a defining-rep matrix in the basis; throws if it is not
  /// in the span (guards against closure bugs).
  SparseVec expand(const Matrix& mat) const {
    std::vector<uint32_t> v(N * N);
    for (size_t i = 0; i < N; ++i)
      for (size_t j = 0; j < N; ++j) v[i * N + j] = mat(i, j);
    std::vector<uint32_t> x(dim(), 0);
    for (size_t k = 0; k < dim(); ++k) {
      uint32_t acc = 0;
      const uint32_t* lrow = expander_.row(k);
      for (size_t c = 0; c < N * N; ++c)
        if (lrow[c] && v[c]) acc = F->add(acc, F->mul(lrow[c], v[c]));
      x[k] = acc;
    }
    SparseVec out;
    Matrix back(F, N, N);
    for (size_t k = 0; k < dim(); ++k)
      if (x[k]) {
        out.push_back({k, x[k]});
        back = back + basis[k].rep.scaled(x[k]);
      }
    if (!(back == mat))
      throw std::logic_error(name + ": matrix not in the basis span");
    return out;
  }

  /// Restricted p-power of an even element via the matrix model.
  SparseVec p_power(const SparseVec& a) const {
    for (const auto& [i, c] : a) {
      (void)c;
      if (parity(i) != 0)
        throw Error(ErrorCode::OddInput,
                    "p-power is defined on the even part only");
    }
    return expand(rep_of(a).pow(F->p()));
  }

  /// Value of a linear form given on the toral basis at h in the Cartan span.
  uint32_t eval_toral_form(const std::vector<uint32_t>& values,
                           const SparseVec& h) const {
    uint32_t acc = 0;
    for (const auto& [i, c] : h) {
      size_t pos = cartan_pos_.at(i);
      acc = F->add(acc, F->mul(c, values[pos]));
    }
    return acc;
  }

  uint32_t chi_value(const PCharacter& chi, size_t even_index) const {
    return chi.values[even_index];
  }

  uint32_t chi_eval(const PCharacter& chi, const SparseVec& a) const {
    uint32_t acc = 0;
    for (const auto& [i, c] : a) acc = F->add(acc, F->mul(c, chi.values[i]));
    return acc;
  }

  /// Field-valued weight of an integral eps-lattice vector.
  Weight weight_from_eps(const std::vector<int64_t>& v) const {
    Weight w;
    w.values.assign(cartan.size(), 0);
    for (size_t i = 0; i < cartan.size(); ++i) {
      uint32_t acc = 0;
      for (size_t k = 0; k < eps_dim; ++k) {
        uint32_t ev = basis[cartan[i]].rep(eps_rows[k], eps_rows[k]);
        acc = F->add(acc, F->mul(F->from_int(v[k]), ev));
      }
      w.values[i] = acc;
    }
    return w;
  }

  PCharacter chi_zero() const { return PCharacter{std::vector<uint32_t>(s, 0)}; }

  PCharacter chi_from_toral(const std::vector<uint32_t>& toral_values) const {
    PCharacter chi{std::vector<uint32_t>(s, 0)};
    for (size_t k = 0; k < cartan.size(); ++k)
      chi.values[cartan[k]] = toral_values[k];
    return chi;
  }

  std::vector<uint32_t> chi_toral_values(const PCharacter& chi) const {
    std::vector<uint32_t> v(cartan.size());
    for (size_t k = 0; k < cartan.size(); ++k) v[k] = chi.values[cartan[k]];
    return v;
  }

  void require_on_cartan(const PCharacter& chi) const {
    for (size_t i = 0; i < s; ++i) {
      if (chi.values[i] == 0) continue;
      if (!std::count(cartan.begin(), cartan.end(), i))
        throw Error(ErrorCode::NotOnCartan,
                    "character does not vanish on root vector " +
                        basis[i].label);
    }
  }

  /// The unique h in the Cartan with (h, h') = alpha(h') for all h'.
  SparseVec h_alpha(const std::vector<uint32_t>& alpha_values) const {
    size_t r = cartan.size();
    Matrix gram(F, r, r);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < r; ++j) gram(i, j) = form(cartan[i], cartan[j]);
    auto c = gram.solve(alpha_values);
    if (c.empty())
      throw std::logic_error(name + ": form degenerate on the Cartan");
    SparseVec out;
    for (size_t i = 0; i < r; ++i)
      if (c[i]) out.push_back({cartan[i], c[i]});
    return out;
  }

  SparseVec h_alpha(const Root& alpha) const { return h_alpha(alpha.coords); }

  bool is_regular_semisimple(const PCharacter& chi) const {
    require_on_cartan(chi);
    for (size_t pi : positive) {
      SparseVec h = h_alpha(roots[pi]);
      if (chi_eval(chi, h) == 0) return false;
    }
    return true;
  }

  /// All lambda with lambda(H_i)^p - lambda(H_i) = chi(H_i)^p, ascending
  /// lexicographically in packed coordinates.  The toral basis satisfies
  /// H^{[p]} = H and the Cartan is abelian, so the per-coordinate equations
  /// are exactly the compatibility condition.
  std::vector<Weight> enumerate_lambda(const PCharacter& chi) const {
    require_on_cartan(chi);
    size_t r = cartan.size();
    std::vector<std::vector<uint32_t>> coord_roots(r);
    for (size_t k = 0; k < r; ++k) {
      uint32_t rhs = F->pow(chi.values[cartan[k]], int64_t(F->p()));
      coord_roots[k] = artin_schreier_roots(*F, rhs);
      if (coord_roots[k].empty())
        throw Error(ErrorCode::UnsolvableOverField,
                    "t^p - t = chi(H_" + std::to_string(k + 1) +
                        ")^p has no root; rebuild over F_{p^p}");
    }
    std::vector<Weight> out;
    std::vector<size_t> idx(r, 0);
    while (true) {
      Weight w;
      w.values.resize(r);
      for (size_t k = 0; k < r; ++k) w.values[k] = coord_roots[k][idx[k]];
      out.push_back(std::move(w));
      size_t k = r;
      while (k > 0) {
        --k;
        if (++idx[k] < coord_roots[k].size()) break;
        idx[k] = 0;
        if (k == 0) return out;
      }
    }
  }

  // -- construction helpers (used by the family builders) --------------

  void finalize_from_reps(uint32_t form_scale);
  void compute_root_coords();
  void compute_rho();
  void verify_structure() const;

  const Matrix& expander() const { return expander_; }

 private:
  Matrix expander_;  // dim x N^2 left inverse of the basis-rep column map
  std::vector<size_t> cartan_pos_;  // basis index -> position in cartan

  friend LieSuperalgebra build_gl(size_t, size_t, FieldPtr);
  friend LieSuperalgebra build_sl(size_t, size_t, FieldPtr);
  friend LieSuperalgebra build_osp1(size_t, FieldPtr);
};

inline void LieSuperalgebra::finalize_from_reps(uint32_t form_scale) {
  const FieldCtx& K = *F;
  s = t = 0;
  for (const auto& b : basis) (b.parity ? t : s)++;
  for (size_t i = 0; i < s; ++i)
    if (basis[i].parity != 0)
      throw std::logic_error(name + ": basis not ordered even-then-odd");

  // left inverse for coordinate expansion: solve rep-matrix^T columns
  Matrix cols(F, N * N, dim());
  for (size_t k = 0; k < dim(); ++k)
    for (size_t i = 0; i < N; ++i)
      for (size_t j = 0; j < N; ++j) cols(i * N + j, k) = basis[k].rep(i, j);
  Matrix colsT = cols.transposed();  // dim x N^2
  expander_ = Matrix(F, dim(), N * N);
  for (size_t k = 0; k < dim(); ++k) {
    std::vector<uint32_t> ek(dim(), 0);
    ek[k] = 1;
    auto row = colsT.solve(ek);  // row * cols = e_k
    if (row.empty())
      throw std::logic_error(name + ": basis representations are dependent");
    for (size_t c = 0; c < N * N; ++c) expander_(k, c) = row[c];
  }

  cartan_pos_.assign(dim(), size_t(-1));
  for (size_t k = 0; k < cartan.size(); ++k) cartan_pos_[cartan[k]] = k;

  // super-commutators of the matrix model, expanded in the basis
  auto str = [&](const Matrix& m) {
    uint32_t acc = 0;
    for (size_t i = 0; i < N; ++i) {
      uint32_t d = m(i, i);
      acc = i < even_rows ? K.add(acc, d) : K.sub(acc, d);
    }
    return acc;
  };
  table.assign(dim(), std::vector<SparseVec>(dim()));
  form = Matrix(F, dim(), dim());
  for (size_t i = 0; i < dim(); ++i)
    for (size_t j = 0; j < dim(); ++j) {
      Matrix ab = basis[i].rep * basis[j].rep;
      Matrix ba = basis[j].rep * basis[i].rep;
      bool both_odd = parity(i) && parity(j);
      table[i][j] = expand(both_odd ? ab + ba : ab - ba);
      form(i, j) = K.mul(form_scale, str(ab));
    }

  p_map.assign(s, SparseVec{});
  for (size_t i = 0; i < s; ++i)
    p_map[i] = expand(basis[i].rep.pow(K.p()));

  compute_root_coords();
  compute_rho();
  verify_structure();
}

inline void LieSuperalgebra::compute_root_coords() {
  for (auto& root : roots) {
    root.coords.assign(cartan.size(), 0);
    for (size_t k = 0; k < cartan.size(); ++k) {
      const SparseVec& br = table[cartan[k]][root.e_index];
      // root spaces are one-dimensional: [H, e_a] must be a multiple of e_a
      for (const auto& [idx, c] : br) {
        (void)c;
        if (idx != root.e_index)
          throw std::logic_error(name + ": root vector " +
                                 basis[root.e_index].label +
                                 " is not an ad-H eigenvector");
      }
      root.coords[k] = sv_get(br, root.e_index);
    }
  }
}

inline void LieSuperalgebra::compute_rho() {
  const FieldCtx& K = *F;
  rho.values.assign(cartan.size(), 0);
  rho2_eps.assign(eps_dim, 0);
  uint32_t half = K.half();
  for (size_t pi : positive) {
    const Root& a = roots[pi];
    for (size_t k = 0; k < cartan.size(); ++k) {
      uint32_t term = K.mul(half, a.coords[k]);
      rho.values[k] = a.parity ? K.sub(rho.values[k], term)
                               : K.add(rho.values[k], term);
    }
    for (size_t k = 0; k < eps_dim; ++k)
      rho2_eps[k] += (a.parity ? -1 : 1) * a.eps[k];
  }
}

inline void LieSuperalgebra::verify_structure() const {
  const FieldCtx& K = *F;
  size_t n = dim();

  // bracket grading and super-anticommutativity
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      int pij = (parity(i) + parity(j)) & 1;
      for (const auto& [k, c] : table[i][j]) {
        (void)c;
        if (parity(k) != pij)
          throw std::logic_error(name + ": bracket violates the grading");
      }
      bool both_odd = parity(i) && parity(j);
      SparseVec rhs = sv_scale(K, table[j][i], both_odd ? 1 : K.neg(1));
      if (table[i][j] != rhs)
        throw std::logic_error(name + ": super-anticommutativity fails");
    }

  // super Jacobi in the form [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|}[b,[a,c]]
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c) {
        SparseVec lhs = bracket(SparseVec{{a, 1}}, table[b][c]);
        SparseVec r1 = bracket(table[a][b], SparseVec{{c, 1}});
        SparseVec r2 = bracket(SparseVec{{b, 1}}, table[a][c]);
        bool both_odd = parity(a) && parity(b);
        SparseVec rhs = sv_add(K, r1, sv_scale(K, r2, both_odd ? K.neg(1) : 1));
        if (lhs != rhs)
          throw std::logic_error(name + ": super Jacobi fails on (" +
                                 basis[a].label + "," + basis[b].label + "," +
                                 basis[c].label + ")");
      }

  // form: even, supersymmetric, invariant, non-degenerate on the Cartan
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (parity(i) != parity(j) && form(i, j) != 0)
        throw std::logic_error(name + ": form is not even");
      uint32_t sym = parity(i) && parity(j) ? K.neg(form(j, i)) : form(j, i);
      if (form(i, j) != sym)
        throw std::logic_error(name + ": form is not supersymmetric");
    }
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c) {
        uint32_t lhs = 0, rhs = 0;
        for (const auto& [k, v] : table[a][b])
          lhs = K.add(lhs, K.mul(v, form(k, c)));
        for (const auto& [k, v] : table[b][c])
          rhs = K.add(rhs, K.mul(v, form(a, k)));
        if (lhs != rhs)
          throw std::logic_error(name + ": form is not invariant");
      }
  {
    Matrix gram(F, cartan.size(), cartan.size());
    for (size_t i = 0; i < cartan.size(); ++i)
      for (size_t j = 0; j < cartan.size(); ++j)
        gram(i, j) = form(cartan[i], cartan[j]);
    if (gram.rank() != cartan.size())
      throw std::logic_error(name + ": form degenerate on the Cartan");
  }

  // toral basis: H^{[p]} = H, and the Cartan is abelian
  for (size_t i : cartan) {
    if (parity(i) != 0) throw std::logic_error(name + ": odd Cartan element");
    if (p_map[i] != SparseVec{{i, 1}})
      throw std::logic_error(name + ": toral basis element not p-fixed");
    for (size_t j : cartan)
      if (!table[i][j].empty())
        throw std::logic_error(name + ": Cartan not abelian");
  }

  // restrictedness: ad(x^{[p]}) = (ad x)^p for every even basis element
  for (size_t i = 0; i < s; ++i) {
    Matrix lhs = ad_matrix(p_map[i]);
    Matrix rhs = ad_matrix(i).pow(K.p());
    if (!(lhs == rhs))
      throw std::logic_error(name + ": p-map is not restricted at " +
                             basis[i].label);
  }

  // root structure: [g_a, g_b] != 0 iff a+b is a root or zero, decided in
  // the integral eps-lattice (field coordinates can collide mod p)
  std::vector<std::vector<int64_t>> all_eps;
  std::vector<size_t> vec_index;
  std::vector<std::vector<int64_t>> vec_eps;
  for (const Root& a : roots) all_eps.push_back(a.eps);
  for (const Root& a : roots) {
    vec_index.push_back(a.e_index);
    vec_eps.push_back(a.eps);
    vec_index.push_back(a.f_index);
    std::vector<int64_t> m(a.eps.size());
    for (size_t k = 0; k < m.size(); ++k) m[k] = -a.eps[k];
    vec_eps.push_back(std::move(m));
  }
  for (size_t u = 0; u < vec_index.size(); ++u)
    for (size_t v = 0; v < vec_index.size(); ++v) {
      std::vector<int64_t> sum(eps_dim);
      bool zero = true;
      for (size_t k = 0; k < eps_dim; ++k) {
        sum[k] = vec_eps[u][k] + vec_eps[v][k];
        if (sum[k]) zero = false;
      }
      bool sum_is_root = zero;
      if (!zero)
        for (const auto& e : all_eps) {
          std::vector<int64_t> me(e.size());
          for (size_t k = 0; k < e.size(); ++k) me[k] = -e[k];
          if (e == sum || me == sum) {
            sum_is_root = true;
            break;
          }
        }
      bool nonzero = !table[vec_index[u]][vec_index[v]].empty();
      if (nonzero != sum_is_root)
        throw std::logic_error(name + ": root-sum bracket law fails");
    }
}

}  // namespace superalg
