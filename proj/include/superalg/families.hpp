#pragma once

// Constructors for the supported families: gl(m|n), sl(m|n), osp(1|2n).
// Each builds the defining matrix model, declares the root datum with
// integral eps-lattice coordinates, and hands off to the shared
// finalize/verify pipeline in algebra.hpp.

#include <string>

#include "superalg/algebra.hpp"

namespace superalg {

namespace detail {

inline Matrix unit(const FieldPtr& F, size_t N, size_t i, size_t j,
                   uint32_t c = 1) {
  Matrix m(F, N, N);
  m(i, j) = c;
  return m;
}

inline std::vector<int64_t> eps_diff(size_t dim, size_t i, size_t j) {
  std::vector<int64_t> v(dim, 0);
  v[i] += 1;
  v[j] -= 1;
  return v;
}

}  // namespace detail

/// gl(m|n): all (m+n)x(m+n) matrices, parity by block.
inline LieSuperalgebra build_gl(size_t m, size_t n, FieldPtr F) {
  if (F->p() <= 2)
    throw Error(ErrorCode::BadCharacteristic, "requires p > 2");
  if (m < 1 || n < 1)
    throw Error(ErrorCode::Unsupported, "gl(m|n) requires m, n >= 1");
  if (m + n > 5)
    throw Error(ErrorCode::TooLarge, "desk-scale bound m + n <= 5");
  LieSuperalgebra g;
  g.F = F;
  g.name = "gl(" + std::to_string(m) + "|" + std::to_string(n) + ")";
  size_t N = m + n;
  g.N = N;
  g.even_rows = m;
  g.eps_dim = N;

  for (size_t k = 0; k < N; ++k) {
    g.basis.push_back({"H" + std::to_string(k + 1), 0,
                       detail::unit(F, N, k, k)});
    g.cartan.push_back(k);
  }
  auto block = [&](size_t i) { return i < m ? 0 : 1; };
  auto push_pair = [&](size_t i, size_t j, int parity) {
    std::string si = std::to_string(i + 1), sj = std::to_string(j + 1);
    g.basis.push_back({"E" + si + sj, parity, detail::unit(F, N, i, j)});
    size_t e_index = g.basis.size() - 1;
    g.basis.push_back({"E" + sj + si, parity, detail::unit(F, N, j, i)});
    Root r;
    r.eps = detail::eps_diff(N, i, j);
    r.parity = parity;
    r.e_index = e_index;
    r.f_index = e_index + 1;
    g.roots.push_back(std::move(r));
  };
  // even root vectors first to keep the basis ordered even-then-odd
  for (size_t i = 0; i < N; ++i)
    for (size_t j = i + 1; j < N; ++j)
      if (block(i) == block(j)) push_pair(i, j, 0);
  for (size_t i = 0; i < N; ++i)
    for (size_t j = i + 1; j < N; ++j)
      if (block(i) != block(j)) push_pair(i, j, 1);
  for (size_t k = 0; k < g.roots.size(); ++k) g.positive.push_back(k);

  auto find_root = [&](size_t i, size_t j) {
    auto eps = detail::eps_diff(N, i, j);
    for (size_t k = 0; k < g.roots.size(); ++k)
      if (g.roots[k].eps == eps) return k;
    throw std::logic_error("root lookup failed");
  };
  auto add_reflection = [&](size_t i) {
    SimpleReflection sr;
    sr.root_index = find_root(i, i + 1);
    sr.diag_perm.resize(N);
    for (size_t k = 0; k < N; ++k) sr.diag_perm[k] = k;
    std::swap(sr.diag_perm[i], sr.diag_perm[i + 1]);
    for (size_t k = 0; k < N; ++k) sr.eps_map.push_back({k, 1});
    sr.eps_map[i] = {i + 1, 1};
    sr.eps_map[i + 1] = {i, 1};
    g.simple_reflections.push_back(std::move(sr));
  };
  for (size_t i = 0; i + 1 < m; ++i) add_reflection(i);
  for (size_t j = m; j + 1 < N; ++j) add_reflection(j);

  for (size_t k = 0; k < N; ++k) g.eps_rows.push_back(k);
  g.finalize_from_reps(1);
  return g;
}

/// sl(m|n): supertrace-zero subalgebra of gl(m|n); needs p coprime to m - n.
inline LieSuperalgebra build_sl(size_t m, size_t n, FieldPtr F) {
  if (F->p() <= 2)
    throw Error(ErrorCode::BadCharacteristic, "requires p > 2");
  if (m < 1 || n < 1 || m == n)
    throw Error(ErrorCode::Unsupported, "sl(m|n) requires m, n >= 1, m != n");
  if (m + n > 5)
    throw Error(ErrorCode::TooLarge, "desk-scale bound m + n <= 5");
  int64_t diff = int64_t(m) - int64_t(n);
  if (diff < 0) diff = -diff;
  if (uint64_t(diff) % F->p() == 0)
    throw Error(ErrorCode::BadCharacteristic,
                "sl(m|n) needs p coprime to m - n");
  LieSuperalgebra g;
  g.F = F;
  g.name = "sl(" + std::to_string(m) + "|" + std::to_string(n) + ")";
  size_t N = m + n;
  g.N = N;
  g.even_rows = m;
  g.eps_dim = N;

  // supertrace-free toral basis: D_i = E_ii + E_NN (even i), E_jj - E_NN (odd j)
  for (size_t k = 0; k + 1 < N; ++k) {
    Matrix rep = detail::unit(F, N, k, k);
    if (k < m)
      rep(N - 1, N - 1) = 1;
    else
      rep(N - 1, N - 1) = F->neg(1);
    g.basis.push_back({"D" + std::to_string(k + 1), 0, rep});
    g.cartan.push_back(k);
  }
  auto block = [&](size_t i) { return i < m ? 0 : 1; };
  auto push_pair = [&](size_t i, size_t j, int parity) {
    std::string si = std::to_string(i + 1), sj = std::to_string(j + 1);
    g.basis.push_back({"E" + si + sj, parity, detail::unit(F, N, i, j)});
    size_t e_index = g.basis.size() - 1;
    g.basis.push_back({"E" + sj + si, parity, detail::unit(F, N, j, i)});
    Root r;
    r.eps = detail::eps_diff(N, i, j);
    r.parity = parity;
    r.e_index = e_index;
    r.f_index = e_index + 1;
    g.roots.push_back(std::move(r));
  };
  for (size_t i = 0; i < N; ++i)
    for (size_t j = i + 1; j < N; ++j)
      if (block(i) == block(j)) push_pair(i, j, 0);
  for (size_t i = 0; i < N; ++i)
    for (size_t j = i + 1; j < N; ++j)
      if (block(i) != block(j)) push_pair(i, j, 1);
  for (size_t k = 0; k < g.roots.size(); ++k) g.positive.push_back(k);

  auto find_root = [&](size_t i, size_t j) {
    auto eps = detail::eps_diff(N, i, j);
    for (size_t k = 0; k < g.roots.size(); ++k)
      if (g.roots[k].eps == eps) return k;
    throw std::logic_error("root lookup failed");
  };
  auto add_reflection = [&](size_t i) {
    SimpleReflection sr;
    sr.root_index = find_root(i, i + 1);
    sr.diag_perm.resize(N);
    for (size_t k = 0; k < N; ++k) sr.diag_perm[k] = k;
    std::swap(sr.diag_perm[i], sr.diag_perm[i + 1]);
    for (size_t k = 0; k < N; ++k) sr.eps_map.push_back({k, 1});
    sr.eps_map[i] = {i + 1, 1};
    sr.eps_map[i + 1] = {i, 1};
    g.simple_reflections.push_back(std::move(sr));
  };
  for (size_t i = 0; i + 1 < m; ++i) add_reflection(i);
  for (size_t j = m; j + 1 < N; ++j) add_reflection(j);

  for (size_t k = 0; k < N; ++k) g.eps_rows.push_back(k);
  g.finalize_from_reps(1);
  return g;
}

/// osp(1|n2) for n2 in {2,4}: even part sp(n2), odd part the defining
/// symplectic module.  Matrix model on k^{1|n2} with basis
/// (v0 | u_1..u_n, w_1..w_n), n = n2/2:
///   H_i = E(u_i,u_i) - E(w_i,w_i)
///   e_{2eps_i} = -E(u_i,w_i),            f_{2eps_i} = -E(w_i,u_i)
///   e_{eps_i-eps_j} = E(u_i,u_j) - E(w_j,w_i)   (i < j), transposed for f
///   e_{eps_i+eps_j} = E(u_i,w_j) + E(u_j,w_i)   (i < j)
///   x_i = E(u_i,0) - E(0,w_i),           y_i = E(w_i,0) + E(0,u_i)
/// so that [x_i,x_i] = 2e_{2eps_i}, [y_i,y_i] = -2f_{2eps_i}, [x_i,y_i] = H_i.
/// The invariant form is -1/2 times the supertrace form of this model.
inline LieSuperalgebra build_osp1(size_t n2, FieldPtr F) {
  if (F->p() <= 2)
    throw Error(ErrorCode::BadCharacteristic, "requires p > 2");
  if (n2 != 2 && n2 != 4)
    throw Error(ErrorCode::Unsupported, "osp(1|n2) supports n2 in {2,4}");
  size_t n = n2 / 2;
  LieSuperalgebra g;
  g.F = F;
  g.name = "osp(1|" + std::to_string(n2) + ")";
  size_t N = 1 + n2;
  g.N = N;
  g.even_rows = 1;
  g.eps_dim = n;
  auto U = [&](size_t i) { return 1 + i; };
  auto W = [&](size_t i) { return 1 + n + i; };

  for (size_t i = 0; i < n; ++i) {
    Matrix rep(F, N, N);
    rep(U(i), U(i)) = 1;
    rep(W(i), W(i)) = F->neg(1);
    g.basis.push_back({"h" + std::to_string(i + 1), 0, rep});
    g.cartan.push_back(i);
  }
  size_t even_root_counter = 0;
  auto push_even = [&](Matrix e, Matrix f, std::vector<int64_t> eps) {
    ++even_root_counter;
    std::string k = std::to_string(even_root_counter);
    g.basis.push_back({"e" + k, 0, std::move(e)});
    size_t e_index = g.basis.size() - 1;
    g.basis.push_back({"f" + k, 0, std::move(f)});
    Root r;
    r.eps = std::move(eps);
    r.parity = 0;
    r.e_index = e_index;
    r.f_index = e_index + 1;
    g.roots.push_back(std::move(r));
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      Matrix e = detail::unit(F, N, U(i), U(j)) -
                 detail::unit(F, N, W(j), W(i));
      Matrix f = detail::unit(F, N, U(j), U(i)) -
                 detail::unit(F, N, W(i), W(j));
      push_even(std::move(e), std::move(f), detail::eps_diff(n, i, j));
    }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      Matrix e = detail::unit(F, N, U(i), W(j)) +
                 detail::unit(F, N, U(j), W(i));
      Matrix f = detail::unit(F, N, W(j), U(i)) +
                 detail::unit(F, N, W(i), U(j));
      std::vector<int64_t> eps(n, 0);
      eps[i] = 1;
      eps[j] = 1;
      push_even(std::move(e), std::move(f), std::move(eps));
    }
  for (size_t i = 0; i < n; ++i) {
    Matrix e = detail::unit(F, N, U(i), W(i), F->neg(1));
    Matrix f = detail::unit(F, N, W(i), U(i), F->neg(1));
    std::vector<int64_t> eps(n, 0);
    eps[i] = 2;
    push_even(std::move(e), std::move(f), std::move(eps));
  }
  for (size_t i = 0; i < n; ++i) {
    Matrix x = detail::unit(F, N, U(i), 0) -
               detail::unit(F, N, 0, W(i));
    Matrix y = detail::unit(F, N, W(i), 0) +
               detail::unit(F, N, 0, U(i));
    g.basis.push_back({"x" + std::to_string(i + 1), 1, std::move(x)});
    size_t e_index = g.basis.size() - 1;
    g.basis.push_back({"y" + std::to_string(i + 1), 1, std::move(y)});
    Root r;
    r.eps.assign(n, 0);
    r.eps[i] = 1;
    r.parity = 1;
    r.e_index = e_index;
    r.f_index = e_index + 1;
    g.roots.push_back(std::move(r));
  }
  for (size_t k = 0; k < g.roots.size(); ++k) g.positive.push_back(k);

  auto find_root = [&](const std::vector<int64_t>& eps) {
    for (size_t k = 0; k < g.roots.size(); ++k)
      if (g.roots[k].eps == eps) return k;
    throw std::logic_error("root lookup failed");
  };
  for (size_t i = 0; i + 1 < n; ++i) {
    SimpleReflection sr;
    sr.root_index = find_root(detail::eps_diff(n, i, i + 1));
    sr.diag_perm.resize(N);
    for (size_t k = 0; k < N; ++k) sr.diag_perm[k] = k;
    std::swap(sr.diag_perm[U(i)], sr.diag_perm[U(i + 1)]);
    std::swap(sr.diag_perm[W(i)], sr.diag_perm[W(i + 1)]);
    for (size_t k = 0; k < n; ++k) sr.eps_map.push_back({k, 1});
    sr.eps_map[i] = {i + 1, 1};
    sr.eps_map[i + 1] = {i, 1};
    g.simple_reflections.push_back(std::move(sr));
  }
  {
    std::vector<int64_t> eps(n, 0);
    eps[n - 1] = 2;
    SimpleReflection sr;
    sr.root_index = find_root(eps);
    sr.diag_perm.resize(N);
    for (size_t k = 0; k < N; ++k) sr.diag_perm[k] = k;
    std::swap(sr.diag_perm[U(n - 1)], sr.diag_perm[W(n - 1)]);
    for (size_t k = 0; k < n; ++k) sr.eps_map.push_back({k, 1});
    sr.eps_map[n - 1] = {n - 1, -1};
    g.simple_reflections.push_back(std::move(sr));
  }

  for (size_t k = 0; k < n; ++k) g.eps_rows.push_back(U(k));
  g.finalize_from_reps(F->neg(F->half()));
  return g;
}

}  // namespace superalg
