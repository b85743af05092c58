#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "superalg/families.hpp"
#include "superalg/reduced.hpp"

using namespace superalg;

namespace {

size_t index_of(const LieSuperalgebra& g, const std::string& label) {
  for (size_t i = 0; i < g.dim(); ++i)
    if (g.basis[i].label == label) return i;
  FAIL("no basis element labelled ", label);
  return size_t(-1);
}

PCharacter toral_chi(const LieSuperalgebra& g,
                     std::vector<uint32_t> values) {
  PCharacter chi = g.chi_zero();
  for (size_t i = 0; i < values.size(); ++i)
    chi.values[g.cartan[i]] = values[i];
  return chi;
}

AlgebraElement random_reduced(const ReducedAlgebra& A, std::mt19937_64& rng,
                              size_t max_terms) {
  std::uniform_int_distribution<size_t> idx(0, A.dim() - 1);
  std::uniform_int_distribution<uint64_t> coeff(
      1, A.algebra().F->order() - 1);
  std::map<size_t, uint32_t> acc;
  std::uniform_int_distribution<size_t> nterms(1, max_terms);
  size_t n = nterms(rng);
  for (size_t k = 0; k < n; ++k) acc[idx(rng)] = uint32_t(coeff(rng));
  AlgebraElement out(acc.begin(), acc.end());
  return out;
}

}  // namespace

TEST_CASE("reduced dimensions, indexing round-trip, size guard") {
  FieldPtr F = make_field(3, 3);

  LieSuperalgebra gl11 = build_gl(1, 1, F);
  ReducedAlgebra A = build_reduced(gl11, gl11.chi_zero());
  CHECK(A.dim() == 36);  // p^2 * 2^2

  LieSuperalgebra osp = build_osp1(2, F);
  ReducedAlgebra B = build_reduced(osp, osp.chi_zero());
  CHECK(B.dim() == 108);  // p^3 * 2^2

  LieSuperalgebra sl21 = build_sl(2, 1, F);
  ReducedAlgebra C = build_reduced(sl21, sl21.chi_zero());
  CHECK(C.dim() == 1296);  // p^4 * 2^4

  FieldPtr F5 = make_field(5, 1);
  LieSuperalgebra g5 = build_gl(1, 1, F5);
  ReducedAlgebra D = build_reduced(g5, g5.chi_zero());
  CHECK(D.dim() == 100);  // p^2 * 2^2 at p = 5

  for (const ReducedAlgebra* R : {&A, &B, &C}) {
    for (size_t i = 0; i < R->dim(); i += 7) {
      PbwMonomial m = R->monomial_at(i);
      CHECK(R->index_of(m) == i);
      CHECK(R->parity_at(i) == m.parity());
    }
    CHECK(R->monomial_at(0).is_one());
  }

  // p^s 2^t for gl(2|2) at p = 3 is 3^8 * 2^8, far over the limit
  LieSuperalgebra big = build_gl(2, 2, F);
  CHECK_THROWS_AS((void)build_reduced(big, big.chi_zero()), Error);
  try {
    (void)build_reduced(big, big.chi_zero());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}

TEST_CASE("reduction substitutes x^p = x^{[p]} + chi(x)^p") {
  FieldPtr F = make_field(3, 3);
  LieSuperalgebra g = build_gl(1, 1, F);
  PCharacter chi = toral_chi(g, {1, 0});
  ReducedAlgebra A = build_reduced(g, chi);
  size_t H1 = index_of(g, "H1");

  // H1^3 reduces to H1 + chi(H1)^3 * 1 = H1 + 1
  PbwMonomial cube;
  cube.even_exps.assign(g.s, 0);
  cube.even_exps[H1] = 3;
  EnvElement u;
  u.terms[cube] = 1;
  AlgebraElement r = A.reduce(u);
  PbwMonomial lin;
  lin.even_exps.assign(g.s, 0);
  lin.even_exps[H1] = 1;
  AlgebraElement expect{{0, 1}, {A.index_of(lin), 1}};
  CHECK(r == expect);

  // the images of the p-center generators collapse to the scalars chi(x)^p
  Pbw& U = A.pbw();
  for (size_t i = 0; i < g.s; ++i) {
    AlgebraElement xi = A.reduce(U.p_center_generator(i));
    uint32_t cp = F->pow(g.chi_value(chi, i), F->p());
    AlgebraElement expect_xi;
    if (cp) expect_xi = {{0, cp}};
    CHECK(xi == expect_xi);
  }
}

TEST_CASE("the defining ideal maps to zero") {
  // (x^p - x^{[p]} - chi(x)^p) m must reduce to 0 for any monomial m: the
  // quotient is well defined precisely because these elements are central.
  FieldPtr F = make_field(3, 3);
  std::mt19937_64 rng(0xC1A55);
  LieSuperalgebra gs[] = {build_gl(1, 1, F), build_osp1(2, F)};
  for (LieSuperalgebra& g : gs) {
    PCharacter chi = g.chi_zero();
    chi.values[g.cartan[0]] = 2;
    ReducedAlgebra A = build_reduced(g, chi);
    Pbw& U = A.pbw();
    std::uniform_int_distribution<size_t> pick(0, A.dim() - 1);
    for (size_t i = 0; i < g.s; ++i) {
      uint32_t cp = F->pow(g.chi_value(chi, i), F->p());
      EnvElement xi = env_sub(*F, U.p_center_generator(i), U.scalar(cp));
      for (int rep = 0; rep < 10; ++rep) {
        PbwMonomial m = A.monomial_at(pick(rng));
        AlgebraElement r = A.reduce(U.mul(xi, U.monomial(m)));
        CHECK(r.empty());
      }
    }
  }
}

TEST_CASE("frozen products in the reduced algebra") {
  FieldPtr F = make_field(3, 3);
  LieSuperalgebra g = build_gl(1, 1, F);
  ReducedAlgebra A = build_reduced(g, g.chi_zero());
  size_t H1 = index_of(g, "H1"), H2 = index_of(g, "H2");
  size_t E = index_of(g, "E12"), Fg = index_of(g, "E21");

  auto unit_of = [&](size_t basis_idx) {
    PbwMonomial m;
    m.even_exps.assign(g.s, 0);
    if (basis_idx < g.s) m.even_exps[basis_idx] = 1;
    else m.odd_mask = 1u << (basis_idx - g.s);
    return AlgebraElement{{A.index_of(m), 1}};
  };
  AlgebraElement e = unit_of(E), f = unit_of(Fg);
  AlgebraElement h1 = unit_of(H1), h2 = unit_of(H2);

  // F E = -E F + H1 + H2, E E = 0
  PbwMonomial ef;
  ef.even_exps.assign(g.s, 0);
  ef.odd_mask = (1u << (E - g.s)) | (1u << (Fg - g.s));
  AlgebraElement fe = A.mult(f, e);
  AlgebraElement expect{{A.index_of(ef), F->neg(1)}};
  expect = A.add(expect, A.add(h1, h2));
  CHECK(fe == expect);
  CHECK(A.mult(e, e).empty());

  // unit and scalar laws
  AlgebraElement x = A.add(e, A.scale(h1, 2));
  CHECK(A.mult(A.unit(), x) == x);
  CHECK(A.mult(x, A.unit()) == x);

  LieSuperalgebra o = build_osp1(2, F);
  ReducedAlgebra B = build_reduced(o, o.chi_zero());
  size_t xg = index_of(o, "x1"), eg = index_of(o, "e1");
  PbwMonomial mx, me;
  mx.even_exps.assign(o.s, 0);
  mx.odd_mask = 1u << (xg - o.s);
  me.even_exps.assign(o.s, 0);
  me.even_exps[eg] = 1;
  AlgebraElement xx = B.mult({{B.index_of(mx), 1}}, {{B.index_of(mx), 1}});
  CHECK(xx == AlgebraElement{{B.index_of(me), 1}});
}

TEST_CASE("associativity on random triples") {
  FieldPtr F = make_field(3, 3);
  std::mt19937_64 rng(0xA550C2);
  struct Cfg {
    LieSuperalgebra g;
    std::vector<uint32_t> chi;
    size_t triples;
  };
  std::vector<Cfg> cfgs;
  cfgs.push_back({build_gl(1, 1, F), {1, 0}, 500});
  cfgs.push_back({build_osp1(2, F), {1}, 500});
  cfgs.push_back({build_sl(2, 1, F), {1, 2}, 120});
  for (Cfg& cfg : cfgs) {
    ReducedAlgebra A = build_reduced(cfg.g, toral_chi(cfg.g, cfg.chi));
    for (size_t rep = 0; rep < cfg.triples; ++rep) {
      AlgebraElement a = random_reduced(A, rng, 2);
      AlgebraElement b = random_reduced(A, rng, 2);
      AlgebraElement c = random_reduced(A, rng, 2);
      CHECK(A.mult(A.mult(a, b), c) == A.mult(a, A.mult(b, c)));
    }
  }
}

TEST_CASE("center at regular characters: dimension p^r, evenness, closure") {
  FieldPtr F = make_field(3, 3);
  struct Cfg {
    LieSuperalgebra g;
    std::vector<uint32_t> chi;
    size_t expect;  // p^rank
  };
  std::vector<Cfg> cfgs;
  cfgs.push_back({build_gl(1, 1, F), {1, 0}, 9});
  cfgs.push_back({build_osp1(2, F), {1}, 3});
  cfgs.push_back({build_sl(2, 1, F), {1, 2}, 9});
  for (Cfg& cfg : cfgs) {
    CHECK(cfg.g.is_regular_semisimple(toral_chi(cfg.g, cfg.chi)));
    ReducedAlgebra A = build_reduced(cfg.g, toral_chi(cfg.g, cfg.chi));
    const auto& zc = A.center_basis();
    CHECK(zc.size() == cfg.expect);
    for (const AlgebraElement& z : zc) {
      for (const auto& [idx, c] : z) CHECK(A.parity_at(idx) == 0);
      CHECK(A.is_central(z));
    }
    CHECK(A.is_central(A.unit()));
    CHECK(A.is_central(A.reduce(A.pbw().casimir())));
    // closure under products
    for (size_t i = 0; i < zc.size(); ++i)
      for (size_t j = i; j < zc.size(); ++j)
        CHECK(A.is_central(A.mult(zc[i], zc[j])));
    // the kernel condition itself, re-checked elementwise
    for (const AlgebraElement& z : zc)
      for (size_t x = 0; x < cfg.g.dim(); ++x) {
        AlgebraElement lhs, rhs;
        for (const auto& [idx, c] : z)
          lhs = A.add(lhs, A.scale(A.ad_gen(x, idx), c));
        CHECK(lhs == rhs);
      }
  }

  // dimension p^r is a linear-algebra invariant, so it also holds over the
  // prime field where Lambda(chi) can be empty
  FieldPtr F5 = make_field(5, 1);
  LieSuperalgebra g5 = build_gl(1, 1, F5);
  PCharacter chi5 = toral_chi(g5, {1, 0});
  CHECK(g5.is_regular_semisimple(chi5));
  try {
    (void)g5.enumerate_lambda(chi5);
    FAIL("expected UnsolvableOverField");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::UnsolvableOverField);
  }
  ReducedAlgebra A5 = build_reduced(g5, chi5);
  CHECK(A5.center_basis().size() == 25);
}

TEST_CASE("center at the zero character contains unit and Casimir image") {
  FieldPtr F = make_field(3, 3);
  LieSuperalgebra g = build_gl(1, 1, F);
  ReducedAlgebra A = build_reduced(g, g.chi_zero());
  const auto& zc = A.center_basis();
  CHECK(zc.size() == 10);
  for (const AlgebraElement& z : zc)
    for (const auto& [idx, c] : z) CHECK(A.parity_at(idx) == 0);
  CHECK(A.is_central(A.unit()));
  CHECK(A.is_central(A.reduce(A.pbw().casimir())));
  for (size_t i = 0; i < zc.size(); ++i)
    for (size_t j = i; j < zc.size(); ++j)
      CHECK(A.is_central(A.mult(zc[i], zc[j])));
}

TEST_CASE("odd central elements at a singular character") {
  // For osp(1|2) at p = 3 the monomial x e has weight 2 eps + eps = 0 mod p,
  // and the zero-character center picks up two odd basis elements; the
  // evenness of the center is a regular-character statement.  Basis elements
  // come out parity-homogeneous, even parts first.
  FieldPtr F = make_field(3, 3);
  LieSuperalgebra g = build_osp1(2, F);
  ReducedAlgebra A = build_reduced(g, g.chi_zero());
  const auto& zc = A.center_basis();
  REQUIRE(zc.size() == 7);
  size_t odd = 0;
  for (const AlgebraElement& z : zc) {
    int par = A.parity_at(z.front().first);
    for (const auto& [idx, c] : z) CHECK(A.parity_at(idx) == par);
    odd += par;
  }
  CHECK(odd == 2);
  // the odd ones are honest central elements: closure keeps holding
  for (size_t i = 0; i < zc.size(); ++i)
    for (size_t j = i; j < zc.size(); ++j)
      CHECK(A.is_central(A.mult(zc[i], zc[j])));
  // the anti-center stays purely even even here
  const auto& ac = A.anticenter_basis();
  CHECK(ac.size() == 4);
  for (const AlgebraElement& a : ac)
    for (const auto& [idx, c] : a) CHECK(A.parity_at(idx) == 0);
}

TEST_CASE("anti-center: dimension, evenness, product signs") {
  FieldPtr F = make_field(3, 3);
  struct Cfg {
    LieSuperalgebra g;
    std::vector<uint32_t> chi;
    size_t expect;  // one parity involution per matrix block
  };
  std::vector<Cfg> cfgs;
  cfgs.push_back({build_gl(1, 1, F), {1, 0}, 9});
  cfgs.push_back({build_osp1(2, F), {1}, 3});
  cfgs.push_back({build_sl(2, 1, F), {1, 2}, 9});
  for (Cfg& cfg : cfgs) {
    ReducedAlgebra A = build_reduced(cfg.g, toral_chi(cfg.g, cfg.chi));
    const auto& ac = A.anticenter_basis();
    CHECK(ac.size() == cfg.expect);
    CHECK(!ac.empty());
    RowSpace anti_span(F, A.dim());
    std::vector<std::vector<uint32_t>> dense_rows;
    for (const AlgebraElement& a : ac) {
      for (const auto& [idx, c] : a) CHECK(A.parity_at(idx) == 0);
      std::vector<uint32_t> row(A.dim(), 0);
      for (const auto& [idx, c] : a) row[idx] = c;
      anti_span.insert(std::move(row));
    }
    const auto& zc = A.center_basis();
    // anticentral * central stays anticentral; anticentral * anticentral
    // is central
    for (const AlgebraElement& a : ac) {
      for (const AlgebraElement& z : zc) {
        AlgebraElement az = A.mult(a, z);
        std::vector<uint32_t> row(A.dim(), 0);
        for (const auto& [idx, c] : az) row[idx] = c;
        CHECK(anti_span.contains(row));
      }
      for (const AlgebraElement& b : ac) CHECK(A.is_central(A.mult(a, b)));
    }
  }
}

TEST_CASE("central characters on the center basis") {
  FieldPtr F = make_field(3, 3);
  LieSuperalgebra g = build_gl(1, 1, F);
  PCharacter chi = toral_chi(g, {1, 0});
  ReducedAlgebra A = build_reduced(g, chi);
  Pbw& U = A.pbw();
  std::vector<Weight> lams = g.enumerate_lambda(chi);
  CHECK(lams.size() == 9);

  AlgebraElement om = A.reduce(U.casimir());
  for (const Weight& lam : lams) {
    CHECK(A.central_character(A.unit(), lam) == 1);
    // Omega for gl(1|1) has gamma_1 = H1^2 - H2^2 - H1 - H2
    uint32_t l1 = lam.values[0], l2 = lam.values[1];
    uint32_t expect = F->sub(F->mul(l1, l1), F->mul(l2, l2));
    expect = F->sub(expect, F->add(l1, l2));
    CHECK(A.central_character(om, lam) == expect);
    // xi_H images are the scalars chi(H)^p = lambda(H)^p - lambda(H)
    for (size_t i = 0; i < g.rank(); ++i) {
      AlgebraElement xi = A.reduce(U.p_center_generator(g.cartan[i]));
      uint32_t theta = xi.empty() ? 0 : A.central_character(xi, lam);
      uint32_t li = lam.values[i];
      CHECK(theta == F->sub(F->pow(li, 3), li));
      CHECK(theta == F->pow(g.chi_value(chi, g.cartan[i]), 3));
    }
  }

  // each column is an algebra homomorphism
  const auto& zc = A.center_basis();
  for (const Weight& lam : {lams[0], lams[4]})
    for (size_t i = 0; i < zc.size(); ++i)
      for (size_t j = 0; j < zc.size(); ++j) {
        uint32_t lhs = A.central_character(A.mult(zc[i], zc[j]), lam);
        uint32_t rhs =
            F->mul(A.central_character(zc[i], lam), A.central_character(zc[j], lam));
        CHECK(lhs == rhs);
      }

  // columns are pairwise distinct for distinct lambda
  CentralCharacterTable tab = A.central_character_table();
  CHECK(tab.lambdas.size() == 9);
  for (size_t a = 0; a < tab.values.size(); ++a)
    for (size_t b = a + 1; b < tab.values.size(); ++b)
      CHECK(tab.values[a] != tab.values[b]);

  // osp: Theta_lambda(Omega) = lambda^2 + lambda
  LieSuperalgebra o = build_osp1(2, F);
  PCharacter ochi = toral_chi(o, {1});
  ReducedAlgebra B = build_reduced(o, ochi);
  AlgebraElement oom = B.reduce(B.pbw().casimir());
  for (const Weight& lam : o.enumerate_lambda(ochi)) {
    uint32_t l = lam.values[0];
    CHECK(B.central_character(oom, lam) == F->add(F->mul(l, l), l));
  }

  // error paths: non-central argument, incompatible weight
  PbwMonomial modd;
  modd.even_exps.assign(g.s, 0);
  modd.odd_mask = 1;
  AlgebraElement e_elem{{A.index_of(modd), 1}};
  CHECK(!A.is_central(e_elem));
  try {
    (void)A.central_character(e_elem, lams[0]);
    FAIL("expected NotCentral");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotCentral);
  }
  Weight bad;
  bad.values = {1, 1};  // 1^3 - 1 = 0 != chi(H1)^3 = 1
  try {
    (void)A.central_character(A.unit(), bad);
    FAIL("expected WeightNotCompatible");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::WeightNotCompatible);
  }
}

TEST_CASE("left multiplication rank") {
  FieldPtr F = make_field(3, 3);
  LieSuperalgebra g = build_gl(1, 1, F);
  ReducedAlgebra A = build_reduced(g, g.chi_zero());
  CHECK(A.left_mult_rank(A.unit()) == A.dim());
  // a nilpotent generator has a proper image
  PbwMonomial modd;
  modd.even_exps.assign(g.s, 0);
  modd.odd_mask = 1;
  CHECK(A.left_mult_rank({{A.index_of(modd), 1}}) < A.dim());

  PCharacter chi = toral_chi(g, {1, 0});
  ReducedAlgebra B = build_reduced(g, chi);
  CHECK(B.left_mult_rank(B.unit()) == B.dim());
  CHECK(B.left_mult_rank(B.scale(B.unit(), 2)) == B.dim());
}
