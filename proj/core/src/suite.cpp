#include "leibniz/suite.hpp"

#include <random>
#include <tuple>
#include <utility>

#include "leibniz/algebra.hpp"
#include "leibniz/constructions.hpp"
#include "leibniz/isoclinism.hpp"
#include "leibniz/sampling.hpp"
#include "leibniz/stem.hpp"

namespace leibniz {
namespace {

// --- check harness ---------------------------------------------------------

struct Ctx {
  std::size_t cases = 0;
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    ++cases;
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string at(const std::string& what, std::size_t k) {
  return what + " (case " + std::to_string(k) + ")";
}

// --- fixture algebras ------------------------------------------------------

LeibnizAlgebra build(const Field& f, std::size_t dim,
                     std::vector<std::string> names,
                     const std::vector<std::tuple<std::size_t, std::size_t,
                                                  std::size_t, long>>& table) {
  std::vector<std::vector<Vector>> sc(
      dim, std::vector<Vector>(dim, zero_vector(f, dim)));
  for (const auto& [i, j, k, c] : table)
    sc[i][j][k] = sc[i][j][k] + Scalar::of_int(f, c);
  return LeibnizAlgebra(f, dim, std::move(names), std::move(sc));
}

// dim 4: [a1,a1] = a4, [a1,a2] = -a2, [a2,a1] = a2, [a3,a1] = -a3, [a3,a2] = a4
LeibnizAlgebra make_l5(const Field& f) {
  return build(f, 4, {"a1", "a2", "a3", "a4"},
               {{0, 0, 3, 1}, {0, 1, 1, -1}, {1, 0, 1, 1}, {2, 0, 2, -1}, {2, 1, 3, 1}});
}

// dim 3: [a1,a3] = a1
LeibnizAlgebra make_a3(const Field& f) {
  return build(f, 3, {"a1", "a2", "a3"}, {{0, 2, 0, 1}});
}

// dim 2: [a1,a1] = a2
LeibnizAlgebra make_n2(const Field& f) {
  return build(f, 2, {"a1", "a2"}, {{0, 0, 1, 1}});
}

// dim 3: [a1,a1] = a3, [a2,a2] = lam a3
LeibnizAlgebra make_b3(const Field& f, long lam) {
  return build(f, 3, {"a1", "a2", "a3"}, {{0, 0, 2, 1}, {1, 1, 2, lam}});
}

// dim 3: [u,u] = z, [u,w] = z, [w,u] = -z; not stem at level 1 although no
// nonzero ideal avoids gamma_2 = span{z}
LeibnizAlgebra make_skew(const Field& f) {
  return build(f, 3, {"u", "w", "z"}, {{0, 0, 2, 1}, {0, 1, 2, 1}, {1, 0, 2, -1}});
}

// the dim-2 stem quotient of A3
LeibnizAlgebra make_stem_a3(const Field& f) {
  return quotient_algebra(make_a3(f), Subspace::span(f, 3, {unit_vector(f, 3, 1)}))
      .algebra;
}

Subspace sp(const Field& f, std::size_t ambient,
            std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> gens;
  for (auto r : rows) {
    Vector v;
    for (long e : r) v.push_back(Scalar::of_int(f, e));
    gens.push_back(std::move(v));
  }
  return Subspace::span(f, ambient, gens);
}

Subspace full_gamma(const LeibnizAlgebra& a, std::size_t k) {
  return lower_term(a, a.full_subspace(), k);
}

// --- brute-force oracles ---------------------------------------------------

template <typename Fn>
void for_each_matrix(const Field& f, std::size_t rows, std::size_t cols,
                     Fn&& fn) {
  const unsigned long p = f.modulus();
  std::vector<unsigned long> digits(rows * cols, 0);
  for (;;) {
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m.at(i, j) = Scalar::of_int(f, long(digits[i * cols + j]));
    fn(m);
    bool advanced = false;
    for (std::size_t i = digits.size(); i-- > 0;) {
      if (++digits[i] < p) {
        advanced = true;
        break;
      }
      digits[i] = 0;
    }
    if (!advanced) return;
  }
}

// try EVERY pair of linear bijections (eta, xi) with no derivation shortcuts
bool witness_exists_brute_force(const LeibnizAlgebra& a1,
                                const LeibnizAlgebra& a2, std::size_t n) {
  LevelContext c1 = level_context(a1, n);
  LevelContext c2 = level_context(a2, n);
  if (c1.quotient.algebra.dim() != c2.quotient.algebra.dim() ||
      c1.gamma.dim() != c2.gamma.dim())
    return false;
  bool found = false;
  for_each_matrix(a1.field(), c2.quotient.algebra.dim(),
                  c1.quotient.algebra.dim(), [&](const Matrix& em) {
    if (found) return;
    Homomorphism eta(c1.quotient.algebra, c2.quotient.algebra, em);
    if (!is_isomorphism(eta)) return;
    for_each_matrix(a1.field(), c2.gamma.dim(), c1.gamma.dim(),
                    [&](const Matrix& xm) {
      if (found) return;
      Homomorphism xi(c1.gamma_res.algebra, c2.gamma_res.algebra, xm);
      if (!xi.is_bijective()) return;
      if (verify_witness(IsoclinismWitness{n, a1, a2, eta, xi}).ok)
        found = true;
    });
  });
  return found;
}

// --- the checks ------------------------------------------------------------

void check_series_l5(Ctx& c, std::mt19937_64&) {
  for (const Field& f : {Field::prime(3), Field::rationals()}) {
    LeibnizAlgebra l5 = make_l5(f);
    Subspace g34 = sp(f, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}});
    Subspace z24 = sp(f, 4, {{0, 1, 0, 0}, {0, 0, 0, 1}});
    Subspace z4 = sp(f, 4, {{0, 0, 0, 1}});
    for (std::size_t k = 2; k <= 6; ++k)
      c.expect(full_gamma(l5, k) == g34,
               "L5: lower term " + std::to_string(k) + " moved off span{a3,a4}");
    c.expect(upper_term(l5, 1) == z4, "L5: Z_1 is not span{a4}");
    for (std::size_t k = 2; k <= 6; ++k)
      c.expect(upper_term(l5, k) == z24,
               "L5: upper term " + std::to_string(k) + " is not span{a2,a4}");
    for (std::size_t n = 3; n <= 6; ++n)
      c.expect(lie_commutator_ideal(l5, upper_term(l5, n - 1),
                                    l5.full_subspace()) == z4,
               "L5: [Z_" + std::to_string(n - 1) + ", L5] is not span{a4}");
    c.expect(!nilpotency_class(l5, l5.full_subspace()).has_value(),
             "L5 must not be Lie-nilpotent");
  }
}

void check_series_a3(Ctx& c, std::mt19937_64&) {
  for (const Field& f : {Field::prime(3), Field::rationals()}) {
    LeibnizAlgebra a3 = make_a3(f);
    Subspace a1 = sp(f, 3, {{1, 0, 0}});
    for (std::size_t n = 1; n <= 5; ++n)
      c.expect(full_gamma(a3, n + 1) == a1,
               "A3: lower term " + std::to_string(n + 1) + " is not span{a1}");
    c.expect(upper_term(a3, 1) == sp(f, 3, {{0, 1, 0}}), "A3: Z_1 is not span{a2}");
    c.expect(upper_term(a3, 9) == sp(f, 3, {{0, 1, 0}}),
             "A3: the upper series must stabilize at span{a2}");
  }
}

void check_witness_quotient_a3(Ctx& c, std::mt19937_64&) {
  const Field f = Field::prime(3);
  LeibnizAlgebra a3 = make_a3(f);
  Subspace i2 = sp(f, 3, {{0, 1, 0}});
  for (std::size_t n = 1; n <= 3; ++n) {
    IsoclinismWitness w = witness_quotient(a3, i2, n);
    c.expect(verify_witness(w).ok,
             "A3 quotient witness fails at level " + std::to_string(n));
    c.expect(verify_xieta(w).ok,
             "A3 quotient witness xi/eta clauses fail at level " + std::to_string(n));
  }

  // the projection triple criterion accepts A3 -> A3/span{a2} ...
  {
    Quotient qu = quotient_algebra(a3, i2);
    Restriction z1 = restrict_to(a3, upper_term(a3, 1));
    Restriction z2 = restrict_to(qu.algebra, upper_term(qu.algebra, 1));
    Homomorphism alpha(z1.algebra, z2.algebra,
                       Matrix(f, z2.algebra.dim(), z1.algebra.dim()));
    Quotient c1 = quotient_algebra(a3, upper_term(a3, 1));
    Quotient c2 = quotient_algebra(qu.algebra, upper_term(qu.algebra, 1));
    Homomorphism gm(c1.algebra, c2.algebra, Matrix::identity(f, c1.algebra.dim()));
    IsoclinicHomReport rep = check_isoclinic_homomorphism(alpha, qu.projection, gm, 1);
    c.expect(rep.isoclinic, "A3 projection triple must be accepted");
    c.expect(rep.witness.has_value() && verify_witness(*rep.witness).ok,
             "A3 projection triple must emit a verified witness");
  }

  // ... and rejects L5 -> L5/span{a4}, whose kernel sits inside gamma_2
  {
    LeibnizAlgebra l5 = make_l5(f);
    Quotient qu = quotient_algebra(l5, sp(f, 4, {{0, 0, 0, 1}}));
    Restriction z1 = restrict_to(l5, upper_term(l5, 1));
    Restriction z2 = restrict_to(qu.algebra, upper_term(qu.algebra, 1));
    Homomorphism alpha(z1.algebra, z2.algebra,
                       Matrix(f, z2.algebra.dim(), z1.algebra.dim()));
    Quotient c1 = quotient_algebra(l5, upper_term(l5, 1));
    Quotient c2 = quotient_algebra(qu.algebra, upper_term(qu.algebra, 1));
    std::vector<Vector> cols = {unit_vector(f, 2, 0), zero_vector(f, 2),
                                unit_vector(f, 2, 1)};
    Homomorphism gm = Homomorphism::from_images(c1.algebra, c2.algebra, cols);
    IsoclinicHomReport rep = check_isoclinic_homomorphism(alpha, qu.projection, gm, 1);
    c.expect(!rep.kernel_condition && !rep.isoclinic,
             "L5 projection triple must be rejected");
  }
}

void check_witness_equivalence(Ctx& c, std::mt19937_64& rng) {
  const Field f = Field::prime(3);
  for (int k = 0; k < 100; ++k) {
    std::size_t n = k % 4;
    IsoclinismWitness w = random_verified_witness(f, 4, n, rng);
    c.expect(verify_witness(w).ok, at("random witness fails verification", k));
    c.expect(verify_witness(identity_witness(w.a1, n)).ok,
             at("identity witness fails on the source", k));
    IsoclinismWitness inv = invert_witness(w);
    c.expect(verify_witness(inv).ok, at("inverted witness fails", k));
    c.expect(verify_witness(compose_witness(w, inv)).ok,
             at("witness composed with its inverse fails", k));
    c.expect(verify_witness(compose_witness(inv, w)).ok,
             at("inverse composed with the witness fails", k));
  }
}

void check_witness_xieta(Ctx& c, std::mt19937_64& rng) {
  const Field f = Field::prime(3);
  for (int k = 0; k < 100; ++k) {
    IsoclinismWitness w = random_verified_witness(f, 4, k % 4, rng);
    XietaReport r = verify_xieta(w);
    c.expect(r.coset_identity, at("coset identity fails", k));
    c.expect(r.center_gamma_preserved, at("xi moves Z_n within gamma", k));
    c.expect(r.mixed_identity, at("mixed bracket identity fails", k));
    c.expect(r.ok, at("xi/eta clauses fail", k));
  }
}

void check_witness_direct_sum(Ctx& c, std::mt19937_64& rng) {
  const Field f = Field::prime(3);
  for (int k = 0; k < 60; ++k) {
    std::size_t n = 1 + k % 3;
    LeibnizAlgebra a = random_central_algebra(f, 1 + k % 3, rng);
    LeibnizAlgebra nalg = (n >= 2 && k % 2 == 0)
                              ? make_n2(f)  // class 2
                              : LeibnizAlgebra::abelian(f, 1 + k % 2);
    IsoclinismWitness w = witness_direct_sum(a, nalg, n);
    c.expect(verify_witness(w).ok, at("direct-sum witness fails", k));
    c.expect(verify_xieta(w).ok, at("direct-sum witness xi/eta clauses fail", k));
  }
  // a summand of too-high class is rejected
  bool threw = false;
  try {
    (void)witness_direct_sum(make_a3(f), make_l5(f), 3);
  } catch (const Error&) {
    threw = true;
  }
  c.expect(threw, "a non-nilpotent summand must be rejected");
  threw = false;
  try {
    (void)witness_direct_sum(make_a3(f), make_n2(f), 1);
  } catch (const Error&) {
    threw = true;
  }
  c.expect(threw, "a class-2 summand must be rejected at level 1");
}

void check_witness_subalgebra(Ctx& c, std::mt19937_64& rng) {
  const Field f = Field::prime(3);
  for (int it = 0; it < 3; ++it) {
    LeibnizAlgebra g = random_central_algebra(f, 3, rng);
    for (const Subspace& h : all_subspaces(f, 3)) {
      if (!classify_subspace(g, h).subalgebra) continue;
      for (std::size_t n = 1; n <= 2; ++n) {
        try {
          IsoclinismWitness w = witness_subalgebra(g, h, n);
          c.expect(verify_witness(w).ok, "subalgebra witness fails verification");
          c.expect(verify_xieta(w).ok, "subalgebra witness xi/eta clauses fail");
        } catch (const Error&) {
          // the hypothesis on [Z_{n-1}(h), h] failed; nothing is claimed
        }
      }
      // a subalgebra isoclinic to the whole must cover it modulo the centre
      Restriction hr = restrict_to(g, h);
      if (fingerprint(hr.algebra, 1) == fingerprint(g, 1)) {
        SearchResult r = search_isoclinism(hr.algebra, g, 1, 100000);
        if (r.outcome == SearchOutcome::witness)
          c.expect(sum(h, upper_term(g, 1)) == g.full_subspace(),
                   "an isoclinic subalgebra must satisfy h + Z_1 = g");
      }
    }
  }
}

void check_witness_quotient_ideals(Ctx& c, std::mt19937_64& rng) {
  const Field f = Field::prime(3);
  for (int it = 0; it < 4; ++it) {
    LeibnizAlgebra a = random_central_algebra(f, 2 + it % 2, rng);
    for (const Subspace& i : enumerate_ideals(a)) {
      for (std::size_t n = 1; n <= 2; ++n) {
        IsoclinismWitness w = witness_quotient(a, i, n);
        c.expect(verify_witness(w).ok, "ideal quotient witness fails");
        c.expect(verify_xieta(w).ok, "ideal quotient witness xi/eta clauses fail");
        if (intersect(i, full_gamma(a, n + 1)).is_zero())
          c.expect(w.a1.dim() == a.dim(),
                   "a harmless ideal must witness against the algebra itself");
      }
    }
  }
}

void check_witness_pullback(Ctx& c, std::mt19937_64& rng) {
  const Field f = Field::prime(3);
  std::vector<IsoclinismWitness> pool;
  pool.push_back(identity_witness(make_n2(f), 1));
  pool.push_back(witness_quotient(make_a3(f), sp(f, 3, {{0, 1, 0}}), 1));
  for (int k = 0; k < 5; ++k) pool.push_back(random_verified_witness(f, 3, 1, rng));
  for (std::size_t k = 0; k < pool.size(); ++k) {
    const IsoclinismWitness& w = pool[k];
    IsoclinismWitness p = witness_pullback(w.a1, w.a2, w.eta, w.xi, w.n);
    c.expect(verify_witness(p).ok, at("pullback witness fails", k));
    c.expect(verify_xieta(p).ok, at("pullback witness xi/eta clauses fail", k));
  }
}

void check_pair_algebra(Ctx& c, std::mt19937_64& rng) {
  const Field f = Field::prime(3);
  std::vector<std::pair<IsoclinismWitness, bool>> pool;  // witness, self-pair?
  pool.emplace_back(identity_witness(make_n2(f), 1), true);
  pool.emplace_back(identity_witness(make_b3(f, 1), 1), true);
  pool.emplace_back(identity_witness(make_l5(f), 2), false);
  pool.emplace_back(witness_quotient(make_a3(f), sp(f, 3, {{0, 1, 0}}), 1), false);
  for (int k = 0; k < 4; ++k)
    pool.emplace_back(random_verified_witness(f, 3, 1 + k % 2, rng), false);

  for (std::size_t k = 0; k < pool.size(); ++k) {
    const IsoclinismWitness& w = pool[k].first;
    PairAlgebra p = pair_algebra(w.a1, w.a2, w.eta, w.n);
    Subspace gamma = full_gamma(p.K, w.n + 1);
    c.expect(p.embed.is_injective(), at("pair algebra must embed into the sum", k));
    c.expect(analyze_homomorphism(p.tau1).is_homomorphism &&
                 analyze_homomorphism(p.tau2).is_homomorphism,
             at("pair projections must be homomorphisms", k));
    c.expect(p.tau1.is_surjective() && p.tau2.is_surjective(),
             at("pair projections must be onto", k));
    c.expect(p.tau1.kernel() == p.Zg2 && p.tau2.kernel() == p.Zg1,
             at("pair projection kernels must be the centre copies", k));
    if (w.n == 1)
      c.expect(intersect(p.Zg1, gamma).is_zero() &&
                   intersect(p.Zg2, gamma).is_zero(),
               at("centre copies must miss the commutator term", k));
    if (pool[k].second) {
      // level-1 identity self-pair on an algebra whose commutator term
      // annihilates the centre: gamma_2(K) is the diagonal commutator copy
      Subspace g1 = full_gamma(w.a1, w.n + 1);
      std::vector<Vector> diag;
      for (std::size_t r = 0; r < g1.dim(); ++r) {
        Vector row = g1.basis().row(r);
        Vector doubled(row);
        for (const Scalar& s : row) doubled.push_back(s);
        diag.push_back(std::move(doubled));
      }
      c.expect(p.embed.apply(gamma) ==
                   Subspace::span(f, 2 * w.a1.dim(), diag),
               at("self-pair commutator must sit on the diagonal", k));
    }
  }

  // pinned boundary: at level 2 the centre copies CAN meet the commutator
  // term.  In the L5 self-pair, bracketing the diagonal of gamma_3 with
  // (a2, 0) lands (a4, 0) inside gamma_3(K) n Zg1.
  {
    LeibnizAlgebra l5 = make_l5(f);
    IsoclinismWitness w = identity_witness(l5, 2);
    PairAlgebra p = pair_algebra(w.a1, w.a2, w.eta, w.n);
    Subspace gamma = full_gamma(p.K, 3);
    c.expect(!intersect(p.Zg1, gamma).is_zero(),
             "the L5 self-pair at level 2 must exhibit the boundary case");
  }
}

void check_isoclinic_pair(Ctx& c, std::mt19937_64& rng) {
  const Field f = Field::prime(3);
  for (int k = 0; k < 20; ++k) {
    IsoclinismWitness w = random_verified_witness(f, 3, 1 + k % 2, rng);
    PairAlgebra p = pair_algebra(w.a1, w.a2, w.eta, w.n);
    Subspace gamma = full_gamma(p.K, w.n + 1);
    bool harmless = intersect(p.tau2.kernel(), gamma).is_zero();

    // the second projection is always onto; at level 1 its kernel also
    // misses the commutator term (at higher levels it genuinely may not)
    c.expect(p.tau2.is_surjective(), at("pair projection must be onto", k));
    if (w.n == 1)
      c.expect(harmless, at("a level-1 pair kernel must miss gamma_2", k));

    // such a projection rebuilds a verified witness by chaining the
    // quotient witness with the first-isomorphism identification
    IsoclinismWitness wq = witness_quotient(p.K, p.tau2.kernel(), w.n);
    Quotient qk = quotient_algebra(p.K, p.tau2.kernel());
    std::vector<std::size_t> comp = p.tau2.kernel().complement_indices();
    std::vector<Vector> cols;
    for (std::size_t r = 0; r < qk.algebra.dim(); ++r)
      cols.push_back(p.tau2.apply(unit_vector(f, p.K.dim(), comp[r])));
    Homomorphism phi = Homomorphism::from_images(qk.algebra, w.a2, cols);
    c.expect(is_isomorphism(phi), at("first-isomorphism map must be one", k));
    IsoclinismWitness rebuilt =
        compose_witness(wq, witness_from_isomorphism(phi, w.n));
    c.expect(verify_witness(rebuilt).ok, at("rebuilt witness fails", k));

    // a harmless kernel makes tau2 pass the induced criterion outright
    InducedReport ir = induced_isoclinic(p.tau2, w.n);
    c.expect(ir.kernel_condition == harmless,
             at("the kernel condition must match the intersection", k));
    if (harmless) {
      c.expect(ir.induces, at("pair projection must induce an isoclinism", k));
      c.expect(ir.witness.has_value() && verify_witness(*ir.witness).ok,
               at("induced witness must verify", k));
      if (w.n == 1)
        c.expect(verify_xieta(*ir.witness).ok,
                 at("induced witness must satisfy the xi/eta clauses", k));
    }
  }
}

void check_level_shift(Ctx& c, std::mt19937_64& rng) {
  const Field f = Field::prime(3);
  // pairs (a, I) with I a two-sided ideal missing gamma_3(a)
  std::vector<std::pair<LeibnizAlgebra, Subspace>> pool;
  pool.emplace_back(make_a3(f), sp(f, 3, {{0, 1, 0}}));
  for (int k = 0; k < 4; ++k) {
    LeibnizAlgebra a = random_central_algebra(f, 2 + k % 2, rng);
    DirectSum s = direct_sum(a, LeibnizAlgebra::abelian(f, 1));
    pool.emplace_back(s.algebra,
                      Subspace::span(f, a.dim() + 1,
                                     {unit_vector(f, a.dim() + 1, a.dim())}));
  }
  const std::size_t n = 2;
  for (std::size_t k = 0; k < pool.size(); ++k) {
    const auto& [a, ideal] = pool[k];
    if (!intersect(ideal, full_gamma(a, n + 1)).is_zero()) continue;
    LeibnizAlgebra q = quotient_algebra(a, ideal).algebra;

    // the same ideal keeps witnessing at every higher level
    for (std::size_t m = n; m <= n + 2; ++m)
      c.expect(verify_witness(witness_quotient(a, ideal, m)).ok,
               at("quotient witness fails at level " + std::to_string(m), k));

    // one level down: the central quotients stay isoclinic ...
    LeibnizAlgebra qa = quotient_algebra(a, upper_term(a, 1)).algebra;
    LeibnizAlgebra qq = quotient_algebra(q, upper_term(q, 1)).algebra;
    c.expect(search_isoclinism(qa, qq, n - 1).outcome == SearchOutcome::witness,
             at("central quotients must stay isoclinic one level down", k));

    // ... and so do the commutator subalgebras
    LeibnizAlgebra ga = restriction(a, full_gamma(a, 2));
    LeibnizAlgebra gq = restriction(q, full_gamma(q, 2));
    c.expect(search_isoclinism(ga, gq, n - 1).outcome == SearchOutcome::witness,
             at("commutator terms must stay isoclinic one level down", k));
  }
}

void check_projection_criteria(Ctx& c, std::mt19937_64& rng) {
  const Field f = Field::prime(3);
  std::vector<LeibnizAlgebra> pool = {make_a3(f), make_n2(f), make_b3(f, 2)};
  for (int k = 0; k < 5; ++k)
    pool.push_back(random_central_algebra(f, 2 + k % 2, rng));

  for (std::size_t k = 0; k < pool.size(); ++k) {
    const LeibnizAlgebra& a = pool[k];
    Subspace gamma2 = full_gamma(a, 2);
    for (const Subspace& i : enumerate_ideals(a)) {
      Quotient qu = quotient_algebra(a, i);
      bool harmless = intersect(i, gamma2).is_zero();
      InducedReport ir = induced_isoclinic(qu.projection, 1);
      c.expect(ir.kernel_condition == harmless,
               at("kernel condition must equal the intersection test", k));
      c.expect(ir.image_condition,
               at("a projection always covers modulo the centre", k));
      c.expect(ir.induces == harmless,
               at("the induced criterion must match the intersection test", k));
      bool found = search_isoclinism(a, qu.algebra, 1).outcome ==
                   SearchOutcome::witness;
      c.expect(found == harmless,
               at("the search verdict must match the criteria", k));
      if (ir.induces)
        c.expect(ir.witness.has_value() && verify_witness(*ir.witness).ok,
                 at("an induced isoclinism must carry a verified witness", k));
    }
  }
}

void check_stem_criterion(Ctx& c, std::mt19937_64& rng) {
  const Field f = Field::prime(3);
  // hand-checked fixtures where the two sides coincide through level 3
  std::vector<LeibnizAlgebra> agree_pool = {
      make_a3(f),  make_n2(f),      make_b3(f, 1),
      make_b3(f, 2), make_stem_a3(f), LeibnizAlgebra::abelian(f, 2)};
  for (const LeibnizAlgebra& a : agree_pool)
    for (std::size_t n = 0; n <= 3; ++n)
      c.expect(stem_ideal_criterion(a, n).agree,
               "criterion must agree with stemness on the fixture pool");

  // random algebras: stem always rules out an escaping ideal; the converse
  // genuinely fails, so only report consistency is asserted there
  for (int k = 0; k < 8; ++k) {
    LeibnizAlgebra a = random_central_algebra(f, 2 + k % 2, rng);
    for (std::size_t n = 0; n <= 3; ++n) {
      StemCriterionReport rep = stem_ideal_criterion(a, n);
      c.expect(!rep.stem || rep.no_escaping_ideal,
               at("a stem algebra admits no escaping ideal", k));
      c.expect(rep.witness_ideal.has_value() != rep.no_escaping_ideal,
               at("the escaping-ideal report must be internally consistent", k));
      if (rep.witness_ideal)
        c.expect(classify_subspace(a, *rep.witness_ideal).two_sided_ideal &&
                     intersect(*rep.witness_ideal, full_gamma(a, n + 1)).is_zero(),
                 at("an escape witness must be a harmless ideal", k));
    }
  }

  // the two pinned boundary cases where the converse direction fails
  StemCriterionReport skew = stem_ideal_criterion(make_skew(f), 1);
  c.expect(!skew.stem && skew.no_escaping_ideal && !skew.agree,
           "the skew dim-3 algebra must separate the two sides at level 1");
  StemCriterionReport l5 = stem_ideal_criterion(make_l5(f), 2);
  c.expect(!l5.stem && l5.no_escaping_ideal && !l5.agree,
           "L5 must separate the two sides at level 2");
}

void check_stem_reduction(Ctx& c, std::mt19937_64& rng) {
  const Field f = Field::prime(3);
  std::vector<LeibnizAlgebra> fixture_pool = {make_a3(f), make_n2(f),
                                              make_b3(f, 2), make_stem_a3(f)};
  for (const LeibnizAlgebra& a : fixture_pool)
    for (std::size_t n = 1; n <= 3; ++n) {
      Reduction r = stem_reduction(a, n);
      c.expect(r.certified && r.achieved && is_stem(r.quotient, n),
               "fixture reductions must reach a certified stem quotient");
      c.expect(verify_witness(r.witness).ok, "reduction witness must verify");
      c.expect(intersect(r.m, full_gamma(a, n + 1)).is_zero(),
               "the collapsed ideal must miss the commutator term");
    }

  for (int k = 0; k < 6; ++k) {
    LeibnizAlgebra a = random_central_algebra(f, 2 + k % 2, rng);
    for (std::size_t n = 1; n <= 2; ++n) {
      Reduction r = stem_reduction(a, n);
      c.expect(r.certified, at("small prime-field reductions are certified", k));
      c.expect(verify_witness(r.witness).ok, at("reduction witness must verify", k));
      c.expect(intersect(r.m, full_gamma(a, n + 1)).is_zero(),
               at("the collapsed ideal must miss the commutator term", k));
      c.expect(classify_subspace(a, r.m).two_sided_ideal,
               at("the collapsed subspace must be a two-sided ideal", k));
      c.expect(r.achieved == is_stem(r.quotient, n),
               at("the achieved flag must match the quotient", k));
      if (!r.achieved)
        c.expect(stem_reduction(r.quotient, n).m.is_zero(),
                 at("a missed reduction must be a dead end", k));
    }
  }

  // the pinned stuck case: nothing to collapse, reported honestly
  Reduction stuck = stem_reduction(make_skew(f), 1);
  c.expect(stuck.m.is_zero() && stuck.certified && !stuck.achieved,
           "the skew algebra must report a certified miss");
}

void check_minimal_dimension(Ctx& c, std::mt19937_64& rng) {
  const Field f = Field::prime(3);
  for (int k = 0; k < 20; ++k) {
    LeibnizAlgebra base = k % 3 == 0   ? make_stem_a3(f)
                          : k % 3 == 1 ? make_b3(f, 1 + k % 2)
                                       : make_n2(f);
    std::size_t n = 1;
    std::vector<std::pair<LeibnizAlgebra, IsoclinismWitness>> family;
    family.emplace_back(base, identity_witness(base, n));
    BasisChange bc = change_basis(base, random_invertible(f, base.dim(), rng));
    family.emplace_back(bc.algebra,
                        invert_witness(witness_from_isomorphism(bc.iso, n)));
    LeibnizAlgebra pad = LeibnizAlgebra::abelian(f, 1 + k % 2);
    family.emplace_back(direct_sum(base, pad).algebra,
                        witness_direct_sum(base, pad, n));
    MinimalDimensionReport rep = minimal_dimension_audit(family, n);
    c.expect(rep.biconditional,
             at("stem membership must match minimal dimension", k));
    c.expect(rep.min_dim == base.dim(), at("the base must be minimal", k));
  }
}

void check_stem_center(Ctx& c, std::mt19937_64& rng) {
  const Field f = Field::prime(3);
  for (int k = 0; k < 10; ++k) {
    LeibnizAlgebra base = k % 2 == 0 ? make_stem_a3(f) : make_b3(f, 1);
    LeibnizAlgebra other =
        change_basis(base, random_invertible(f, base.dim(), rng)).algebra;
    SearchResult r = search_isoclinism(base, other, 1);
    c.expect(r.outcome == SearchOutcome::witness,
             at("search must match a disguised copy", k));
    if (r.outcome != SearchOutcome::witness) continue;
    c.expect(upper_term(base, 1).dim() == upper_term(other, 1).dim(),
             at("matched stem algebras must have equal centre dimensions", k));
    StemCenterReport rep = stem_center_isomorphism(*r.witness);
    c.expect(rep.centers_match && rep.bijective && rep.ok,
             at("the centres of matched stem algebras must correspond", k));
  }
}

void check_frattini(Ctx& c, std::mt19937_64&) {
  const Field f = Field::prime(3);
  c.expect(frattini(make_n2(f)) == sp(f, 2, {{0, 1}}),
           "the Frattini subalgebra of N2 must be span{a2}");
  c.expect(frattini(make_a3(f)).is_zero(),
           "the Frattini subalgebra of A3 must vanish");
  c.expect(frattini(make_l5(f)) == sp(f, 4, {{0, 0, 0, 1}}),
           "the Frattini subalgebra of L5 must be span{a4}");
  c.expect(frattini(LeibnizAlgebra::abelian(f, 2)).is_zero(),
           "abelian algebras have a vanishing Frattini subalgebra");

  LeibnizAlgebra a3 = make_a3(f);
  LeibnizAlgebra s = make_stem_a3(f);
  IsoclinismWitness wq = witness_quotient(a3, sp(f, 3, {{0, 1, 0}}), 1);
  StemUniquenessReport rep =
      frattini_stem_uniqueness(a3, 1, {{s, wq}, {a3, identity_witness(a3, 1)}});
  c.expect(rep.frattini_zero, "A3 must have a vanishing Frattini subalgebra");
  c.expect(rep.stem_candidates == 1 && rep.all_confirmed,
           "the stem form of the A3 family must be unique up to isomorphism");
}

void check_oracle_center(Ctx& c, std::mt19937_64& rng) {
  const Field f = Field::prime(3);
  std::vector<LeibnizAlgebra> pool = {make_a3(f), make_n2(f), make_skew(f)};
  for (int k = 0; k < 4; ++k)
    pool.push_back(random_central_algebra(f, 2 + k % 2, rng));
  for (std::size_t k = 0; k < pool.size(); ++k) {
    const LeibnizAlgebra& a = pool[k];
    std::vector<Vector> central;
    for (const Vector& z : subspace_elements(a.full_subspace())) {
      bool ok = true;
      for (std::size_t i = 0; i < a.dim() && ok; ++i) {
        Vector b = a.lie_bracket(unit_vector(f, a.dim(), i), z);
        for (const Scalar& s : b)
          if (!s.is_zero()) ok = false;
      }
      if (ok) central.push_back(z);
    }
    c.expect(lie_center(a) == Subspace::span(f, a.dim(), central),
             at("lie_center must match the exhaustive element scan", k));
  }
}

void check_oracle_squares(Ctx& c, std::mt19937_64& rng) {
  const Field f = Field::prime(3);
  std::vector<LeibnizAlgebra> pool = {make_l5(f), make_a3(f), make_n2(f)};
  for (int k = 0; k < 4; ++k)
    pool.push_back(random_central_algebra(f, 2 + k % 2, rng));
  for (std::size_t k = 0; k < pool.size(); ++k) {
    const LeibnizAlgebra& a = pool[k];
    std::vector<Vector> squares;
    for (const Vector& x : subspace_elements(a.full_subspace()))
      squares.push_back(a.bracket(x, x));
    c.expect(ann_ideal(a) == Subspace::span(f, a.dim(), squares),
             at("ann_ideal must equal the span of all squares", k));
  }
}

void check_oracle_contains(Ctx& c, std::mt19937_64& rng) {
  const Field f = Field::prime(3);
  const std::size_t d = 3;
  std::vector<Subspace> all = all_subspaces(f, d);
  for (int k = 0; k < 40; ++k) {
    const Subspace& s = all[rng() % all.size()];
    const Subspace& t = all[rng() % all.size()];
    bool oracle = true;
    for (const Vector& v : subspace_elements(t)) {
      bool member = false;
      for (const Vector& w : subspace_elements(s))
        if (w == v) member = true;
      if (!member) oracle = false;
    }
    c.expect(s.contains(t) == oracle,
             at("contains must match element enumeration", k));
  }
}

void check_oracle_search(Ctx& c, std::mt19937_64& rng) {
  const Field f = Field::prime(3);
  std::vector<std::pair<LeibnizAlgebra, LeibnizAlgebra>> pairs;
  pairs.emplace_back(make_b3(f, 1), make_b3(f, 2));
  pairs.emplace_back(make_b3(f, 1), make_b3(f, 1));
  pairs.emplace_back(make_n2(f),
                     direct_sum(make_n2(f), LeibnizAlgebra::abelian(f, 1)).algebra);
  for (int k = 0; k < 4; ++k) {
    LeibnizAlgebra a = random_central_algebra(f, 2, rng);
    LeibnizAlgebra b = k % 2 == 0
                           ? change_basis(a, random_invertible(f, 2, rng)).algebra
                           : random_central_algebra(f, 2, rng);
    pairs.emplace_back(std::move(a), std::move(b));
  }
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& [x, y] = pairs[k];
    LevelContext cx = level_context(x, 1);
    LevelContext cy = level_context(y, 1);
    if (cx.quotient.algebra.dim() > 2 || cy.quotient.algebra.dim() > 2 ||
        cx.gamma.dim() > 2 || cy.gamma.dim() > 2)
      continue;
    SearchResult r = search_isoclinism(x, y, 1);
    bool oracle = witness_exists_brute_force(x, y, 1);
    c.expect((r.outcome == SearchOutcome::witness) == oracle,
             at("search must agree with the brute-force oracle", k));
    if (r.witness)
      c.expect(verify_witness(*r.witness).ok,
               at("found witnesses must verify", k));
  }
}

struct CheckEntry {
  const char* name;
  void (*fn)(Ctx&, std::mt19937_64&);
};

constexpr CheckEntry kChecks[] = {
    {"series-l5", check_series_l5},
    {"series-a3", check_series_a3},
    {"witness-quotient-a3", check_witness_quotient_a3},
    {"witness-equivalence", check_witness_equivalence},
    {"witness-xieta", check_witness_xieta},
    {"witness-direct-sum", check_witness_direct_sum},
    {"witness-subalgebra", check_witness_subalgebra},
    {"witness-quotient-ideals", check_witness_quotient_ideals},
    {"witness-pullback", check_witness_pullback},
    {"pair-algebra", check_pair_algebra},
    {"isoclinic-pair", check_isoclinic_pair},
    {"level-shift", check_level_shift},
    {"projection-criteria", check_projection_criteria},
    {"stem-criterion", check_stem_criterion},
    {"stem-reduction", check_stem_reduction},
    {"minimal-dimension", check_minimal_dimension},
    {"stem-center", check_stem_center},
    {"frattini", check_frattini},
    {"oracle-center", check_oracle_center},
    {"oracle-squares", check_oracle_squares},
    {"oracle-contains", check_oracle_contains},
    {"oracle-search", check_oracle_search},
};

}  // namespace

std::vector<std::string> suite_check_names() {
  std::vector<std::string> names;
  for (const CheckEntry& e : kChecks) names.emplace_back(e.name);
  return names;
}

std::vector<CheckOutcome> run_suite(std::uint64_t seed,
                                    const std::string& filter) {
  std::vector<CheckOutcome> out;
  std::uint64_t salt = 0;
  for (const CheckEntry& e : kChecks) {
    ++salt;
    if (std::string(e.name).find(filter) == std::string::npos) continue;
    Ctx ctx;
    std::mt19937_64 rng(seed ^ (salt * 0x9E3779B97F4A7C15ULL));
    try {
      e.fn(ctx, rng);
    } catch (const std::exception& ex) {
      ctx.ok = false;
      ctx.detail = std::string("unexpected exception: ") + ex.what();
    }
    CheckOutcome o;
    o.name = e.name;
    o.pass = ctx.ok;
    o.cases = ctx.cases;
    o.detail = ctx.ok ? std::to_string(ctx.cases) + " cases" : ctx.detail;
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace leibniz
