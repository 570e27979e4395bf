#include "leibniz/isoclinism.hpp"

#include <gmpxx.h>

#include <sstream>
#include <utility>

namespace leibniz {

namespace {

Vector concat(const Vector& x, const Vector& y) {
  Vector out;
  out.reserve(x.size() + y.size());
  for (const Scalar& s : x) out.push_back(s);
  for (const Scalar& s : y) out.push_back(s);
  return out;
}

// ambient image of a gamma-basis coordinate map: incl2 . xi . coords1
Vector map_through_gamma(const LevelContext& c1, const LevelContext& c2,
                         const Homomorphism& xi, const Vector& ambient1) {
  std::optional<Vector> coords = c1.gamma.coordinates(ambient1);
  if (!coords) throw Error("vector lies outside gamma_{n+1} of the source");
  return c2.gamma_res.inclusion.apply(xi.apply(*coords));
}

}  // namespace

LevelContext level_context(const LeibnizAlgebra& a, std::size_t n) {
  Subspace zn = upper_term(a, n);
  Quotient q = quotient_algebra(a, zn);
  Subspace gamma =
      lower_term(a, Subspace::full(a.field(), a.dim()), n + 1);
  Restriction gr = restrict_to(a, gamma);
  std::vector<std::size_t> comp = zn.complement_indices();
  Matrix section(a.field(), a.dim(), comp.size());
  for (std::size_t k = 0; k < comp.size(); ++k)
    section.at(comp[k], k) = Scalar::one(a.field());
  return LevelContext{a,
                      n,
                      std::move(zn),
                      std::move(q),
                      std::move(gamma),
                      std::move(gr),
                      std::move(section)};
}

Vector lie_word(const LeibnizAlgebra& a, const std::vector<Vector>& xs) {
  if (xs.empty()) throw Error("lie_word: need at least one element");
  Vector acc = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) acc = a.lie_bracket(acc, xs[i]);
  return acc;
}

WitnessReport verify_witness(const IsoclinismWitness& w) {
  WitnessReport r;
  LevelContext c1 = level_context(w.a1, w.n);
  LevelContext c2 = level_context(w.a2, w.n);
  if (!w.eta.source().same_structure(c1.quotient.algebra) ||
      !w.eta.target().same_structure(c2.quotient.algebra)) {
    r.detail = "eta is not a map between the canonical central quotients";
    return r;
  }
  if (!w.xi.source().same_structure(c1.gamma_res.algebra) ||
      !w.xi.target().same_structure(c2.gamma_res.algebra)) {
    r.detail = "xi is not a map between the gamma_{n+1} subalgebras";
    return r;
  }
  r.shapes_ok = true;
  r.eta_isomorphism = is_isomorphism(w.eta);
  r.xi_bijective = w.xi.is_bijective();
  r.xi_multiplicative = analyze_homomorphism(w.xi).is_homomorphism;

  const std::size_t dq = c1.quotient.algebra.dim();
  std::vector<Vector> lifts1, lifts2;
  lifts1.reserve(dq);
  lifts2.reserve(dq);
  for (std::size_t k = 0; k < dq; ++k) {
    lifts1.push_back(c1.section.col(k));
    lifts2.push_back(c2.section.apply(
        w.eta.apply(unit_vector(w.a1.field(), dq, k))));
  }
  std::vector<std::size_t> tuple(w.n + 1, 0);
  r.diagram_commutes = true;
  // shared-prefix walk over all (n+1)-tuples of quotient basis vectors
  auto rec = [&](auto&& self, std::size_t depth, const Vector& v1,
                 const Vector& v2) -> bool {
    if (depth == w.n + 1) {
      std::optional<Vector> g1 = c1.gamma.coordinates(v1);
      if (!g1) {
        r.detail = "word value escaped gamma_{n+1} of the first algebra";
        return false;
      }
      Vector mapped = c2.gamma_res.inclusion.apply(w.xi.apply(*g1));
      if (mapped == v2) return true;
      std::ostringstream os;
      os << "diagram breaks: xi(word) = " << vector_str(mapped)
         << " but the image word is " << vector_str(v2);
      r.detail = os.str();
      return false;
    }
    for (std::size_t k = 0; k < dq; ++k) {
      tuple[depth] = k;
      Vector n1 = depth == 0 ? lifts1[k] : w.a1.lie_bracket(v1, lifts1[k]);
      Vector n2 = depth == 0 ? lifts2[k] : w.a2.lie_bracket(v2, lifts2[k]);
      if (!self(self, depth + 1, n1, n2)) return false;
    }
    return true;
  };
  if (!rec(rec, 0, zero_vector(w.a1.field(), w.a1.dim()),
           zero_vector(w.a2.field(), w.a2.dim()))) {
    r.diagram_commutes = false;
    r.failing_tuple = tuple;
  }
  r.ok = r.eta_isomorphism && r.xi_bijective && r.diagram_commutes;
  return r;
}

std::optional<Homomorphism> derive_xi(const LeibnizAlgebra& a1,
                                      const LeibnizAlgebra& a2,
                                      const Homomorphism& eta, std::size_t n) {
  LevelContext c1 = level_context(a1, n);
  LevelContext c2 = level_context(a2, n);
  if (!eta.source().same_structure(c1.quotient.algebra) ||
      !eta.target().same_structure(c2.quotient.algebra))
    throw Error("derive_xi: eta is not a map between the canonical quotients");
  const std::size_t dq = c1.quotient.algebra.dim();
  const std::size_t g1d = c1.gamma.dim(), g2d = c2.gamma.dim();
  std::vector<Vector> lifts1, lifts2;
  for (std::size_t k = 0; k < dq; ++k) {
    lifts1.push_back(c1.section.col(k));
    lifts2.push_back(
        c2.section.apply(eta.apply(unit_vector(a1.field(), dq, k))));
  }
  std::vector<Vector> rows;
  auto rec = [&](auto&& self, std::size_t depth, const Vector& v1,
                 const Vector& v2) -> void {
    if (depth == n + 1) {
      std::optional<Vector> co1 = c1.gamma.coordinates(v1);
      std::optional<Vector> co2 = c2.gamma.coordinates(v2);
      if (!co1 || !co2)
        throw Error("derive_xi: word value escaped gamma_{n+1}");
      rows.push_back(concat(*co1, *co2));
      return;
    }
    for (std::size_t k = 0; k < dq; ++k) {
      Vector n1 = depth == 0 ? lifts1[k] : a1.lie_bracket(v1, lifts1[k]);
      Vector n2 = depth == 0 ? lifts2[k] : a2.lie_bracket(v2, lifts2[k]);
      self(self, depth + 1, n1, n2);
    }
  };
  rec(rec, 0, zero_vector(a1.field(), a1.dim()),
      zero_vector(a2.field(), a2.dim()));
  const Field& f = a1.field();
  auto [r, pivots] = Matrix::from_rows(f, g1d + g2d, rows).rref();
  for (std::size_t p : pivots)
    if (p >= g1d) return std::nullopt;  // one C1 value, two images: ill defined
  if (g1d != g2d) return std::nullopt;  // no bijection can exist
  // Each reduced row (u | w) pins xi(u) = w on the span of the C1 values.
  // For n >= 2 that span can be proper, in which case the diagram leaves
  // xi free on a complement; any bijective completion verifies, so complete
  // canonically: match the RREF complements of the two value spans.
  const std::size_t rank = pivots.size();
  std::vector<Vector> images;
  for (std::size_t i = 0; i < rank; ++i) {
    Vector w;
    for (std::size_t j = 0; j < g2d; ++j) w.push_back(r.at(i, g1d + j));
    images.push_back(std::move(w));
  }
  Subspace value_span2 = Subspace::span(f, g2d, images);
  if (value_span2.dim() != rank)
    return std::nullopt;  // distinct C1 values share an image: not injective
  Matrix basis(f, g1d, g1d);   // columns: pinned value span, then complement
  Matrix target(f, g2d, g1d);  // columns: their required images
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < g1d; ++j) {
      basis.at(j, i) = r.at(i, j);
      target.at(j, i) = images[i][j];
    }
  std::vector<std::size_t> free1, free2;
  for (std::size_t j = 0, p = 0; j < g1d; ++j)
    if (p < rank && pivots[p] == j)
      ++p;
    else
      free1.push_back(j);
  free2 = value_span2.complement_indices();
  for (std::size_t i = 0; i < free1.size(); ++i) {
    basis.at(free1[i], rank + i) = Scalar::one(f);
    target.at(free2[i], rank + i) = Scalar::one(f);
  }
  Matrix xi = target * basis.inverse().value();
  return Homomorphism(c1.gamma_res.algebra, c2.gamma_res.algebra, std::move(xi));
}

Subspace xi_image_ambient(const IsoclinismWitness& w, const Subspace& s) {
  LevelContext c1 = level_context(w.a1, w.n);
  LevelContext c2 = level_context(w.a2, w.n);
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < s.dim(); ++r)
    rows.push_back(map_through_gamma(c1, c2, w.xi, s.basis().row(r)));
  return Subspace::span(w.a2.field(), w.a2.dim(), rows);
}

namespace {

// constructors promise verifying witnesses; failure is an internal defect
IsoclinismWitness checked(IsoclinismWitness w, const char* who) {
  WitnessReport r = verify_witness(w);
  if (!r.ok)
    throw Error(std::string(who) + ": constructed witness failed verification: " +
                r.detail);
  return w;
}

}  // namespace

IsoclinismWitness identity_witness(const LeibnizAlgebra& a, std::size_t n) {
  LevelContext c = level_context(a, n);
  return checked(IsoclinismWitness{n, a, a,
                                   Homomorphism::identity(c.quotient.algebra),
                                   Homomorphism::identity(c.gamma_res.algebra)},
                 "identity_witness");
}

IsoclinismWitness invert_witness(const IsoclinismWitness& w) {
  WitnessReport r = verify_witness(w);
  if (!r.ok) throw Error("invert_witness: input fails verification: " + r.detail);
  return checked(IsoclinismWitness{w.n, w.a2, w.a1, invert(w.eta), invert(w.xi)},
                 "invert_witness");
}

IsoclinismWitness compose_witness(const IsoclinismWitness& w1,
                                  const IsoclinismWitness& w2) {
  if (w1.n != w2.n) throw Error("compose_witness: levels differ");
  if (!w1.a2.same_structure(w2.a1))
    throw Error("compose_witness: middle algebras do not match");
  WitnessReport r1 = verify_witness(w1);
  if (!r1.ok) throw Error("compose_witness: first input fails verification");
  WitnessReport r2 = verify_witness(w2);
  if (!r2.ok) throw Error("compose_witness: second input fails verification");
  return checked(IsoclinismWitness{w1.n, w1.a1, w2.a2,
                                   compose(w2.eta, w1.eta),
                                   compose(w2.xi, w1.xi)},
                 "compose_witness");
}

IsoclinismWitness witness_from_isomorphism(const Homomorphism& phi,
                                           std::size_t n) {
  if (!is_isomorphism(phi))
    throw Error("witness_from_isomorphism: map is not an algebra isomorphism");
  LevelContext c1 = level_context(phi.source(), n);
  LevelContext c2 = level_context(phi.target(), n);
  if (!(phi.apply(c1.zn) == c2.zn))
    throw Error("witness_from_isomorphism: isomorphism does not match the upper terms");
  std::vector<Vector> eta_cols, xi_cols;
  for (std::size_t k = 0; k < c1.quotient.algebra.dim(); ++k)
    eta_cols.push_back(
        c2.quotient.projection.apply(phi.apply(c1.section.col(k))));
  for (std::size_t r = 0; r < c1.gamma.dim(); ++r) {
    std::optional<Vector> co =
        c2.gamma.coordinates(phi.apply(c1.gamma_res.inclusion.matrix().col(r)));
    if (!co) throw Error("witness_from_isomorphism: image escaped gamma_{n+1}");
    xi_cols.push_back(std::move(*co));
  }
  return checked(
      IsoclinismWitness{
          n, phi.source(), phi.target(),
          Homomorphism::from_images(c1.quotient.algebra, c2.quotient.algebra,
                                    eta_cols),
          Homomorphism::from_images(c1.gamma_res.algebra, c2.gamma_res.algebra,
                                    xi_cols)},
      "witness_from_isomorphism");
}

IsoclinismWitness witness_direct_sum(const LeibnizAlgebra& a,
                                     const LeibnizAlgebra& nalg, std::size_t n) {
  std::optional<std::size_t> cls =
      nilpotency_class(nalg, Subspace::full(nalg.field(), nalg.dim()));
  if (!cls || *cls > n)
    throw Error("witness_direct_sum: summand is not Lie-nilpotent of class at most n");
  DirectSum s = direct_sum(a, nalg);
  LevelContext c1 = level_context(a, n);
  LevelContext cs = level_context(s.algebra, n);
  std::vector<Vector> eta_cols, xi_cols;
  for (std::size_t k = 0; k < c1.quotient.algebra.dim(); ++k)
    eta_cols.push_back(
        cs.quotient.projection.apply(s.inj1.apply(c1.section.col(k))));
  for (std::size_t r = 0; r < c1.gamma.dim(); ++r) {
    std::optional<Vector> co = cs.gamma.coordinates(
        s.inj1.apply(c1.gamma_res.inclusion.matrix().col(r)));
    if (!co) throw Error("witness_direct_sum: gamma image escaped");
    xi_cols.push_back(std::move(*co));
  }
  return checked(
      IsoclinismWitness{
          n, a, s.algebra,
          Homomorphism::from_images(c1.quotient.algebra, cs.quotient.algebra,
                                    eta_cols),
          Homomorphism::from_images(c1.gamma_res.algebra, cs.gamma_res.algebra,
                                    xi_cols)},
      "witness_direct_sum");
}

IsoclinismWitness witness_subalgebra(const LeibnizAlgebra& g, const Subspace& h,
                                     std::size_t n) {
  if (n == 0) throw Error("witness_subalgebra: level must be at least 1");
  Restriction hr = restrict_to(g, h);
  const LeibnizAlgebra& ha = hr.algebra;
  const Field& f = g.field();
  Subspace full_h = Subspace::full(f, ha.dim());
  Subspace zprev = upper_term(ha, n - 1);
  Subspace gam_h = lower_term(ha, full_h, n + 1);
  for (std::size_t r = 0; r < zprev.dim(); ++r) {
    for (std::size_t i = 0; i < ha.dim(); ++i) {
      Vector v = ha.lie_bracket(zprev.basis().row(r),
                                unit_vector(f, ha.dim(), i));
      if (!gam_h.contains(v)) {
        std::ostringstream os;
        os << "witness_subalgebra: hypothesis fails: the lie bracket of the "
           << "centre element " << vector_str(zprev.basis().row(r))
           << " with basis vector " << i << " equals " << vector_str(v)
           << ", outside gamma_{n+1} of the subalgebra";
        throw Error(os.str());
      }
    }
  }
  Subspace h1 = sum(h, upper_term(g, n));
  Restriction h1r = restrict_to(g, h1);
  LevelContext ch = level_context(ha, n);
  LevelContext ch1 = level_context(h1r.algebra, n);
  auto to_h1 = [&](const Vector& hcoords) {
    std::optional<Vector> co = h1.coordinates(hr.inclusion.apply(hcoords));
    if (!co) throw Error("witness_subalgebra: element escaped h + Z_n(g)");
    return *co;
  };
  std::vector<Vector> eta_cols, xi_cols;
  for (std::size_t k = 0; k < ch.quotient.algebra.dim(); ++k)
    eta_cols.push_back(
        ch1.quotient.projection.apply(to_h1(ch.section.col(k))));
  for (std::size_t r = 0; r < ch.gamma.dim(); ++r) {
    std::optional<Vector> co = ch1.gamma.coordinates(
        to_h1(ch.gamma_res.inclusion.matrix().col(r)));
    if (!co)
      throw Error("witness_subalgebra: gamma of h does not embed in gamma of h1");
    xi_cols.push_back(std::move(*co));
  }
  return checked(
      IsoclinismWitness{
          n, ha, h1r.algebra,
          Homomorphism::from_images(ch.quotient.algebra, ch1.quotient.algebra,
                                    eta_cols),
          Homomorphism::from_images(ch.gamma_res.algebra, ch1.gamma_res.algebra,
                                    xi_cols)},
      "witness_subalgebra");
}

IsoclinismWitness witness_quotient(const LeibnizAlgebra& a, const Subspace& ideal,
                                   std::size_t n) {
  if (!classify_subspace(a, ideal).two_sided_ideal)
    throw Error("witness_quotient: subspace is not a two-sided ideal");
  const Field& f = a.field();
  Subspace gam = lower_term(a, Subspace::full(f, a.dim()), n + 1);
  Subspace j = intersect(ideal, gam);
  Quotient qi = quotient_algebra(a, ideal);  // a2
  Quotient qj = quotient_algebra(a, j);      // a1
  // the collapse a/j -> a/i
  std::vector<std::size_t> comp_j = j.complement_indices();
  std::vector<Vector> s_cols;
  for (std::size_t k = 0; k < qj.algebra.dim(); ++k)
    s_cols.push_back(
        qi.projection.apply(unit_vector(f, a.dim(), comp_j[k])));
  Homomorphism s = Homomorphism::from_images(qj.algebra, qi.algebra, s_cols);
  if (!analyze_homomorphism(s).is_homomorphism || !s.is_surjective())
    throw Error("witness_quotient: collapse map failed verification");
  LevelContext cb = level_context(qj.algebra, n);
  LevelContext cc = level_context(qi.algebra, n);
  std::vector<Vector> eta_cols, xi_cols;
  for (std::size_t k = 0; k < cb.quotient.algebra.dim(); ++k)
    eta_cols.push_back(
        cc.quotient.projection.apply(s.apply(cb.section.col(k))));
  for (std::size_t r = 0; r < cb.gamma.dim(); ++r) {
    std::optional<Vector> co = cc.gamma.coordinates(
        s.apply(cb.gamma_res.inclusion.matrix().col(r)));
    if (!co) throw Error("witness_quotient: gamma image escaped");
    xi_cols.push_back(std::move(*co));
  }
  Homomorphism eta_fwd = Homomorphism::from_images(
      cb.quotient.algebra, cc.quotient.algebra, eta_cols);
  Homomorphism xi_fwd = Homomorphism::from_images(
      cb.gamma_res.algebra, cc.gamma_res.algebra, xi_cols);
  if (!is_isomorphism(eta_fwd))
    throw Error("witness_quotient: induced quotient map is not an isomorphism");
  if (!xi_fwd.is_bijective())
    throw Error("witness_quotient: induced gamma map is not bijective");
  return checked(
      IsoclinismWitness{n, qj.algebra, qi.algebra, eta_fwd, xi_fwd},
      "witness_quotient");
}

IsoclinismWitness witness_pullback(const LeibnizAlgebra& a1,
                                   const LeibnizAlgebra& a2,
                                   const Homomorphism& eta, const Homomorphism& xi,
                                   std::size_t n) {
  IsoclinismWitness input{n, a1, a2, eta, xi};
  WitnessReport vr = verify_witness(input);
  if (!vr.ok)
    throw Error("witness_pullback: input witness invalid: " + vr.detail);
  PullbackData pd = pullback_data(a1, a2, eta, n);
  const LeibnizAlgebra& t = pd.total.algebra;
  LevelContext c1 = level_context(a1, n);
  LevelContext c2 = level_context(a2, n);
  LevelContext ct = level_context(t, n);
  const std::size_t dq = c1.quotient.algebra.dim();
  std::vector<Vector> eta_cols, xi_cols;
  for (std::size_t k = 0; k < dq; ++k) {
    Vector amb2 = c2.section.apply(eta.apply(unit_vector(a1.field(), dq, k)));
    Vector v = concat(amb2, unit_vector(a1.field(), dq, k));
    std::optional<Vector> tc = pd.t.coordinates(v);
    if (!tc) throw Error("witness_pullback: lift missed the pullback algebra");
    eta_cols.push_back(ct.quotient.projection.apply(*tc));
  }
  for (std::size_t r = 0; r < c1.gamma.dim(); ++r) {
    Vector gamb = c1.gamma_res.inclusion.matrix().col(r);
    Vector w2 = map_through_gamma(c1, c2, xi, gamb);
    Vector v = concat(w2, c1.quotient.projection.apply(gamb));
    std::optional<Vector> tc = pd.t.coordinates(v);
    if (!tc)
      throw Error("witness_pullback: gamma image missed the pullback algebra");
    std::optional<Vector> co = ct.gamma.coordinates(*tc);
    if (!co) throw Error("witness_pullback: image escaped gamma of the pullback");
    xi_cols.push_back(std::move(*co));
  }
  return checked(
      IsoclinismWitness{
          n, a1, t,
          Homomorphism::from_images(c1.quotient.algebra, ct.quotient.algebra,
                                    eta_cols),
          Homomorphism::from_images(c1.gamma_res.algebra, ct.gamma_res.algebra,
                                    xi_cols)},
      "witness_pullback");
}

Fingerprint fingerprint(const LeibnizAlgebra& a, std::size_t n) {
  LevelContext c = level_context(a, n);
  Fingerprint fp;
  fp.n = n;
  fp.dim_quotient = c.quotient.algebra.dim();
  fp.dim_gamma = c.gamma.dim();
  const LeibnizAlgebra& q = c.quotient.algebra;
  for (const Subspace& s :
       lower_lie_series(q, Subspace::full(q.field(), q.dim())))
    fp.quotient_series_dims.push_back(s.dim());
  for (const Subspace& s : upper_lie_series(q))
    fp.upper_series_dims_of_quotient.push_back(s.dim());
  fp.dim_center_cap_gamma = intersect(c.zn, c.gamma).dim();
  return fp;
}

SearchResult search_isoclinism(const LeibnizAlgebra& a1, const LeibnizAlgebra& a2,
                               std::size_t n, unsigned long long budget) {
  if (!(a1.field() == a2.field()))
    throw Error("search_isoclinism: algebras live over different fields");
  if (!a1.field().is_prime_field())
    throw Error("search_isoclinism: needs a prime field (the rationals are not enumerable)");
  if (budget == 0) throw Error("search_isoclinism: budget must be positive");
  if (!(fingerprint(a1, n) == fingerprint(a2, n)))
    return SearchResult{SearchOutcome::refuted_by_fingerprint, std::nullopt, 0};
  LevelContext c1 = level_context(a1, n);
  LevelContext c2 = level_context(a2, n);
  const std::size_t dq = c1.quotient.algebra.dim();
  const mpz_class p = a1.field().modulus();
  std::vector<mpz_class> digits(dq * dq, 0);
  unsigned long long candidates = 0;
  for (;;) {
    if (candidates == budget)
      return SearchResult{SearchOutcome::exhausted, std::nullopt, candidates};
    ++candidates;
    Matrix e(a1.field(), dq, dq);
    for (std::size_t i = 0; i < dq; ++i)
      for (std::size_t j = 0; j < dq; ++j)
        e.at(i, j) = Scalar::of_mpq(a1.field(), mpq_class(digits[i * dq + j]));
    Homomorphism eta(c1.quotient.algebra, c2.quotient.algebra, std::move(e));
    if (is_isomorphism(eta)) {
      std::optional<Homomorphism> xi = derive_xi(a1, a2, eta, n);
      if (xi && xi->is_bijective()) {
        IsoclinismWitness w{n, a1, a2, std::move(eta), std::move(*xi)};
        if (verify_witness(w).ok)
          return SearchResult{SearchOutcome::witness, std::move(w), candidates};
      }
    }
    // advance the row-major odometer (ascending lexicographic order)
    bool advanced = false;
    for (std::size_t i = digits.size(); i-- > 0;) {
      digits[i] += 1;
      if (digits[i] < p) {
        advanced = true;
        break;
      }
      digits[i] = 0;
    }
    if (!advanced)
      return SearchResult{SearchOutcome::none, std::nullopt, candidates};
  }
}

IsoclinicHomReport check_isoclinic_homomorphism(const Homomorphism& alpha,
                                                const Homomorphism& beta,
                                                const Homomorphism& gamma,
                                                std::size_t n) {
  const LeibnizAlgebra& g1 = beta.source();
  const LeibnizAlgebra& g2 = beta.target();
  if (!analyze_homomorphism(beta).is_homomorphism)
    throw Error("extension triple: beta is not an algebra homomorphism");
  LevelContext c1 = level_context(g1, n);
  LevelContext c2 = level_context(g2, n);
  Restriction z1 = restrict_to(g1, c1.zn);
  Restriction z2 = restrict_to(g2, c2.zn);
  if (!alpha.source().same_structure(z1.algebra) ||
      !alpha.target().same_structure(z2.algebra))
    throw Error("extension triple: alpha is not a map between the n-th upper terms");
  for (std::size_t r = 0; r < c1.zn.dim(); ++r) {
    Vector via_alpha = z2.inclusion.apply(
        alpha.apply(unit_vector(g1.field(), c1.zn.dim(), r)));
    Vector via_beta = beta.apply(z1.inclusion.matrix().col(r));
    if (!(via_alpha == via_beta))
      throw Error("extension triple: alpha is not the restriction of beta");
  }
  if (!gamma.source().same_structure(c1.quotient.algebra) ||
      !gamma.target().same_structure(c2.quotient.algebra))
    throw Error("extension triple: gamma is not a map between the quotients");
  for (std::size_t k = 0; k < g1.dim(); ++k) {
    Vector e = unit_vector(g1.field(), g1.dim(), k);
    if (!(gamma.apply(c1.quotient.projection.apply(e)) ==
          c2.quotient.projection.apply(beta.apply(e))))
      throw Error("extension triple: gamma is not induced by beta");
  }
  IsoclinicHomReport report;
  report.gamma_isomorphism = is_isomorphism(gamma);
  report.kernel_condition = intersect(beta.kernel(), c1.gamma).is_zero();
  report.isoclinic = report.gamma_isomorphism && report.kernel_condition;
  if (report.isoclinic) {
    std::vector<Vector> xi_cols;
    for (std::size_t r = 0; r < c1.gamma.dim(); ++r) {
      std::optional<Vector> co = c2.gamma.coordinates(
          beta.apply(c1.gamma_res.inclusion.matrix().col(r)));
      if (!co)
        throw Error("extension triple: beta failed to map gamma into gamma");
      xi_cols.push_back(std::move(*co));
    }
    report.witness = checked(
        IsoclinismWitness{n, g1, g2, gamma,
                          Homomorphism::from_images(c1.gamma_res.algebra,
                                                    c2.gamma_res.algebra,
                                                    xi_cols)},
        "check_isoclinic_homomorphism");
  }
  return report;
}

InducedReport induced_isoclinic(const Homomorphism& beta, std::size_t n) {
  if (!analyze_homomorphism(beta).is_homomorphism)
    throw Error("induced_isoclinic: beta is not an algebra homomorphism");
  const LeibnizAlgebra& g1 = beta.source();
  const LeibnizAlgebra& g2 = beta.target();
  LevelContext c1 = level_context(g1, n);
  LevelContext c2 = level_context(g2, n);
  InducedReport report;
  report.kernel_condition = intersect(beta.kernel(), c1.gamma).is_zero();
  report.image_condition = sum(beta.image(), c2.zn).dim() == g2.dim();
  report.induces = report.kernel_condition && report.image_condition;
  if (!report.induces) return report;
  Restriction z1 = restrict_to(g1, c1.zn);
  Restriction z2 = restrict_to(g2, c2.zn);
  std::vector<Vector> alpha_cols, gamma_cols;
  for (std::size_t r = 0; r < c1.zn.dim(); ++r) {
    std::optional<Vector> co =
        c2.zn.coordinates(beta.apply(z1.inclusion.matrix().col(r)));
    if (!co)
      throw Error("induced_isoclinic: beta failed to map Z_n into Z_n");
    alpha_cols.push_back(std::move(*co));
  }
  for (std::size_t k = 0; k < c1.quotient.algebra.dim(); ++k)
    gamma_cols.push_back(
        c2.quotient.projection.apply(beta.apply(c1.section.col(k))));
  Homomorphism alpha =
      Homomorphism::from_images(z1.algebra, z2.algebra, alpha_cols);
  Homomorphism gamma = Homomorphism::from_images(
      c1.quotient.algebra, c2.quotient.algebra, gamma_cols);
  IsoclinicHomReport cross = check_isoclinic_homomorphism(alpha, beta, gamma, n);
  if (!cross.isoclinic)
    throw Error("induced_isoclinic: cross-check rejected the induced triple");
  report.witness = std::move(cross.witness);
  return report;
}

XietaReport verify_xieta(const IsoclinismWitness& w) {
  XietaReport r;
  WitnessReport vr = verify_witness(w);
  r.witness_ok = vr.ok;
  if (!vr.shapes_ok) return r;
  LevelContext c1 = level_context(w.a1, w.n);
  LevelContext c2 = level_context(w.a2, w.n);
  auto xi_amb = [&](const Vector& v) {
    return map_through_gamma(c1, c2, w.xi, v);
  };
  // a) the coset identity on gamma basis vectors
  r.coset_identity = true;
  for (std::size_t i = 0; i < c1.gamma.dim(); ++i) {
    Vector g = c1.gamma_res.inclusion.matrix().col(i);
    if (!(c2.quotient.projection.apply(xi_amb(g)) ==
          w.eta.apply(c1.quotient.projection.apply(g)))) {
      r.coset_identity = false;
      break;
    }
  }
  // b) xi maps Z_n n gamma onto Z_n n gamma
  Subspace cap1 = intersect(c1.zn, c1.gamma);
  std::vector<Vector> image_rows;
  for (std::size_t i = 0; i < cap1.dim(); ++i)
    image_rows.push_back(xi_amb(cap1.basis().row(i)));
  r.center_gamma_preserved =
      Subspace::span(w.a2.field(), w.a2.dim(), image_rows) ==
      intersect(c2.zn, c2.gamma);
  // c) the mixed identity on gamma basis n-tuples and one quotient slot
  const std::size_t gd = c1.gamma.dim();
  const std::size_t dq = c1.quotient.algebra.dim();
  r.mixed_identity = true;
  if (w.n > 0 && gd == 0) {  // no nonzero gamma entries: the identity is vacuous
    r.ok = r.witness_ok && r.coset_identity && r.center_gamma_preserved;
    return r;
  }
  std::vector<std::size_t> idx(w.n, 0);
  for (;;) {
    for (std::size_t k = 0; k < dq && r.mixed_identity; ++k) {
      std::vector<Vector> xs1, xs2;
      for (std::size_t t = 0; t < w.n; ++t) {
        Vector x = c1.gamma_res.inclusion.matrix().col(idx[t]);
        xs1.push_back(x);
        xs2.push_back(xi_amb(x));
      }
      xs1.push_back(c1.section.col(k));
      xs2.push_back(c2.section.apply(
          w.eta.apply(unit_vector(w.a1.field(), dq, k))));
      if (!(xi_amb(lie_word(w.a1, xs1)) == lie_word(w.a2, xs2)))
        r.mixed_identity = false;
    }
    if (!r.mixed_identity) break;
    bool advanced = false;
    for (std::size_t t = idx.size(); t-- > 0;) {
      if (++idx[t] < gd) {
        advanced = true;
        break;
      }
      idx[t] = 0;
    }
    if (!advanced) break;
  }
  r.ok = r.witness_ok && r.coset_identity && r.center_gamma_preserved &&
         r.mixed_identity;
  return r;
}

}  // namespace leibniz
