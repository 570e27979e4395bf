#include "leibniz/constructions.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "leibniz/isoclinism.hpp"

namespace leibniz {

namespace {

// concatenated coordinates (x, y) in a direct-sum ambient
Vector pair_vector(const Field& f, const Vector& x, const Vector& y) {
  Vector out;
  out.reserve(x.size() + y.size());
  for (const Scalar& s : x) out.push_back(s);
  for (const Scalar& s : y) out.push_back(s);
  (void)f;
  return out;
}

void verify_extension(const CentralExtension& e) {
  if (!classify_subspace(e.total, e.kernel).two_sided_ideal)
    throw Error("central extension: kernel is not a two-sided ideal");
  if (!upper_term(e.total, e.level).contains(e.kernel))
    throw Error("central extension: kernel is not inside the n-th upper term");
  if (!lower_term(e.total, e.kernel, e.level + 1).is_zero())
    throw Error("central extension: gamma_{n+1}(total, kernel) is nonzero");
  HomReport p = analyze_homomorphism(e.projection);
  if (!p.is_homomorphism || !e.projection.is_surjective() || !(p.kernel == e.kernel))
    throw Error("central extension: projection is not a surjection with the stated kernel");
}

}  // namespace

Quotient quotient_algebra(const LeibnizAlgebra& a, const Subspace& ideal) {
  if (ideal.ambient() != a.dim()) throw Error("quotient: ambient mismatch");
  if (!classify_subspace(a, ideal).two_sided_ideal)
    throw Error("quotient: subspace is not a two-sided ideal");
  const std::vector<std::size_t> comp = ideal.complement_indices();
  const std::size_t m = comp.size();
  auto project = [&](const Vector& v) {
    Vector w = ideal.reduce(v);
    Vector out;
    out.reserve(m);
    for (std::size_t k = 0; k < m; ++k) out.push_back(w[comp[k]]);
    return out;
  };
  std::vector<std::string> names;
  names.reserve(m);
  for (std::size_t k = 0; k < m; ++k) names.push_back(a.names()[comp[k]]);
  std::vector<std::vector<Vector>> sc(m, std::vector<Vector>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      sc[i][j] = project(a.sc(comp[i], comp[j]));
  LeibnizAlgebra q(a.field(), m, std::move(names), std::move(sc));
  std::vector<Vector> images;
  images.reserve(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j)
    images.push_back(project(unit_vector(a.field(), a.dim(), j)));
  Homomorphism proj = Homomorphism::from_images(a, q, images);
  HomReport report = analyze_homomorphism(proj);
  if (!report.is_homomorphism || !proj.is_surjective() || !(report.kernel == ideal))
    throw Error("quotient: projection failed verification");
  return Quotient{std::move(q), std::move(proj)};
}

DirectSum direct_sum(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
  if (!(a.field() == b.field())) throw Error("direct_sum: field mismatch");
  const Field& f = a.field();
  const std::size_t da = a.dim(), db = b.dim(), d = da + db;
  std::vector<std::string> names = a.names();
  for (std::string name : b.names()) {
    while (std::find(names.begin(), names.end(), name) != names.end())
      name += "'";
    names.push_back(name);
  }
  std::vector<std::vector<Vector>> sc(d, std::vector<Vector>(d, zero_vector(f, d)));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < da; ++k) sc[i][j][k] = a.sc(i, j)[k];
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < db; ++k) sc[da + i][da + j][da + k] = b.sc(i, j)[k];
  LeibnizAlgebra sum(f, d, std::move(names), std::move(sc));
  Matrix m1(f, d, da), m2(f, d, db);
  for (std::size_t i = 0; i < da; ++i) m1.at(i, i) = Scalar::one(f);
  for (std::size_t i = 0; i < db; ++i) m2.at(da + i, i) = Scalar::one(f);
  Homomorphism inj1(a, sum, std::move(m1));
  Homomorphism inj2(b, sum, std::move(m2));
  return DirectSum{std::move(sum), std::move(inj1), std::move(inj2)};
}

Restriction restrict_to(const LeibnizAlgebra& a, const Subspace& h) {
  if (h.ambient() != a.dim()) throw Error("restriction: ambient mismatch");
  const std::size_t m = h.dim();
  std::vector<std::string> names;
  names.reserve(m);
  for (std::size_t r = 0; r < m; ++r) {
    const Vector row = h.basis().row(r);
    std::optional<std::size_t> unit;
    bool is_unit = true;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k].is_zero()) continue;
      if (unit || !(row[k] == Scalar::one(a.field()))) {
        is_unit = false;
        break;
      }
      unit = k;
    }
    if (is_unit && unit)
      names.push_back(a.names()[*unit]);
    else
      names.push_back("h" + std::to_string(r + 1));
  }
  std::vector<std::vector<Vector>> sc(m, std::vector<Vector>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Vector br = a.bracket(h.basis().row(i), h.basis().row(j));
      std::optional<Vector> coords = h.coordinates(br);
      if (!coords) {
        std::ostringstream os;
        os << "restriction: subspace is not closed under the bracket: "
           << "[basis " << i << ", basis " << j << "] = " << vector_str(br)
           << " escapes";
        throw Error(os.str());
      }
      sc[i][j] = std::move(*coords);
    }
  }
  LeibnizAlgebra sub(a.field(), m, std::move(names), std::move(sc));
  Matrix incl(a.field(), a.dim(), m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k < a.dim(); ++k) incl.at(k, r) = h.basis().at(r, k);
  Homomorphism inclusion(sub, a, std::move(incl));
  return Restriction{std::move(sub), std::move(inclusion)};
}

LeibnizAlgebra restriction(const LeibnizAlgebra& a, const Subspace& h) {
  return restrict_to(a, h).algebra;
}

Quotient liezation(const LeibnizAlgebra& a) {
  Quotient q = quotient_algebra(a, ann_ideal(a));
  const LeibnizAlgebra& l = q.algebra;
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j)
      if (!is_zero(add(l.sc(i, j), l.sc(j, i))))
        throw Error("liezation: quotient is not antisymmetric");
  return q;
}

CentralExtension n_central_extension(const LeibnizAlgebra& a, std::size_t n) {
  Subspace kernel = upper_term(a, n);
  Quotient q = quotient_algebra(a, kernel);
  CentralExtension e{a, std::move(kernel), std::move(q.algebra),
                     std::move(q.projection), n};
  verify_extension(e);
  return e;
}

namespace {

// common entry validation for eta: A1/Z_n -> A2/Z_n
struct QuotientPair {
  Subspace z1, z2;
  Quotient q1, q2;
};

QuotientPair quotient_pair(const LeibnizAlgebra& a1, const LeibnizAlgebra& a2,
                           const Homomorphism& eta, std::size_t n) {
  Subspace z1 = upper_term(a1, n);
  Subspace z2 = upper_term(a2, n);
  Quotient q1 = quotient_algebra(a1, z1);
  Quotient q2 = quotient_algebra(a2, z2);
  if (!eta.source().same_structure(q1.algebra) ||
      !eta.target().same_structure(q2.algebra))
    throw Error("eta is not a map between the canonical n-th central quotients");
  if (!is_isomorphism(eta))
    throw Error("eta is not an algebra isomorphism of the n-th central quotients");
  return QuotientPair{std::move(z1), std::move(z2), std::move(q1), std::move(q2)};
}

}  // namespace

PullbackData pullback_data(const LeibnizAlgebra& a1, const LeibnizAlgebra& a2,
                           const Homomorphism& eta, std::size_t n) {
  QuotientPair qp = quotient_pair(a1, a2, eta, n);
  const Field& f = a1.field();
  DirectSum sum = direct_sum(a2, qp.q1.algebra);
  const std::size_t d2 = a2.dim(), dq1 = qp.q1.algebra.dim();
  // (g, xbar) lies in the pullback iff p2(g) - eta(xbar) = 0
  Matrix cond(f, qp.q2.algebra.dim(), d2 + dq1);
  for (std::size_t i = 0; i < qp.q2.algebra.dim(); ++i) {
    for (std::size_t j = 0; j < d2; ++j)
      cond.at(i, j) = qp.q2.projection.matrix().at(i, j);
    for (std::size_t j = 0; j < dq1; ++j)
      cond.at(i, d2 + j) = -eta.matrix().at(i, j);
  }
  Subspace t = Subspace::span(f, d2 + dq1, cond.kernel().row_list());
  Restriction total = restrict_to(sum.algebra, t);
  if (total.algebra.dim() != d2)
    throw Error("pullback: total dimension does not match the second algebra");
  // extension kernel: the embedded copy of Z_n(a2)
  std::vector<Vector> krows;
  for (std::size_t r = 0; r < qp.z2.dim(); ++r) {
    Vector zv = pair_vector(f, qp.z2.basis().row(r), zero_vector(f, dq1));
    std::optional<Vector> coords = t.coordinates(zv);
    if (!coords) throw Error("pullback: central element missed the total space");
    krows.push_back(std::move(*coords));
  }
  Subspace kernel = Subspace::span(f, total.algebra.dim(), krows);
  Quotient q = quotient_algebra(total.algebra, kernel);
  // the first coordinate is an isomorphism onto a2
  std::vector<Vector> fc;
  for (std::size_t r = 0; r < total.algebra.dim(); ++r) {
    Vector col = total.inclusion.matrix().col(r);
    fc.push_back(Vector(col.begin(), col.begin() + d2));
  }
  if (!is_isomorphism(Homomorphism::from_images(total.algebra, a2, fc)))
    throw Error("pullback: total is not isomorphic to the second algebra");
  CentralExtension e{total.algebra, std::move(kernel), std::move(q.algebra),
                     std::move(q.projection), n};
  verify_extension(e);
  return PullbackData{std::move(sum.algebra), std::move(t), std::move(total),
                      std::move(e)};
}

CentralExtension pullback_extension(const LeibnizAlgebra& a1,
                                    const LeibnizAlgebra& a2,
                                    const Homomorphism& eta, std::size_t n) {
  return pullback_data(a1, a2, eta, n).extension;
}

PairAlgebra pair_algebra(const LeibnizAlgebra& a1, const LeibnizAlgebra& a2,
                         const Homomorphism& eta, std::size_t n) {
  QuotientPair qp = quotient_pair(a1, a2, eta, n);
  const Field& f = a1.field();
  const std::size_t d1 = a1.dim(), d2 = a2.dim();
  DirectSum sum = direct_sum(a1, a2);
  // (g, h) lies in K iff eta(p1(g)) - p2(h) = 0
  Matrix cond(f, qp.q2.algebra.dim(), d1 + d2);
  Matrix left = eta.matrix() * qp.q1.projection.matrix();
  for (std::size_t i = 0; i < qp.q2.algebra.dim(); ++i) {
    for (std::size_t j = 0; j < d1; ++j) cond.at(i, j) = left.at(i, j);
    for (std::size_t j = 0; j < d2; ++j)
      cond.at(i, d1 + j) = -qp.q2.projection.matrix().at(i, j);
  }
  Subspace ksub = Subspace::span(f, d1 + d2, cond.kernel().row_list());
  Restriction r = restrict_to(sum.algebra, ksub);
  LeibnizAlgebra K = std::move(r.algebra);
  Homomorphism embed = std::move(r.inclusion);
  if (K.dim() != d1 + qp.z2.dim())
    throw Error("pair algebra: dimension identity dim K = dim A1 + dim Z_n(A2) failed");
  auto lift_rows = [&](const Subspace& z, bool first) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < z.dim(); ++i) {
      Vector v = first ? pair_vector(f, z.basis().row(i), zero_vector(f, d2))
                       : pair_vector(f, zero_vector(f, d1), z.basis().row(i));
      std::optional<Vector> coords = ksub.coordinates(v);
      if (!coords) throw Error("pair algebra: central element missed K");
      rows.push_back(std::move(*coords));
    }
    return Subspace::span(f, K.dim(), rows);
  };
  Subspace Zg1 = lift_rows(qp.z1, true);
  Subspace Zg2 = lift_rows(qp.z2, false);
  std::vector<Vector> t1, t2;
  for (std::size_t r2 = 0; r2 < K.dim(); ++r2) {
    Vector col = embed.matrix().col(r2);
    t1.push_back(Vector(col.begin(), col.begin() + d1));
    t2.push_back(Vector(col.begin() + d1, col.end()));
  }
  Homomorphism tau1 = Homomorphism::from_images(K, a1, t1);
  Homomorphism tau2 = Homomorphism::from_images(K, a2, t2);
  if (!tau1.is_surjective() || !tau2.is_surjective())
    throw Error("pair algebra: coordinate projections are not surjective");
  if (!(tau1.kernel() == Zg2) || !(tau2.kernel() == Zg1))
    throw Error("pair algebra: projection kernels do not match the central copies");
  return PairAlgebra{std::move(K),   std::move(embed), std::move(Zg1),
                     std::move(Zg2), std::move(tau1),  std::move(tau2)};
}

Prop1Decomposition prop1_decomposition(const LeibnizAlgebra& a1,
                                       const LeibnizAlgebra& a2,
                                       const IsoclinismWitness& w) {
  if (w.n == 0)
    throw Error("prop1 decomposition: level must be at least 1");
  if (!w.a1.same_structure(a1) || !w.a2.same_structure(a2))
    throw Error("prop1 decomposition: witness does not connect these algebras");
  WitnessReport wr = verify_witness(w);
  if (!wr.ok) throw Error("prop1 decomposition: witness failed verification: " + wr.detail);
  const std::size_t n = w.n;
  const Field& f = a1.field();
  PairAlgebra pair = pair_algebra(a1, a2, w.eta, n);
  const LeibnizAlgebra& K = pair.K;
  const std::size_t dk = K.dim();
  Subspace full_k = Subspace::full(f, dk);
  Subspace gamma_np1 = lower_term(K, full_k, n + 1);
  Subspace gamma_n = lower_term(K, full_k, n);
  Quotient qa = quotient_algebra(K, pair.Zg2);
  Quotient qb = quotient_algebra(K, gamma_np1);
  DirectSum l = direct_sum(qa.algebra, qb.algebra);
  auto into_l = [&](const Vector& k, bool both) {
    Vector va = l.inj1.apply(qa.projection.apply(k));
    if (!both) return va;
    return add(va, l.inj2.apply(qb.projection.apply(k)));
  };
  // H = {((g,0) + Zg2, (g,0) + gamma_{n+1}(K)) : g in Z_n(a1) n gamma_n(a1)}
  Subspace core = intersect(upper_term(a1, n),
                            lower_term(a1, Subspace::full(f, a1.dim()), n));
  std::vector<Vector> hrows;
  for (std::size_t r = 0; r < core.dim(); ++r) {
    Vector gv = pair_vector(f, core.basis().row(r), zero_vector(f, a2.dim()));
    std::optional<Vector> k = pair.embed.matrix().solve(gv);
    if (!k) throw Error("prop1 decomposition: central element missed K");
    hrows.push_back(into_l(*k, true));
  }
  Subspace h = Subspace::span(f, l.algebra.dim(), hrows);
  if (!classify_subspace(l.algebra, h).two_sided_ideal)
    throw Error("prop1 decomposition: H is not a two-sided ideal of L");
  Quotient lh = quotient_algebra(l.algebra, h);
  std::vector<Vector> im1, im2, imnil;
  for (std::size_t r = 0; r < dk; ++r) {
    Vector e = unit_vector(f, dk, r);
    im1.push_back(lh.projection.apply(into_l(e, false)));
    im2.push_back(lh.projection.apply(into_l(e, true)));
    imnil.push_back(lh.projection.apply(l.inj2.apply(qb.projection.apply(e))));
  }
  Homomorphism alpha1 = Homomorphism::from_images(K, lh.algebra, im1);
  Homomorphism alpha2 = Homomorphism::from_images(K, lh.algebra, im2);
  if (!analyze_homomorphism(alpha1).is_homomorphism ||
      !analyze_homomorphism(alpha2).is_homomorphism)
    throw Error("prop1 decomposition: alpha maps are not homomorphisms");
  if (!(alpha1.kernel() == pair.Zg2))
    throw Error("prop1 decomposition: Ker(alpha1) differs from Z_{g2}");
  if (!(alpha2.kernel() == intersect(pair.Zg1, gamma_n)))
    throw Error("prop1 decomposition: Ker(alpha2) differs from Z_{g1} n gamma_n(K)");
  LeibnizAlgebra h1 = restriction(lh.algebra, alpha1.image());
  LeibnizAlgebra h2 = restriction(lh.algebra, alpha2.image());
  LeibnizAlgebra nil = restriction(
      lh.algebra, Subspace::span(f, lh.algebra.dim(), imnil));
  std::optional<std::size_t> nil_class =
      nilpotency_class(nil, Subspace::full(f, nil.dim()));
  bool at_least_n = nil_class.has_value() && *nil_class >= n;
  return Prop1Decomposition{std::move(h1),     std::move(h2),
                            std::move(nil),    std::move(alpha1),
                            std::move(alpha2), nil_class,
                            at_least_n};
}

}  // namespace leibniz
