#include "leibniz/stem.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/constructions.hpp"

namespace leibniz {

namespace {

Subspace gamma_term(const LeibnizAlgebra& a, std::size_t k) {
  return lower_term(a, a.full_subspace(), k);
}

// row-major entrywise comparison of equally shaped basis matrices
bool lex_less(const Matrix& x, const Matrix& y) {
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (x.at(i, j) != y.at(i, j)) return x.at(i, j).raw() < y.at(i, j).raw();
  return false;
}

// subspaces of the ambient space lying inside room, found through the
// coordinate space of room's basis; prime fields only
std::vector<Subspace> subspaces_inside(const LeibnizAlgebra& a,
                                       const Subspace& room) {
  const Field& f = a.field();
  std::vector<Subspace> result;
  for (const Subspace& s : all_subspaces(f, room.dim())) {
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < s.dim(); ++r) {
      Vector v = zero_vector(f, a.dim());
      const Vector c = s.basis().row(r);
      for (std::size_t k = 0; k < room.dim(); ++k)
        v = add(v, scale(c[k], room.basis().row(k)));
      rows.push_back(std::move(v));
    }
    result.push_back(Subspace::span(f, a.dim(), rows));
  }
  return result;
}

// maximum-dimension two-sided ideal inside room meeting avoid trivially,
// by exhausting the prime field; equal dimensions tie toward the smaller
// basis matrix, so the choice is deterministic
Subspace best_ideal_exhaustive(const LeibnizAlgebra& a, const Subspace& room,
                               const Subspace& avoid) {
  std::optional<Subspace> best;
  for (const Subspace& cand : subspaces_inside(a, room)) {
    if (!intersect(cand, avoid).is_zero()) continue;
    if (!classify_subspace(a, cand).two_sided_ideal) continue;
    if (!best || cand.dim() > best->dim() ||
        (cand.dim() == best->dim() && lex_less(cand.basis(), best->basis())))
      best = cand;
  }
  return *best;  // the zero subspace always qualifies
}

// greedy ideal growth: adjoin room's basis vectors and their pairwise sums
// and differences, close into a two-sided ideal, and keep the step when the
// avoid-intersection stays zero (and, when confined, the ideal stays in room)
Subspace best_ideal_greedy(const LeibnizAlgebra& a, const Subspace& room,
                           const Subspace& avoid, bool confine) {
  const Field& f = a.field();
  std::vector<Vector> pool;
  for (std::size_t r = 0; r < room.dim(); ++r)
    pool.push_back(room.basis().row(r));
  const std::size_t b = pool.size();
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = i + 1; j < b; ++j) {
      pool.push_back(add(pool[i], pool[j]));
      pool.push_back(sub(pool[i], pool[j]));
    }
  Subspace m = Subspace::zero(f, a.dim());
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Vector& v : pool) {
      if (m.contains(v)) continue;
      Subspace bigger =
          ideal_closure(a, sum(m, Subspace::span(f, a.dim(), {v})));
      if (!intersect(bigger, avoid).is_zero()) continue;
      if (confine && !room.contains(bigger)) continue;
      m = bigger;
      grew = true;
    }
  }
  return m;
}

}  // namespace

bool is_stem(const LeibnizAlgebra& a, std::size_t n) {
  return gamma_term(a, n + 1).contains(upper_term(a, n));
}

std::vector<Subspace> enumerate_ideals(const LeibnizAlgebra& a,
                                       std::size_t dim_cap) {
  if (!a.field().is_prime_field())
    throw Error("enumerate_ideals: the subspace scan needs a prime field");
  if (a.dim() > dim_cap)
    throw Error("enumerate_ideals: dimension " + std::to_string(a.dim()) +
                " exceeds the scan cap " + std::to_string(dim_cap));
  std::vector<Subspace> ideals;
  for (const Subspace& s : all_subspaces(a.field(), a.dim()))
    if (classify_subspace(a, s).two_sided_ideal) ideals.push_back(s);
  return ideals;
}

StemCriterionReport stem_ideal_criterion(const LeibnizAlgebra& a, std::size_t n,
                                         std::size_t dim_cap) {
  StemCriterionReport rep;
  rep.n = n;
  rep.stem = is_stem(a, n);
  const Subspace gamma = gamma_term(a, n + 1);
  for (const Subspace& ideal : enumerate_ideals(a, dim_cap)) {
    if (ideal.is_zero()) continue;
    if (intersect(ideal, gamma).is_zero()) {
      rep.witness_ideal = ideal;
      break;
    }
  }
  rep.no_escaping_ideal = !rep.witness_ideal.has_value();
  rep.agree = (rep.stem == rep.no_escaping_ideal);
  return rep;
}

Reduction stem_reduction(const LeibnizAlgebra& a, std::size_t n) {
  const Field& f = a.field();
  LeibnizAlgebra current = a;
  std::optional<IsoclinismWitness> chain;
  Matrix proj = Matrix::identity(f, a.dim());
  bool certified = true;
  std::size_t rounds = 0;
  while (!is_stem(current, n)) {
    const Subspace zn = upper_term(current, n);
    const Subspace gamma = gamma_term(current, n + 1);
    // an ideal meeting gamma_{n+1} trivially kills every left-normed bracket
    // word of length n+1 it starts, so it lies inside Z_n: room = Z_n loses
    // no candidate
    Subspace m = current.zero_subspace();
    if (f.is_prime_field() && zn.dim() <= kSubspaceScanCap) {
      m = best_ideal_exhaustive(current, zn, gamma);
    } else {
      m = best_ideal_greedy(current, zn, gamma, /*confine=*/false);
      certified = false;
    }
    if (m.is_zero()) break;
    IsoclinismWitness w = witness_quotient(current, m, n);
    Quotient q = quotient_algebra(current, m);
    proj = q.projection.matrix() * proj;
    chain = chain ? compose_witness(*chain, w) : w;
    current = q.algebra;
    ++rounds;
  }
  if (!chain)
    return Reduction{n,         a.zero_subspace(), a, identity_witness(a, n),
                     certified, is_stem(a, n),     0};
  const Subspace m_total = Homomorphism(a, current, proj).kernel();
  if (!classify_subspace(a, m_total).two_sided_ideal ||
      !intersect(m_total, gamma_term(a, n + 1)).is_zero())
    throw Error("stem_reduction: the collapsed ideal fails its invariants");
  return Reduction{n,         m_total,           current, *chain,
                   certified, is_stem(current, n), rounds};
}

Reduction center_commutator_reduction(const LeibnizAlgebra& a, std::size_t n) {
  if (n == 0)
    throw Error("center_commutator_reduction: the level must be at least 1");
  const Field& f = a.field();
  const Subspace room = intersect(lie_center(a), gamma_term(a, n));
  const Subspace avoid = gamma_term(a, n + 1);
  auto goal = [n](const LeibnizAlgebra& q) {
    return gamma_term(q, n + 1).contains(
        intersect(lie_center(q), gamma_term(q, n)));
  };
  Subspace t = a.zero_subspace();
  bool certified;
  if (f.is_prime_field() && room.dim() <= kSubspaceScanCap) {
    t = best_ideal_exhaustive(a, room, avoid);
    certified = true;
  } else {
    t = best_ideal_greedy(a, room, avoid, /*confine=*/true);
    certified = false;
  }
  if (t.is_zero())
    return Reduction{n,         a.zero_subspace(), a, identity_witness(a, n),
                     certified, goal(a),           0};
  IsoclinismWitness w = witness_quotient(a, t, n);
  LeibnizAlgebra q = quotient_algebra(a, t).algebra;
  return Reduction{n, t, q, w, certified, goal(q), 1};
}

Subspace frattini(const LeibnizAlgebra& a, std::size_t dim_cap) {
  if (!a.field().is_prime_field())
    throw Error("frattini: the subalgebra scan needs a prime field");
  if (a.dim() > dim_cap)
    throw Error("frattini: dimension " + std::to_string(a.dim()) +
                " exceeds the scan cap " + std::to_string(dim_cap));
  std::vector<Subspace> proper;
  for (const Subspace& s : all_subspaces(a.field(), a.dim()))
    if (s.dim() < a.dim() && classify_subspace(a, s).subalgebra)
      proper.push_back(s);
  Subspace phi = a.full_subspace();
  bool found_maximal = false;
  for (const Subspace& s : proper) {
    bool maximal = true;
    for (const Subspace& t : proper)
      if (t.dim() > s.dim() && t.contains(s)) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    phi = intersect(phi, s);
    found_maximal = true;
  }
  return found_maximal ? phi : a.zero_subspace();
}

StemUniquenessReport frattini_stem_uniqueness(
    const LeibnizAlgebra& a, std::size_t n,
    const std::vector<std::pair<LeibnizAlgebra, IsoclinismWitness>>& candidates,
    std::size_t dim_cap) {
  StemUniquenessReport rep;
  rep.n = n;
  rep.frattini_zero = frattini(a, dim_cap).is_zero();
  const LeibnizAlgebra reference =
      quotient_algebra(a, upper_term(a, n)).algebra;
  bool all = true;
  for (const auto& entry : candidates) {
    const LeibnizAlgebra& cand = entry.first;
    const IsoclinismWitness& w = entry.second;
    const bool oriented = (w.a1.same_structure(a) && w.a2.same_structure(cand)) ||
                          (w.a1.same_structure(cand) && w.a2.same_structure(a));
    StemCandidateStatus st;
    if (w.n != n || !oriented || !verify_witness(w).ok) {
      st = StemCandidateStatus::bad_witness;
      all = false;
    } else if (!is_stem(cand, n)) {
      st = StemCandidateStatus::not_stem;
    } else {
      ++rep.stem_candidates;
      if (!upper_term(cand, n).is_zero()) {
        st = StemCandidateStatus::center_nonzero;
        all = false;
      } else if (search_isoclinism(cand, reference, 0).outcome !=
                 SearchOutcome::witness) {
        st = StemCandidateStatus::no_isomorphism;
        all = false;
      } else {
        st = StemCandidateStatus::confirmed;
      }
    }
    rep.status.push_back(st);
  }
  rep.all_confirmed = all;
  return rep;
}

MinimalDimensionReport minimal_dimension_audit(
    const std::vector<std::pair<LeibnizAlgebra, IsoclinismWitness>>& family,
    std::size_t n) {
  if (family.empty()) throw Error("minimal_dimension_audit: empty family");
  const LeibnizAlgebra& ref = family.front().second.a1;
  MinimalDimensionReport rep;
  rep.n = n;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const LeibnizAlgebra& member = family[i].first;
    const IsoclinismWitness& w = family[i].second;
    const std::string tag = "minimal_dimension_audit: member " + std::to_string(i);
    if (w.n != n) throw Error(tag + " carries a witness at the wrong level");
    if (!w.a1.same_structure(ref))
      throw Error(tag + " is not witnessed from the common reference");
    if (!w.a2.same_structure(member))
      throw Error(tag + " does not match its witness target");
    if (!verify_witness(w).ok)
      throw Error(tag + " has a witness that fails verification");
    rep.dims.push_back(member.dim());
    rep.stem.push_back(is_stem(member, n));
  }
  rep.min_dim = *std::min_element(rep.dims.begin(), rep.dims.end());
  bool ok = true;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (rep.stem[i]) rep.stem_members.push_back(i);
    if (rep.stem[i] != (rep.dims[i] == rep.min_dim)) ok = false;
  }
  rep.biconditional = ok;
  return rep;
}

StemCenterReport stem_center_isomorphism(const IsoclinismWitness& w) {
  if (!verify_witness(w).ok)
    throw Error("stem_center_isomorphism: the witness fails verification");
  if (!is_stem(w.a1, w.n) || !is_stem(w.a2, w.n))
    throw Error("stem_center_isomorphism: both endpoints must be stem at level " +
                std::to_string(w.n));
  const Subspace z1 = upper_term(w.a1, w.n);
  const Subspace z2 = upper_term(w.a2, w.n);
  const Subspace g1 = gamma_term(w.a1, w.n + 1);
  const Subspace g2 = gamma_term(w.a2, w.n + 1);
  StemCenterReport rep;
  rep.centers_match = (xi_image_ambient(w, z1) == z2);
  const Restriction r1 = restrict_to(w.a1, z1);
  const Restriction r2 = restrict_to(w.a2, z2);
  std::vector<Vector> images;
  bool lands_in_center = true;
  for (std::size_t r = 0; r < z1.dim(); ++r) {
    const auto c = g1.coordinates(z1.basis().row(r));
    if (!c) throw Error("stem_center_isomorphism: Z_n escapes gamma_{n+1}");
    const Vector img = w.xi.apply(*c);  // coordinates in g2's basis
    Vector ambient = zero_vector(w.a2.field(), w.a2.dim());
    for (std::size_t k = 0; k < g2.dim(); ++k)
      ambient = add(ambient, scale(img[k], g2.basis().row(k)));
    const auto rc = z2.coordinates(ambient);
    if (!rc) {
      lands_in_center = false;
      break;
    }
    images.push_back(*rc);
  }
  if (lands_in_center) {
    const Homomorphism restricted =
        Homomorphism::from_images(r1.algebra, r2.algebra, images);
    rep.bijective = restricted.is_bijective();
    rep.multiplicative = analyze_homomorphism(restricted).is_homomorphism;
  }
  rep.ok = rep.centers_match && rep.bijective;
  return rep;
}

}  // namespace leibniz
