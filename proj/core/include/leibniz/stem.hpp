#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "leibniz/isoclinism.hpp"

namespace leibniz {

// exhaustive subspace scans below refuse larger ambients, keeping the
// p^(dim^2)-flavoured enumerations tractable
inline constexpr std::size_t kSubspaceScanCap = 4;

// Z_n(A) lies inside gamma_{n+1}(A)
bool is_stem(const LeibnizAlgebra& a, std::size_t n);

// all two-sided ideals, in all_subspaces order; prime field, dim <= dim_cap
std::vector<Subspace> enumerate_ideals(const LeibnizAlgebra& a,
                                       std::size_t dim_cap = kSubspaceScanCap);

// Stemness against its ideal-theoretic characterization: A is stem at n
// exactly when every nonzero two-sided ideal meets gamma_{n+1}(A).
struct StemCriterionReport {
  std::size_t n = 0;
  bool stem = false;               // Z_n lies inside gamma_{n+1}
  bool no_escaping_ideal = false;  // every nonzero ideal meets gamma_{n+1}
  bool agree = false;              // the two sides of the biconditional match
  std::optional<Subspace> witness_ideal;  // nonzero ideal missing gamma_{n+1}
};

StemCriterionReport stem_ideal_criterion(const LeibnizAlgebra& a, std::size_t n,
                                         std::size_t dim_cap = kSubspaceScanCap);

// Result of the quotient reductions below. The collapsed ideal m meets
// gamma_{n+1} trivially, so the input stays n-isoclinic to the quotient.
struct Reduction {
  std::size_t n = 0;
  Subspace m;                 // collapsed two-sided ideal of the input
  LeibnizAlgebra quotient;    // input/m, accumulated across all rounds
  IsoclinismWitness witness;  // input ~_n quotient
  bool certified = false;     // maximality of every round proved by enumeration
  bool achieved = false;      // the reduction goal holds on the quotient
  std::size_t rounds = 0;
};

// Collapse a maximal two-sided ideal meeting gamma_{n+1}(A) trivially — any
// such ideal lies inside Z_n(A) — and repeat on the quotient until it is stem
// or nothing collapses. Over a prime field with dim Z_n <= kSubspaceScanCap
// every candidate is enumerated (certified maximality; equal dimensions tie
// toward the lexicographically smallest basis matrix). Otherwise a greedy
// pass adjoins Z_n basis vectors and their pairwise sums and differences,
// taking the ideal closure each time and keeping it when the gamma_{n+1}
// intersection stays zero (uncertified). achieved = is_stem(quotient, n).
Reduction stem_reduction(const LeibnizAlgebra& a, std::size_t n);

// Collapse one maximal two-sided ideal t inside Z_Lie(A) n gamma_n(A) with
// t n gamma_{n+1}(A) = 0. achieved reports whether the quotient Q satisfies
// Z_Lie(Q) n gamma_n(Q) inside gamma_{n+1}(Q). Requires n >= 1.
Reduction center_commutator_reduction(const LeibnizAlgebra& a, std::size_t n);

// intersection of all maximal proper subalgebras; prime field, dim <= cap;
// a zero-dimensional algebra has no proper subalgebra and yields 0
Subspace frattini(const LeibnizAlgebra& a, std::size_t dim_cap = kSubspaceScanCap);

// per-candidate outcome in frattini_stem_uniqueness
enum class StemCandidateStatus {
  bad_witness,     // witness does not verify between the reference and candidate
  not_stem,        // not stem at n; outside the uniqueness claim
  center_nonzero,  // stem candidate with Z_n != 0
  no_isomorphism,  // stem candidate not isomorphic to A/Z_n(A) by search
  confirmed,       // stem candidate with Z_n = 0, isomorphic to A/Z_n(A)
};

struct StemUniquenessReport {
  std::size_t n = 0;
  bool frattini_zero = false;  // precondition, reported rather than thrown
  std::vector<StemCandidateStatus> status;  // one entry per candidate
  std::size_t stem_candidates = 0;
  bool all_confirmed = false;  // no bad witnesses, all stem candidates confirmed
};

// When Frattini(A) = 0, the stem algebras isoclinic to A should all agree:
// Z_n = 0 and the algebra is isomorphic to A/Z_n(A), the isomorphism found by
// exhaustive search. Candidates arrive with witnesses linking them to a;
// prime fields only (both the Frattini scan and the search demand it).
StemUniquenessReport frattini_stem_uniqueness(
    const LeibnizAlgebra& a, std::size_t n,
    const std::vector<std::pair<LeibnizAlgebra, IsoclinismWitness>>& candidates,
    std::size_t dim_cap = kSubspaceScanCap);

struct MinimalDimensionReport {
  std::size_t n = 0;
  std::size_t min_dim = 0;
  std::vector<std::size_t> dims;          // per family member
  std::vector<bool> stem;                 // per family member
  std::vector<std::size_t> stem_members;  // indices of the stem members
  bool biconditional = false;  // stem <=> dim == min_dim, for every member
};

// family: algebras isoclinic to one common reference, each paired with a
// verified witness from that reference (throws when a witness fails or the
// references disagree); the stem members should be exactly the members of
// minimum dimension
MinimalDimensionReport minimal_dimension_audit(
    const std::vector<std::pair<LeibnizAlgebra, IsoclinismWitness>>& family,
    std::size_t n);

struct StemCenterReport {
  bool centers_match = false;   // xi maps Z_n(a1) onto Z_n(a2)
  bool bijective = false;       // the restricted map is a bijection
  bool multiplicative = false;  // informational, not part of ok
  bool ok = false;              // centers_match && bijective
};

// Between stem algebras Z_n lies inside gamma_{n+1}, so xi restricts to the
// centers; check that the restriction matches them up, and report whether it
// also respects brackets. Requires a verified witness with both endpoints
// stem at w.n (throws otherwise).
StemCenterReport stem_center_isomorphism(const IsoclinismWitness& w);

}  // namespace leibniz
