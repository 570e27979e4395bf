#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leibniz/constructions.hpp"

namespace leibniz {

// everything level-n verification needs about one algebra: the n-th upper
// term, the central quotient with its projection and a lifting section
// (complement unit vectors), and gamma_{n+1} as a subalgebra
struct LevelContext {
  LeibnizAlgebra algebra;
  std::size_t n;
  Subspace zn;
  Quotient quotient;
  Subspace gamma;
  Restriction gamma_res;
  Matrix section;  // ambient-dim x quotient-dim, columns lift the quotient basis
};

LevelContext level_context(const LeibnizAlgebra& a, std::size_t n);

// left-normed word [[x1,x2]_lie, x3]_lie ... ]_lie; a single entry is itself
Vector lie_word(const LeibnizAlgebra& a, const std::vector<Vector>& xs);

struct IsoclinismWitness {
  std::size_t n;
  LeibnizAlgebra a1;
  LeibnizAlgebra a2;
  Homomorphism eta;  // a1/Z_n -> a2/Z_n on the canonical quotient bases
  Homomorphism xi;   // gamma_{n+1}(a1) -> gamma_{n+1}(a2) on the subalgebra bases
};

struct WitnessReport {
  bool shapes_ok = false;
  bool eta_isomorphism = false;
  bool xi_bijective = false;
  bool diagram_commutes = false;
  bool xi_multiplicative = false;  // informational; not part of ok
  bool ok = false;
  std::vector<std::size_t> failing_tuple;  // first tuple breaking the diagram
  std::string detail;
};

WitnessReport verify_witness(const IsoclinismWitness& w);

// A bijective xi satisfying the commuting diagram for eta, or nullopt when
// none exists.  The diagram pins xi on the span of the bracket-word values;
// if that span is proper the remainder is completed canonically, so the
// result is deterministic but need not be the only valid choice.
std::optional<Homomorphism> derive_xi(const LeibnizAlgebra& a1,
                                      const LeibnizAlgebra& a2,
                                      const Homomorphism& eta, std::size_t n);

// image under xi of a subspace of gamma_{n+1}(a1); both the input and the
// result are written in the respective algebras' ambient coordinates
Subspace xi_image_ambient(const IsoclinismWitness& w, const Subspace& s);

IsoclinismWitness identity_witness(const LeibnizAlgebra& a, std::size_t n);
IsoclinismWitness invert_witness(const IsoclinismWitness& w);
// w1: A -> B then w2: B -> C
IsoclinismWitness compose_witness(const IsoclinismWitness& w1,
                                  const IsoclinismWitness& w2);
// the witness induced by an algebra isomorphism
IsoclinismWitness witness_from_isomorphism(const Homomorphism& phi, std::size_t n);
// A vs A + nalg for a Lie-nilpotent summand of class at most n
IsoclinismWitness witness_direct_sum(const LeibnizAlgebra& a,
                                     const LeibnizAlgebra& nalg, std::size_t n);
// restriction(g, h) vs restriction(g, h + Z_n(g)), under the hypothesis
// [Z_{n-1}(h), h]_Lie within gamma_{n+1}(h)
IsoclinismWitness witness_subalgebra(const LeibnizAlgebra& g, const Subspace& h,
                                     std::size_t n);
// A/I vs A/(I n gamma_{n+1}(A)); for I n gamma_{n+1} = 0 this links A/I to A
IsoclinismWitness witness_quotient(const LeibnizAlgebra& a, const Subspace& ideal,
                                   std::size_t n);
// A1 vs the pullback total algebra, from a verified witness (eta, xi)
IsoclinismWitness witness_pullback(const LeibnizAlgebra& a1,
                                   const LeibnizAlgebra& a2,
                                   const Homomorphism& eta, const Homomorphism& xi,
                                   std::size_t n);

// dimension data equal across any isoclinic pair; cheap refutation filter
struct Fingerprint {
  std::size_t n = 0;
  std::size_t dim_quotient = 0;
  std::size_t dim_gamma = 0;
  std::vector<std::size_t> quotient_series_dims;          // lower series of A/Z_n
  std::vector<std::size_t> upper_series_dims_of_quotient;  // upper series of A/Z_n
  std::size_t dim_center_cap_gamma = 0;  // dim(Z_n n gamma_{n+1})
  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const LeibnizAlgebra& a, std::size_t n);

enum class SearchOutcome { witness, refuted_by_fingerprint, exhausted, none };

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::none;
  std::optional<IsoclinismWitness> witness;
  unsigned long long candidates = 0;  // eta matrices enumerated
};

inline constexpr unsigned long long kDefaultSearchBudget = 1000000;

// deterministic exhaustive search over prime fields: eta candidates in
// lexicographic order by matrix entries (residues ascending, row major)
SearchResult search_isoclinism(const LeibnizAlgebra& a1, const LeibnizAlgebra& a2,
                               std::size_t n,
                               unsigned long long budget = kDefaultSearchBudget);

struct IsoclinicHomReport {
  bool gamma_isomorphism = false;
  bool kernel_condition = false;  // Ker(beta) n gamma_{n+1}(g1) = 0
  bool isoclinic = false;
  std::optional<IsoclinismWitness> witness;
};

// (alpha, beta, gamma) must be a homomorphism of the two n-central
// extensions (throws otherwise); isoclinic iff gamma is an isomorphism and
// Ker(beta) avoids gamma_{n+1}
IsoclinicHomReport check_isoclinic_homomorphism(const Homomorphism& alpha,
                                                const Homomorphism& beta,
                                                const Homomorphism& gamma,
                                                std::size_t n);

struct InducedReport {
  bool kernel_condition = false;  // Ker(beta) n gamma_{n+1}(g1) = 0
  bool image_condition = false;   // Im(beta) + Z_n(g2) = g2
  bool induces = false;
  std::optional<IsoclinismWitness> witness;
};

// whether a homomorphism induces an n-Lie-isoclinism; on success builds the
// full triple and cross-checks it
InducedReport induced_isoclinic(const Homomorphism& beta, std::size_t n);

struct XietaReport {
  bool witness_ok = false;
  bool coset_identity = false;          // xi(g) + Z_n = eta(g + Z_n) on gamma
  bool center_gamma_preserved = false;  // xi(Z_n n gamma) = Z_n n gamma
  bool mixed_identity = false;          // xi(C1(x.., g)) = C2(xi(x).., eta(g))
  bool ok = false;
};

XietaReport verify_xieta(const IsoclinismWitness& w);

}  // namespace leibniz
