#pragma once

#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/matrix.hpp"

namespace leibniz {

// one multiplicativity failure: f([e_i,e_j]) vs [f(e_i), f(e_j)]
struct HomViolation {
  std::size_t i, j;
  Vector mapped_bracket;   // f([e_i, e_j])
  Vector bracket_of_maps;  // [f(e_i), f(e_j)]
};

struct HomReport {
  bool is_homomorphism = false;
  Subspace kernel;
  Subspace image;
  std::vector<HomViolation> violations;
};

// linear map between algebras stored as a (target-dim x source-dim) matrix;
// whether it is an algebra map is a property checked by analyze_homomorphism,
// not a constructor invariant
class Homomorphism {
 public:
  Homomorphism(LeibnizAlgebra source, LeibnizAlgebra target, Matrix m);
  static Homomorphism identity(const LeibnizAlgebra& a);
  static Homomorphism zero(const LeibnizAlgebra& source, const LeibnizAlgebra& target);
  // columns = images of source basis vectors
  static Homomorphism from_images(const LeibnizAlgebra& source,
                                  const LeibnizAlgebra& target,
                                  const std::vector<Vector>& images);

  const LeibnizAlgebra& source() const { return source_; }
  const LeibnizAlgebra& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }

  Vector apply(const Vector& x) const;
  Subspace apply(const Subspace& s) const;  // image of a subspace
  Subspace kernel() const;
  Subspace image() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const;

 private:
  LeibnizAlgebra source_;
  LeibnizAlgebra target_;
  Matrix matrix_;
};

Homomorphism compose(const Homomorphism& g, const Homomorphism& f);  // g after f
// inverse of a bijective map (throws otherwise)
Homomorphism invert(const Homomorphism& f);

HomReport analyze_homomorphism(const Homomorphism& f);
bool is_isomorphism(const Homomorphism& f);

}  // namespace leibniz
