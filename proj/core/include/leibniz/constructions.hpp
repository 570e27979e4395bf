#pragma once

#include <optional>

#include "leibniz/homomorphism.hpp"

namespace leibniz {

struct IsoclinismWitness;  // isoclinism.hpp

struct Quotient {
  LeibnizAlgebra algebra;
  Homomorphism projection;
};

struct DirectSum {
  LeibnizAlgebra algebra;
  Homomorphism inj1;
  Homomorphism inj2;
};

struct Restriction {
  LeibnizAlgebra algebra;
  Homomorphism inclusion;
};

// quotient by a two-sided ideal, on the canonical complement basis
// (non-pivot unit vectors), so structure constants are deterministic
Quotient quotient_algebra(const LeibnizAlgebra& a, const Subspace& ideal);

// block-diagonal sum; injections are the two block embeddings
DirectSum direct_sum(const LeibnizAlgebra& a, const LeibnizAlgebra& b);

// subalgebra on the RREF basis of h, brackets re-expressed in that basis
Restriction restrict_to(const LeibnizAlgebra& a, const Subspace& h);
LeibnizAlgebra restriction(const LeibnizAlgebra& a, const Subspace& h);

// quotient by the ideal generated by squares; the result is a Lie algebra
// (antisymmetry is checked on basis pairs)
Quotient liezation(const LeibnizAlgebra& a);

// 0 -> kernel -> total -> total/kernel -> 0 with kernel inside the n-th
// upper term and the (n+1)-st lower term relative to kernel vanishing
struct CentralExtension {
  LeibnizAlgebra total;
  Subspace kernel;
  LeibnizAlgebra quotient;
  Homomorphism projection;
  std::size_t level = 0;
};

CentralExtension n_central_extension(const LeibnizAlgebra& a, std::size_t n);

// total = {(g, xbar) in a2 + a1/Z_n : g + Z_n = eta(xbar)}, the pullback of
// a2's extension along eta; isomorphic to a2 via the first coordinate
CentralExtension pullback_extension(const LeibnizAlgebra& a1,
                                    const LeibnizAlgebra& a2,
                                    const Homomorphism& eta, std::size_t n);

// the pullback with its construction site exposed (needed to express maps
// into the total algebra)
struct PullbackData {
  LeibnizAlgebra ambient_sum;  // a2 + a1/Z_n
  Subspace t;                  // pullback subspace inside the sum
  Restriction total;           // t as an algebra, with its inclusion
  CentralExtension extension;
};

PullbackData pullback_data(const LeibnizAlgebra& a1, const LeibnizAlgebra& a2,
                           const Homomorphism& eta, std::size_t n);

// K = {(g,h) : eta(g + Z_n(a1)) = h + Z_n(a2)} inside a1 + a2
struct PairAlgebra {
  LeibnizAlgebra K;
  Homomorphism embed;  // K into a1 + a2
  Subspace Zg1;        // {(g,0) : g in Z_n(a1)} = Ker(tau2), in K coordinates
  Subspace Zg2;        // {(0,h) : h in Z_n(a2)} = Ker(tau1)
  Homomorphism tau1;   // K -> a1, first coordinate
  Homomorphism tau2;   // K -> a2, second coordinate
};

PairAlgebra pair_algebra(const LeibnizAlgebra& a1, const LeibnizAlgebra& a2,
                         const Homomorphism& eta, std::size_t n);

// anti-isomorphic images h1 = alpha1(K), h2 = alpha2(K) inside L/H with
// L = K/Zg2 + K/gamma_{n+1}(K) and H the diagonal ideal over
// Z_n(a1) n gamma_n(a1); nil = {(0, tbar) + H} is the Lie-nilpotent part
struct Prop1Decomposition {
  LeibnizAlgebra h1;
  LeibnizAlgebra h2;
  LeibnizAlgebra nil;
  Homomorphism alpha1;  // K -> L/H
  Homomorphism alpha2;  // K -> L/H
  std::optional<std::size_t> nil_class;  // actual Lie-nilpotency class of nil
  bool nil_class_at_least_n = false;     // whether the class-bound claim holds
};

Prop1Decomposition prop1_decomposition(const LeibnizAlgebra& a1,
                                       const LeibnizAlgebra& a2,
                                       const IsoclinismWitness& w);

}  // namespace leibniz
