#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "leibniz/subspace.hpp"

using namespace leibniz;

namespace {
Vector vec(const Field& f, std::initializer_list<long> entries) {
  Vector v;
  for (auto e : entries) v.push_back(Scalar::of_int(f, e));
  return v;
}

Subspace random_subspace(const Field& f, std::size_t ambient, std::mt19937_64& rng) {
  std::vector<Vector> gens;
  std::size_t count = rng() % (ambient + 1);
  for (std::size_t i = 0; i < count; ++i) {
    Vector v;
    for (std::size_t j = 0; j < ambient; ++j)
      v.push_back(Scalar::of_int(f, long(rng() % 5) - 2));
    gens.push_back(std::move(v));
  }
  return Subspace::span(f, ambient, gens);
}
}  // namespace

TEST_CASE("span canonicalizes") {
  Field q = Field::rationals();
  Subspace u = Subspace::span(q, 3, {vec(q, {1, 1, 0}), vec(q, {2, 2, 0})});
  CHECK(u.dim() == 1);
  CHECK(u.basis().row(0) == vec(q, {1, 1, 0}));
  CHECK(Subspace::span(q, 3, {}).is_zero());

  Field f3 = Field::prime(3);
  Subspace w = Subspace::span(f3, 2, {vec(f3, {2, 1})});
  CHECK(w.basis().row(0) == vec(f3, {1, 2}));  // scaled by 2^{-1} = 2
}

TEST_CASE("rref canonicity under permutation and rescaling") {
  std::mt19937_64 rng(3);
  Field q = Field::rationals();
  for (int t = 0; t < 50; ++t) {
    Subspace u = random_subspace(q, 4, rng);
    std::vector<Vector> rows = u.basis().row_list();
    std::shuffle(rows.begin(), rows.end(), rng);
    for (auto& r : rows) {
      long c = long(rng() % 5) + 1;
      r = scale(Scalar::of_int(q, c), r);
    }
    CHECK(Subspace::span(q, 4, rows) == u);
  }
}

TEST_CASE("sum and intersect") {
  Field q = Field::rationals();
  Subspace e1 = Subspace::span(q, 3, {vec(q, {1, 0, 0})});
  Subspace e2 = Subspace::span(q, 3, {vec(q, {0, 1, 0})});
  Subspace e12 = Subspace::span(q, 3, {vec(q, {1, 0, 0}), vec(q, {0, 1, 0})});
  Subspace e23 = Subspace::span(q, 3, {vec(q, {0, 1, 0}), vec(q, {0, 0, 1})});
  CHECK(sum(e1, e2) == e12);
  CHECK(sum(e1, e1) == e1);
  CHECK(intersect(e12, e23) == e2);
  CHECK(intersect(e1, Subspace::zero(q, 3)).is_zero());
  Subspace diag = Subspace::span(q, 3, {vec(q, {1, 1, 0})});
  CHECK(intersect(diag, e12) == diag);  // containment case
  CHECK(sum(Subspace::span(q, 2, {vec(q, {1, 1})}),
            Subspace::span(q, 2, {vec(q, {1, -1})})) == Subspace::full(q, 2));
}

TEST_CASE("lattice properties on random subspaces") {
  std::mt19937_64 rng(17);
  for (const Field& f : {Field::rationals(), Field::prime(3)}) {
    for (int t = 0; t < 40; ++t) {
      Subspace u = random_subspace(f, 4, rng);
      Subspace v = random_subspace(f, 4, rng);
      Subspace w = random_subspace(f, 4, rng);
      CHECK(sum(u, v) == sum(v, u));
      CHECK(intersect(u, v) == intersect(v, u));
      CHECK(sum(sum(u, v), w) == sum(u, sum(v, w)));
      CHECK(intersect(intersect(u, v), w) == intersect(u, intersect(v, w)));
      CHECK(intersect(u, sum(u, v)) == u);  // absorption
      CHECK(sum(u, intersect(u, v)) == u);
      // modular law on dimensions
      CHECK(sum(u, v).dim() + intersect(u, v).dim() == u.dim() + v.dim());
      CHECK(sum(u, v).contains(u));
      CHECK(u.contains(intersect(u, v)));
    }
  }
}

TEST_CASE("contains") {
  Field q = Field::rationals();
  Subspace e1 = Subspace::span(q, 2, {vec(q, {1, 0})});
  CHECK(!e1.contains(vec(q, {1, 1})));
  CHECK(e1.contains(zero_vector(q, 2)));
  Field f3 = Field::prime(3);
  Subspace u = Subspace::span(f3, 2, {vec(f3, {1, 2})});
  CHECK(u.contains(vec(f3, {2, 1})));  // (2,1) = 2*(1,2) mod 3
}

TEST_CASE("contains agrees with exhaustive enumeration over F3") {
  std::mt19937_64 rng(23);
  Field f3 = Field::prime(3);
  for (int t = 0; t < 30; ++t) {
    Subspace u = random_subspace(f3, 3, rng);
    auto members = subspace_elements(u);
    CHECK(members.size() == std::size_t(std::pow(3, double(u.dim())) + 0.5));
    for (const auto& m : members) CHECK(u.contains(m));
    // scan the whole ambient space: membership iff listed
    Subspace full = Subspace::full(f3, 3);
    for (const auto& v : subspace_elements(full)) {
      bool listed = std::find(members.begin(), members.end(), v) != members.end();
      CHECK(u.contains(v) == listed);
    }
  }
}

TEST_CASE("complement coordinates") {
  Field q = Field::rationals();
  Subspace e1 = Subspace::span(q, 3, {vec(q, {1, 0, 0})});
  auto c = e1.complement_coordinates();
  REQUIRE(c.size() == 2);
  CHECK(c[0] == vec(q, {0, 1, 0}));
  CHECK(c[1] == vec(q, {0, 0, 1}));
  CHECK(Subspace::full(q, 3).complement_coordinates().empty());
  Subspace slanted = Subspace::span(q, 3, {vec(q, {1, 1, 0})});
  auto ci = slanted.complement_indices();
  CHECK(ci == std::vector<std::size_t>{1, 2});  // pivot col 0
  // complement + subspace spans everything
  std::vector<Vector> all = slanted.basis().row_list();
  for (auto& v : slanted.complement_coordinates()) all.push_back(v);
  CHECK(Subspace::span(q, 3, all) == Subspace::full(q, 3));
}

TEST_CASE("coordinates in RREF basis") {
  Field q = Field::rationals();
  Subspace u = Subspace::span(q, 3, {vec(q, {1, 0, 1}), vec(q, {0, 1, 1})});
  Vector v = vec(q, {2, 3, 5});
  auto c = u.coordinates(v);
  REQUIRE(c.has_value());
  CHECK(*c == vec(q, {2, 3}));
  CHECK(!u.coordinates(vec(q, {1, 0, 0})).has_value());
}

TEST_CASE("subspace enumeration over F3") {
  Field f3 = Field::prime(3);
  auto all2 = all_subspaces(f3, 2);
  CHECK(all2.size() == 6);  // 0, four lines, plane
  auto all3 = all_subspaces(f3, 3);
  CHECK(all3.size() == 28);  // 1 + 13 + 13 + 1
  auto all4 = all_subspaces(f3, 4);
  CHECK(all4.size() == 212);  // 1 + 40 + 130 + 40 + 1
  // all distinct
  for (std::size_t i = 0; i < all3.size(); ++i)
    for (std::size_t j = i + 1; j < all3.size(); ++j)
      CHECK(all3[i] != all3[j]);
  // deterministic order
  auto again = all_subspaces(f3, 3);
  for (std::size_t i = 0; i < all3.size(); ++i) CHECK(all3[i] == again[i]);
}

TEST_CASE("dim 0 ambient") {
  Field q = Field::rationals();
  Subspace z = Subspace::zero(q, 0);
  CHECK(z == Subspace::full(q, 0));
  CHECK(z.contains(Vector{}));
  CHECK(sum(z, z) == z);
  CHECK(intersect(z, z) == z);
  CHECK(z.complement_coordinates().empty());
}
