#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "invsem/algebra.hpp"
#include "invsem/axioms.hpp"
#include "support.hpp"

using namespace invsem;
using namespace invsem::test;

TEST_CASE("validate accepts the corpus") {
  for (const auto& entry : builtin_corpus()) CHECK(validate(*entry.algebra).pass);
}

TEST_CASE("validate rejects out-of-range entries as input errors") {
  AlgebraTable bad = *a3();
  bad.mult[1 * 3 + 1] = 3;  // a*a patched out of range
  CHECK_THROWS_AS(validate(bad), input_error);
}

TEST_CASE("validate reports the first violating tuple") {
  AlgebraTable bad = *b2();
  bad.join = {0, 1, 0, 1};  // join(1,0) = 0: not commutative
  Report r = validate(bad);
  CHECK_FALSE(r.pass);
  CHECK(r.witness == std::vector<int>{0, 1});
  CHECK(r.detail == "join not commutative");
}

TEST_CASE("order_from_join gives the natural order") {
  Poset p = order_from_join(*b2());
  CHECK(p.leq(0, 1));
  CHECK_FALSE(p.leq(1, 0));
  CHECK(p.validate().pass);

  Poset q = order_from_join(*a3());
  CHECK(q.lt(0, 1));
  CHECK(q.lt(1, 2));
  CHECK(q.lt(0, 2));

  Poset c = order_from_join(*c4());
  for (Idx x = 0; x < 4; ++x)
    for (Idx y = 0; y < 4; ++y) CHECK(c.leq(x, y) == (x <= y));
}

TEST_CASE("order_from_join of every corpus algebra is a poset") {
  for (const auto& entry : builtin_corpus())
    CHECK(order_from_join(*entry.algebra).validate().pass);
}

TEST_CASE("derived_meet is the greatest lower bound") {
  CHECK(derived_meet(*b2(), 1, 0) == 0);
  CHECK(derived_meet(*c4(), 1, 2) == 1);  // meet(a,b) = a on the chain

  for (const auto& entry : builtin_corpus()) {
    const AlgebraTable& a = *entry.algebra;
    for (Idx x = 0; x < a.size; ++x)
      for (Idx y = 0; y < a.size; ++y) {
        const Idx m = derived_meet(a, x, y);
        CHECK(a.leq(m, x));
        CHECK(a.leq(m, y));
        for (Idx z = 0; z < a.size; ++z)
          if (a.leq(z, x) && a.leq(z, y)) CHECK(a.leq(z, m));
      }
  }
}

TEST_CASE("derived_meet matches the negation formula on L3") {
  const AlgebraTable& a = *l3();
  for (Idx x = 0; x < 3; ++x)
    for (Idx y = 0; y < 3; ++y) {
      const Idx via_neg = a.lneg_of(a.join_of(a.rneg_of(x), a.rneg_of(y)));
      CHECK(derived_meet(a, x, y) == via_neg);
    }
  CHECK(derived_meet(a, 1, 1) == 1);
}

TEST_CASE("derived_meet requires a least element") {
  AlgebraTable no_bottom;  // two incomparable points below a top
  no_bottom.name = "V";
  no_bottom.size = 3;
  no_bottom.join = {0, 2, 2, 2, 1, 2, 2, 2, 2};
  no_bottom.mult = no_bottom.join;
  no_bottom.one = 2;
  CHECK_THROWS_AS(derived_meet(no_bottom, 0, 1), unsupported_error);
}

TEST_CASE("join_irreducibles") {
  CHECK(join_irreducibles(*b2()) == std::vector<Idx>{1});
  CHECK(join_irreducibles(*a3()) == std::vector<Idx>{1, 2});
  // 2x2 Boolean square: the two atoms (indices 1,2), top 3 = 1 v 2.
  CHECK(join_irreducibles(*b2xb2()) == std::vector<Idx>{1, 2});
}

TEST_CASE("join_irreducibles generate by joins") {
  for (const auto& entry : builtin_corpus()) {
    const AlgebraTable& a = *entry.algebra;
    const auto ji = join_irreducibles(a);
    const Idx least = *a.bottom();
    for (Idx x = 0; x < a.size; ++x) {
      Idx acc = least;
      for (Idx p : ji)
        if (a.leq(p, x)) acc = a.join_of(acc, p);
      CHECK(acc == x);
    }
  }
}

TEST_CASE("canonical_key is invariant under relabeling") {
  std::mt19937 rng(12345);
  for (const auto& entry : builtin_corpus()) {
    const AlgebraTable& a = *entry.algebra;
    const CanonicalKey key = canonical_key(a);
    std::vector<Idx> perm(a.size);
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 100; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_key(apply_permutation(a, perm)) == key);
    }
  }
}

TEST_CASE("canonical_key separates non-isomorphic tables") {
  CHECK_FALSE(canonical_key(*b2()) == canonical_key(*a3()));
  // 3-chains with a*a = a vs a*a = 0 (negation tables stripped).
  AlgebraTable goedel = *a3();
  AlgebraTable luka = *l3();
  luka.lneg.reset();
  luka.rneg.reset();
  CHECK_FALSE(canonical_key(goedel) == canonical_key(luka));
}

TEST_CASE("canonical_key ignores display names and derived tables") {
  AlgebraTable a = *c4();
  a.display.clear();
  a.meet = meet_table(a);
  CHECK(canonical_key(a) == canonical_key(*c4()));
}

TEST_CASE("is_lattice_distributive") {
  CHECK(is_lattice_distributive(*a3()).pass);
  CHECK(is_lattice_distributive(*c4()).pass);
  CHECK(is_lattice_distributive(*b2xb2()).pass);
  Report r = is_lattice_distributive(*m3());
  CHECK_FALSE(r.pass);
  CHECK(r.witness == std::vector<int>{1, 2, 3});
}

TEST_CASE("apply_permutation relabels consistently") {
  const AlgebraTable& a = *c4();
  std::vector<Idx> perm{3, 2, 1, 0};
  AlgebraTable b = apply_permutation(a, perm);
  CHECK(validate(b).pass);
  CHECK(b.one == 0);
  CHECK(*b.zero == 3);
  for (Idx x = 0; x < 4; ++x)
    for (Idx y = 0; y < 4; ++y)
      CHECK(b.join[perm[x] * 4 + perm[y]] == perm[a.join_of(x, y)]);
}
