#include <doctest.h>

#include "invsem/axioms.hpp"
#include "support.hpp"

using namespace invsem;
using namespace invsem::test;

namespace {

// 3-chain 0 < a < 1 with the unit in the middle (valid semiring, not 1-bounded).
AlgebraPtr middle_unit_chain() {
  auto a = std::make_shared<AlgebraTable>();
  a->name = "mid3";
  a->size = 3;
  a->join = {0, 1, 2, 1, 1, 2, 2, 2, 2};
  a->mult = {0, 0, 0, 0, 1, 2, 0, 2, 2};
  a->one = 1;
  a->zero = 0;
  return a;
}

// 4-chain with a*b = 0 but b*a = a: a deliberately asymmetric mult.
AlgebraPtr noncommutative_chain() {
  auto a = std::make_shared<AlgebraTable>();
  a->name = "nc4";
  a->size = 4;
  a->join = {0, 1, 2, 3, 1, 1, 2, 3, 2, 2, 2, 3, 3, 3, 3, 3};
  a->mult = {0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 2, 2, 0, 1, 2, 3};
  a->one = 3;
  a->zero = 0;
  return a;
}

// 2-chain with mult = join and the unit at the bottom; not residuated.
AlgebraPtr join_mult_two_chain() {
  auto a = std::make_shared<AlgebraTable>();
  a->name = "jm2";
  a->size = 2;
  a->join = {0, 1, 1, 1};
  a->mult = {0, 1, 1, 1};
  a->one = 0;
  a->zero = 0;
  return a;
}

}  // namespace

TEST_CASE("is_idempotent_semiring") {
  CHECK(is_idempotent_semiring(*b2()).pass);
  CHECK(is_idempotent_semiring(*a3()).pass);
  AlgebraTable bad = *b2();
  bad.join = {0, 1, 1, 0};  // 1 v 1 = 0
  CHECK_FALSE(is_idempotent_semiring(bad).pass);
  AlgebraTable nozero = *b2();
  nozero.zero.reset();
  CHECK_THROWS_AS(is_idempotent_semiring(nozero), unsupported_error);
}

TEST_CASE("is_one_bounded") {
  CHECK(is_one_bounded(*b2()).pass);
  CHECK(is_one_bounded(*c4()).pass);
  Report r = is_one_bounded(*middle_unit_chain());
  CHECK_FALSE(r.pass);
  CHECK(r.witness == std::vector<int>{2});
}

TEST_CASE("is_commutative") {
  CHECK(is_commutative(*b2()).pass);
  CHECK(is_commutative(*c4()).pass);
  AlgebraPtr nc = noncommutative_chain();
  CHECK(validate(*nc).pass);
  Report r = is_commutative(*nc);
  CHECK_FALSE(r.pass);
  CHECK(r.witness == std::vector<int>{1, 2});
}

TEST_CASE("residuals on B2 give classical implication") {
  auto rr = residuals(*b2());
  REQUIRE(rr.report.pass);
  // x\z = (not x) v z
  CHECK(rr.tables->under == BinaryTable{1, 1, 0, 1});
  CHECK(rr.tables->over == BinaryTable{1, 0, 1, 1});
}

TEST_CASE("residuals on L3 and A3") {
  auto l = residuals(*l3());
  REQUIRE(l.report.pass);
  CHECK(l.tables->under[1 * 3 + 0] == 1);  // h\0 = h
  auto g = residuals(*a3());
  REQUIRE(g.report.pass);
  CHECK(g.tables->under[1 * 3 + 0] == 0);  // a\0 = 0
}

TEST_CASE("residuals fail with the first violating triple") {
  auto rr = residuals(*join_mult_two_chain());
  CHECK_FALSE(rr.report.pass);
  CHECK(rr.report.witness == std::vector<int>{0, 1, 0});
}

TEST_CASE("is_involutive_semiring on the corpus") {
  CHECK(is_involutive_semiring(*l3()).pass);
  CHECK(is_involutive_semiring(*c4()).pass);
  CHECK(is_involutive_semiring(*b2()).pass);
}

TEST_CASE("A3 admits no involutive structure at all") {
  AlgebraTable a = *a3();
  a.zero.reset();  // the declared-zero cross-check is not the point here
  int passing = 0;
  UnaryTable ln(3), rn(3);
  for (int l = 0; l < 27; ++l)
    for (int r = 0; r < 27; ++r) {
      int lv = l, rv = r;
      for (int i = 0; i < 3; ++i) {
        ln[i] = lv % 3;
        rn[i] = rv % 3;
        lv /= 3;
        rv /= 3;
      }
      a.lneg = ln;
      a.rneg = rn;
      if (is_involutive_semiring(a).pass) ++passing;
    }
  CHECK(passing == 0);
}

TEST_CASE("is_involutive_semiring cross-validates a declared zero") {
  AlgebraTable a = *c4();
  a.zero = 1;  // -1 is element 0, not a
  Report r = is_involutive_semiring(a);
  CHECK_FALSE(r.pass);
  CHECK(r.detail == "declared zero differs from -1");
}

TEST_CASE("is_one_bounded_involutive") {
  CHECK(is_one_bounded_involutive(*l3()).pass);
  CHECK(is_one_bounded_involutive(*c4()).pass);
  AlgebraTable b = *b2();
  b.lneg = UnaryTable{0, 1};
  b.rneg = UnaryTable{0, 1};
  Report r = is_one_bounded_involutive(b);
  CHECK_FALSE(r.pass);
  CHECK(r.witness == std::vector<int>{1, 0});  // -1 = 1 differs from zero
}

TEST_CASE("is_involutive_rl") {
  CHECK(is_involutive_rl(*l3()).pass);
  CHECK(is_involutive_rl(*b2()).pass);
  Report r = is_involutive_rl(*a3());
  CHECK_FALSE(r.pass);
  CHECK(r.witness == std::vector<int>{1});  // ~-a = 1 != a
}

TEST_CASE("is_mv_semiring") {
  CHECK(is_mv_semiring(*l3()).pass);
  CHECK(is_mv_semiring(*b2()).pass);
  Report r = is_mv_semiring(*c4());
  CHECK_FALSE(r.pass);
  CHECK(r.witness == std::vector<int>{1, 2});  // the join identity fails at (a,b)
  AlgebraPtr nc = noncommutative_chain();
  CHECK_THROWS_AS(is_mv_semiring(*nc), unsupported_error);
}

TEST_CASE("MV implies 1-bounded involutive and commutative on the corpus") {
  for (const auto& entry : builtin_corpus()) {
    const AlgebraTable& a = *entry.algebra;
    if (!a.rneg || !a.zero) continue;
    if (!is_mv_semiring(a).pass) continue;
    CHECK(is_one_bounded_involutive(a).pass);
    CHECK(is_commutative(a).pass);
  }
}

TEST_CASE("is_n_potent") {
  CHECK(is_n_potent(*c4(), 2).pass);
  CHECK_FALSE(is_n_potent(*c4(), 1).pass);
  CHECK(is_n_potent(*c4(), 1).witness == std::vector<int>{1});
  CHECK(is_n_potent(*b2(), 1).pass);
}

TEST_CASE("is_n_vn_regular") {
  CHECK(is_n_vn_regular(*c4(), 2).pass);
  CHECK_FALSE(is_n_vn_regular(*c4(), 1).pass);
  CHECK(is_n_vn_regular(*b2(), 1).pass);
  CHECK(is_n_vn_regular(*a3(), 1).pass);  // a = a*a*a
}

TEST_CASE("is_nilpotent_semiring") {
  CHECK(is_nilpotent_semiring(*l3()).pass);
  CHECK(is_nilpotent_semiring(*b2()).pass);
  Report r = is_nilpotent_semiring(*a3());
  CHECK_FALSE(r.pass);
  CHECK(r.witness == std::vector<int>{1});  // a is idempotent, never 0
  CHECK_FALSE(is_nilpotent_semiring(*c4()).pass);  // b*b = b
}

TEST_CASE("is_mult_idempotent") {
  CHECK(is_mult_idempotent(*b2()).pass);
  CHECK(is_mult_idempotent(*b2xb2()).pass);
  Report r = is_mult_idempotent(*c4());
  CHECK_FALSE(r.pass);
  CHECK(r.witness == std::vector<int>{1});
}

TEST_CASE("is_boolean_algebra") {
  CHECK(is_boolean_algebra(*b2()).pass);
  CHECK(is_boolean_algebra(*b2xb2()).pass);
  Report r = is_boolean_algebra(*c4());
  CHECK_FALSE(r.pass);  // mult differs from meet (a*a = 0)
  CHECK_FALSE(is_boolean_algebra(*l3()).pass);
}

TEST_CASE("power computes monoid powers") {
  CHECK(power(*c4(), 1, 0) == 3);  // x^0 = 1
  CHECK(power(*c4(), 1, 1) == 1);
  CHECK(power(*c4(), 1, 2) == 0);
  CHECK(power(*c4(), 2, 5) == 2);
}
