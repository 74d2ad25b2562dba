#include "invsem/corpus.hpp"

#include "invsem/registry.hpp"
#include "invsem/semimodule.hpp"

namespace invsem {

namespace {

AlgebraPtr make_a3() {
  auto a = std::make_shared<AlgebraTable>();
  a->name = "A3";
  a->size = 3;
  a->display = {"0", "a", "1"};
  // chain 0 < a < 1, a*a = a
  a->join = {0, 1, 2, 1, 1, 2, 2, 2, 2};
  a->mult = {0, 0, 0, 0, 1, 1, 0, 1, 2};
  a->one = 2;
  a->zero = 0;
  return a;
}

AlgebraPtr make_l3() {
  auto a = std::make_shared<AlgebraTable>();
  a->name = "L3";
  a->size = 3;
  a->display = {"0", "h", "1"};
  // 3-element Lukasiewicz chain: h*h = 0, ~x = -x = 1-x
  a->join = {0, 1, 2, 1, 1, 2, 2, 2, 2};
  a->mult = {0, 0, 0, 0, 0, 1, 0, 1, 2};
  a->one = 2;
  a->zero = 0;
  a->lneg = UnaryTable{2, 1, 0};
  a->rneg = UnaryTable{2, 1, 0};
  return a;
}

AlgebraPtr make_c4() {
  auto a = std::make_shared<AlgebraTable>();
  a->name = "C4";
  a->size = 4;
  a->display = {"0", "a", "b", "1"};
  // chain 0 < a < b < 1 with a*a = 0, b*b = b, a*b = 0; -0=1 -a=b -b=a -1=0
  a->join = {0, 1, 2, 3, 1, 1, 2, 3, 2, 2, 2, 3, 3, 3, 3, 3};
  a->mult = {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 2, 2, 0, 1, 2, 3};
  a->one = 3;
  a->zero = 0;
  a->lneg = UnaryTable{3, 2, 1, 0};
  a->rneg = UnaryTable{3, 2, 1, 0};
  return a;
}

AlgebraPtr make_b2xb2() {
  auto p = product_semiring({boolean_semifield(), boolean_semifield()});
  auto a = std::make_shared<AlgebraTable>(*p);
  a->name = "B2xB2";
  return a;
}

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> out;

  CorpusEntry b2{"B2", boolean_semifield(), {}};
  b2.expected = {
      {"validate", true, "reported"},
      {"is_idempotent_semiring", true, "reported"},
      {"is_one_bounded", true, "reported"},
      {"is_commutative", true, "reported"},
      {"is_involutive_semiring", true, "computed"},
      {"is_one_bounded_involutive", true, "computed"},
      {"is_involutive_rl", true, "computed"},
      {"is_mv_semiring", true, "computed"},
      {"is_mult_idempotent", true, "reported"},
      {"is_boolean_algebra", true, "reported"},
      {"is_nilpotent_semiring", true, "computed"},
      {"is_lattice_distributive", true, "computed"},
      {"is_n_potent:1", true, "computed"},
      {"is_n_vn_regular:1", true, "computed"},
      {"roundtrip_check", true, "computed"},
      {"involutive_identities", true, "computed"},
      {"interval_criterion", true, "computed"},
      {"hom_id_iso_check", true, "computed"},
      {"phi_check", true, "computed"},
      {"is_self_injective", true, "computed"},
      {"is_projective_regular", true, "computed"},
      {"is_mid_complete_regular", true, "computed"},
      {"ideal_count:2", true, "computed"},
      {"boolean_hom_count:2", true, "computed"},
      {"principal_ideal_equivalence_check", true, "computed"},
      {"mult_idempotent_iff_boolean", true, "computed"},
      {"strong_iff_faithful_check", true, "computed"},
      {"injective_iff_projective_check", true, "computed"},
      {"cyclic_trichotomy_check", true, "computed"},
  };
  out.push_back(std::move(b2));

  CorpusEntry a3{"A3", make_a3(), {}};
  a3.expected = {
      {"validate", true, "reported"},
      {"is_idempotent_semiring", true, "reported"},
      {"is_one_bounded", true, "reported"},
      {"is_commutative", true, "computed"},
      {"is_involutive_rl", false, "computed"},
      {"is_mult_idempotent", true, "computed"},
      {"is_boolean_algebra", false, "computed"},
      {"is_nilpotent_semiring", false, "computed"},
      {"is_lattice_distributive", true, "computed"},
      {"is_n_potent:1", true, "computed"},
      {"is_n_vn_regular:1", true, "computed"},
      {"galois_identities", true, "computed"},
      {"hom_id_iso_check", true, "computed"},
      {"phi_check", true, "computed"},  // neither side holds, so the biconditional does
      {"is_self_injective", false, "reported"},
      {"is_projective_regular", true, "reported"},
      {"is_mid_complete_regular", true, "computed"},
      {"ideal_count:3", true, "reported"},
      {"boolean_hom_count:3", true, "computed"},
      {"residuals", true, "computed"},
  };
  out.push_back(std::move(a3));

  CorpusEntry c4{"C4", make_c4(), {}};
  c4.expected = {
      {"validate", true, "reported"},
      {"is_idempotent_semiring", true, "reported"},
      {"is_one_bounded", true, "reported"},
      {"is_commutative", true, "reported"},
      {"is_involutive_semiring", true, "computed"},
      {"is_one_bounded_involutive", true, "reported"},
      {"is_involutive_rl", true, "computed"},
      {"is_mv_semiring", false, "computed"},
      {"is_mult_idempotent", false, "reported"},
      {"is_boolean_algebra", false, "computed"},
      {"is_nilpotent_semiring", false, "computed"},
      {"is_lattice_distributive", true, "computed"},
      {"is_n_potent:2", true, "reported"},
      {"is_n_potent:1", false, "reported"},
      {"is_n_vn_regular:2", true, "computed"},
      {"is_n_vn_regular:1", false, "computed"},
      {"roundtrip_check", true, "computed"},
      {"involutive_identities", true, "computed"},
      {"interval_criterion", true, "computed"},
      {"hom_id_iso_check", true, "computed"},
      {"phi_check", true, "computed"},
      {"is_self_injective", true, "reported"},
      {"is_projective_regular", true, "reported"},
      {"is_mid_complete_regular", true, "computed"},
      {"ideal_count:4", true, "computed"},
      {"boolean_hom_count:4", true, "computed"},
      {"cyclic_injective:0", true, "reported"},
      {"cyclic_projective:0", true, "reported"},
      {"cyclic_injective:1", false, "computed"},
      {"cyclic_projective:1", false, "computed"},
      {"cyclic_injective:2", true, "reported"},
      {"cyclic_projective:2", true, "reported"},
      {"cyclic_injective:3", true, "reported"},
      {"cyclic_projective:3", true, "reported"},
      {"cyclic_trichotomy_check", true, "computed"},
      {"injective_iff_projective_check", true, "computed"},
      {"principal_ideal_equivalence_check", true, "computed"},
      {"npotent_selfinjective_check:2", true, "reported"},
      {"npotent_selfinjective_check:1", true, "computed"},
      {"n_vn_regular_iff_n_potent:1", true, "computed"},
      {"n_vn_regular_iff_n_potent:2", true, "computed"},
      {"mult_idempotent_iff_boolean", true, "computed"},
  };
  out.push_back(std::move(c4));

  CorpusEntry l3{"L3", make_l3(), {}};
  l3.expected = {
      {"validate", true, "computed"},
      {"is_idempotent_semiring", true, "computed"},
      {"is_one_bounded", true, "computed"},
      {"is_commutative", true, "computed"},
      {"is_involutive_semiring", true, "computed"},
      {"is_one_bounded_involutive", true, "computed"},
      {"is_involutive_rl", true, "computed"},
      {"is_mv_semiring", true, "computed"},
      {"is_mult_idempotent", false, "computed"},
      {"is_boolean_algebra", false, "computed"},
      {"is_nilpotent_semiring", true, "computed"},
      {"is_n_potent:2", true, "computed"},
      {"is_n_potent:1", false, "computed"},
      {"roundtrip_check", true, "computed"},
      {"involutive_identities", true, "computed"},
      {"interval_criterion", true, "computed"},
      {"hom_id_iso_check", true, "computed"},
      {"phi_check", true, "computed"},
      {"is_self_injective", true, "computed"},
      {"is_projective_regular", true, "computed"},
      {"is_mid_complete_regular", true, "computed"},
      {"ideal_count:3", true, "computed"},
      {"strong_iff_faithful_check", true, "computed"},
      {"injective_iff_projective_check", true, "computed"},
      {"cyclic_trichotomy_check", true, "computed"},
      {"mult_idempotent_iff_boolean", true, "computed"},
  };
  out.push_back(std::move(l3));

  CorpusEntry bb{"B2xB2", make_b2xb2(), {}};
  bb.expected = {
      {"validate", true, "computed"},
      {"is_idempotent_semiring", true, "computed"},
      {"is_one_bounded", true, "computed"},
      {"is_commutative", true, "computed"},
      {"is_involutive_semiring", true, "computed"},
      {"is_one_bounded_involutive", true, "computed"},
      {"is_mv_semiring", true, "computed"},
      {"is_mult_idempotent", true, "computed"},
      {"is_boolean_algebra", true, "computed"},
      {"is_nilpotent_semiring", false, "computed"},
      {"is_lattice_distributive", true, "computed"},
      {"roundtrip_check", true, "computed"},
      {"interval_criterion", true, "computed"},
      {"hom_id_iso_check", true, "computed"},
      {"phi_check", true, "computed"},
      {"is_self_injective", true, "computed"},
      {"is_projective_regular", true, "computed"},
      {"is_mid_complete_regular", true, "computed"},
      {"ideal_count:4", true, "computed"},
      {"boolean_hom_count:4", true, "computed"},
      {"principal_ideal_equivalence_check", true, "computed"},
      {"mult_idempotent_iff_boolean", true, "computed"},
      {"injective_iff_projective_check", true, "computed"},
      {"cyclic_trichotomy_check", true, "computed"},
  };
  out.push_back(std::move(bb));

  return out;
}

}  // namespace

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = build();
  return corpus;
}

AlgebraPtr corpus_algebra(const std::string& name) {
  for (const auto& e : builtin_corpus())
    if (e.name == name) return e.algebra;
  throw input_error("unknown corpus algebra '" + name + "'");
}

Report run_corpus(std::vector<std::string>* lines) {
  Report out = Report::ok("corpus");
  for (const auto& entry : builtin_corpus()) {
    for (const auto& exp : entry.expected) {
      const Report got = run_named_check(entry.algebra, exp.check);
      const bool match = got.pass == exp.expected;
      if (lines)
        lines->push_back(entry.name + " " + exp.check + " expected=" +
                         (exp.expected ? "yes" : "no") + " got=" +
                         (got.pass ? "yes" : "no") + (match ? "" : "  <-- MISMATCH"));
      if (!match && out.pass)
        out = Report::fail("corpus", got.witness,
                           entry.name + " " + exp.check + ": expected " +
                               (exp.expected ? "yes" : "no") + ", got " +
                               (got.pass ? "yes" : "no"));
    }
  }
  return out;
}

}  // namespace invsem
