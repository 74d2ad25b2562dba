#ifndef INVSEM_DECIDE_HPP
#define INVSEM_DECIDE_HPP

#include <optional>

#include "invsem/algebra.hpp"
#include "invsem/homs.hpp"
#include "invsem/semimodule.hpp"

namespace invsem {

// Certificate that `inner` is a retract of factor^arity. The section is
// stored pointwise (a tuple per inner element) and the retraction as one
// hom factor -> inner per column; r(t) = v_j column_retract[j](t_j). When
// factor^arity is small the power is materialized into `outer` with total
// section/retract maps as well.
struct Retraction {
  SemimodulePtr inner;
  SemimodulePtr factor;
  int arity = 0;
  std::vector<std::vector<Idx>> section;         // inner.size tuples
  std::vector<std::vector<Idx>> column_retract;  // arity maps factor->inner

  SemimodulePtr outer;  // materialized power, if small enough
  std::optional<HomMap> section_map, retract_map;
};

// Independent re-check: every section column and retract column is a hom
// and retract(section(x)) = x for all x (by evaluation, plus through the
// materialized maps when present).
Report verify_retraction(const Retraction& r);

struct DecisionResult {
  Report report;                       // pass = yes
  std::optional<Retraction> retraction;  // present on yes
};

// Retract search against the canonical surjection free(a,|G|) ->> m,
// where G defaults to a greedily minimized generating set.
DecisionResult is_projective(const AlgebraPtr& a, const SemimodulePtr& m,
                             std::optional<std::vector<Idx>> generators = std::nullopt);

// Retract search against the canonical embedding eps: m -> Id(A)^X with
// X = ideals(m) and eps(x)_I = {c in A | c.x in I}.
DecisionResult is_injective(const AlgebraPtr& a, const SemimodulePtr& m);

DecisionResult is_self_injective(const AlgebraPtr& a);

std::vector<Idx> minimized_generators(const SemimoduleTable& m);

// Theorem batteries. Preconditions refuse with unsupported_error unless
// `force`; scope covers subsemimodules of regular(a) and of free(a,k) for
// 2 <= k <= free_rank.
Report injective_iff_projective_check(const AlgebraPtr& a, int free_rank = 2,
                                      bool force = false);
Report cyclic_trichotomy_check(const AlgebraPtr& a, bool force = false);
Report strong_iff_faithful_check(const AlgebraPtr& a, int free_rank = 2,
                                 bool force = false);
Report principal_ideal_equivalence_check(const AlgebraPtr& a, bool force = false);
Report npotent_selfinjective_check(const AlgebraPtr& a, int n, bool force = false);
Report product_selfinjective_check(const std::vector<AlgebraPtr>& as);
Report n_vn_regular_iff_n_potent(const AlgebraPtr& a, int n);
Report mult_idempotent_iff_boolean(const AlgebraPtr& a);

// m v /\S = /\{m v s | s in S} over all subsets (empty meet = top). For
// carriers above 18 elements the equivalent binary form is checked
// instead (finite induction collapses the two).
Report is_mid_complete(const SemimoduleTable& m);

Report is_join_distributive(int size, const BinaryTable& join);
Report is_join_distributive(const AlgebraTable& a);
Report is_join_distributive(const SemimoduleTable& m);

Report is_faithful(const AlgebraPtr& a, const SemimoduleTable& m);
Report is_strong(const AlgebraPtr& a, const SemimoduleTable& m);

}  // namespace invsem

#endif
