#ifndef INVSEM_HOMS_HPP
#define INVSEM_HOMS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "invsem/semimodule.hpp"

namespace invsem {

enum class HomKind {
  Semilattice,  // preserves v and 0
  Module,       // additionally preserves the scalar action
};

struct HomMap {
  SemimodulePtr dom, cod;
  HomKind kind = HomKind::Module;
  std::vector<Idx> map;

  Idx operator()(Idx x) const { return map[x]; }
};

// Full pointwise preservation check for the declared kind.
Report verify_hom(const HomMap& f);

// Search constraints: fixed images for particular domain elements, plus an
// optional per-element candidate predicate.
struct HomConstraints {
  std::vector<std::pair<Idx, Idx>> fixed;
  std::function<bool(Idx dom_elem, Idx cod_value)> allow;
};

// Backtracking enumeration of all homs of the given kind extending the
// constraints. Images are assigned on a generating sequence of dom
// (join-irreducibles, greedily minimized for Module kind); assignments are
// propagated through joins and the action, and full preservation is
// verified before emission. The callback returns false to stop early.
// Deterministic: generators in a fixed order, candidate values ascending.
void enumerate_homs(const SemimodulePtr& dom, const SemimodulePtr& cod, HomKind kind,
                    const HomConstraints& constraints,
                    const std::function<bool(const HomMap&)>& emit);

std::vector<HomMap> all_homs(const SemimodulePtr& dom, const SemimodulePtr& cod,
                             HomKind kind, const HomConstraints& constraints = {});

// Pointwise join of homs with common dom/cod (itself a hom).
HomMap hom_join(const HomMap& f, const HomMap& g);

// All v,0-preserving maps into the 2-element Boolean semifield.
std::vector<HomMap> boolean_homs(const SemimodulePtr& s);
std::vector<HomMap> boolean_homs(const AlgebraTable& a);

// Ker(f) = preimage of 0; an ideal of the domain for any hom.
IdealSet ker(const HomMap& f);

// Is there an A-isomorphism dom -> cod? Inverse hom verified explicitly.
std::optional<HomMap> find_isomorphism(const SemimodulePtr& dom,
                                       const SemimodulePtr& cod);

// Hom_B(A,B) as an A-semimodule with (a.f)(t) = f(ta), plus the hom list
// (position i of the carrier is homs[i]).
struct HomSemimodule {
  SemimodulePtr module;
  std::vector<HomMap> homs;
};
HomSemimodule hom_b_semimodule(const AlgebraPtr& a);

// Ker is an A-semimodule isomorphism Hom_B(A,B) -> Id(A).
Report hom_id_iso_check(const AlgebraPtr& a);

// Executable biconditional: Phi(a) = down-set of -a is an A-semimodule
// isomorphism A -> Id(A)  iff  A is an involutive semiring. Requires a
// 1-bounded residuated join-semilattice with bottom zero.
Report phi_check(const AlgebraPtr& a);

}  // namespace invsem

#endif
