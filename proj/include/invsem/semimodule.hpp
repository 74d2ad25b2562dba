#ifndef INVSEM_SEMIMODULE_HPP
#define INVSEM_SEMIMODULE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "invsem/algebra.hpp"
#include "invsem/report.hpp"

namespace invsem {

// A finite join-semilattice with zero carrying the action of a semiring.
// action[a*size + x] holds a.x (scalar row, module column).
struct SemimoduleTable {
  std::string name;
  AlgebraPtr over;
  int size = 0;
  BinaryTable join;
  Idx zero = 0;
  std::vector<Idx> action;
  std::vector<std::string> display;

  Idx join_of(Idx x, Idx y) const { return join[x * size + y]; }
  bool leq(Idx x, Idx y) const { return join_of(x, y) == y; }
  Idx act(Idx scalar, Idx x) const { return action[scalar * size + x]; }

  std::string element_name(Idx x) const;
};

using SemimodulePtr = std::shared_ptr<const SemimoduleTable>;

// Subsets of a carrier as bit masks; carriers are capped at 64 elements.
using Mask = std::uint64_t;

// Ideal of a join-semilattice: nonempty downward-closed join-closed subset
// (hence it contains the least element).
struct IdealSet {
  std::string of;
  int carrier_size = 0;
  Mask members = 0;

  bool contains(Idx x) const { return (members >> x) & 1u; }
  int count() const;
};

// The five semimodule axioms plus the commutative idempotent monoid laws
// for (M, v, 0). Shape problems throw input_error.
Report validate_semimodule(const SemimoduleTable& m);

// The 2-element Boolean semifield (or/and, with complement).
AlgebraPtr boolean_semifield();

// A as a left module over itself: a.x = ax.
SemimodulePtr regular(const AlgebraPtr& a);

// A^k with componentwise structure; element index = sum x_i |A|^i.
SemimodulePtr free_semimodule(const AlgebraPtr& a, int k);
Idx free_component(const SemimoduleTable& f, Idx t, int pos);
Idx free_index(const SemimoduleTable& f, const std::vector<Idx>& digits);
Idx free_unit_tuple(const SemimoduleTable& f, int pos);  // 1 at pos, 0 elsewhere

// Au = {xu | x in A} as a subsemimodule of the regular one.
SemimodulePtr cyclic(const AlgebraPtr& a, Idx u);

SemimodulePtr product(const std::vector<SemimodulePtr>& ms);
AlgebraPtr product_semiring(const std::vector<AlgebraPtr>& as);

// Any join-semilattice with a least element is a module over the Boolean
// semifield; used to run semilattice-level checks through the same code.
SemimodulePtr semimodule_from_semilattice(const AlgebraTable& a);
SemimodulePtr make_semilattice_module(int size, BinaryTable join, Idx zero,
                                      std::string name,
                                      std::vector<std::string> display = {});

// Least subset containing gens and 0, closed under join and the action.
std::vector<Idx> subsemimodule_generated(const SemimoduleTable& m,
                                         const std::vector<Idx>& gens);

// The subsemimodule on a closed carrier subset (ascending order expected).
SemimodulePtr restrict_semimodule(const SemimoduleTable& m,
                                  const std::vector<Idx>& elements,
                                  std::string name);

// All subsemimodule carriers, ordered by (size, mask).
std::vector<Mask> enumerate_subsemimodules(const SemimoduleTable& m);

// All ideals, ordered by (popcount, mask).
std::vector<IdealSet> ideals(const AlgebraTable& a);
std::vector<IdealSet> ideals(const SemimoduleTable& m);

// Id(A) as an A-semimodule: join = intersection (reverse inclusion order),
// zero = the full ideal A, action a.I = {x | xa in I}.
struct IdSemimodule {
  SemimodulePtr module;
  std::vector<IdealSet> ideal_list;  // position i describes carrier element i

  int index_of(Mask members) const;  // -1 when absent
};
IdSemimodule id_semimodule(const AlgebraPtr& a);

std::vector<Idx> join_irreducibles(const SemimoduleTable& m);

}  // namespace invsem

#endif
