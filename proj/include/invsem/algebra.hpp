#ifndef INVSEM_ALGEBRA_HPP
#define INVSEM_ALGEBRA_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "invsem/report.hpp"

namespace invsem {

using Idx = int;
using UnaryTable = std::vector<Idx>;   // length n
using BinaryTable = std::vector<Idx>;  // n*n, row-major

// A finite algebra presented by operation tables over indices 0..n-1.
// Always carries a join and a mult table with multiplicative unit `one`;
// the constant 0 and the two negations ~ (lneg), - (rneg) are optional.
// Translations may attach derived tables (meet and the two residuals).
struct AlgebraTable {
  std::string name;
  int size = 0;
  BinaryTable join;
  BinaryTable mult;
  Idx one = 0;
  std::optional<Idx> zero;
  std::optional<UnaryTable> lneg;  // ~x
  std::optional<UnaryTable> rneg;  // -x
  std::vector<std::string> display;  // cosmetic element names, may be empty

  // Derived attachments (filled by the termeq translations).
  std::optional<BinaryTable> meet;  // x /\ y
  std::optional<BinaryTable> lres;  // lres[x*n+z] = x\z
  std::optional<BinaryTable> rres;  // rres[z*n+y] = z/y

  Idx join_of(Idx x, Idx y) const { return join[x * size + y]; }
  Idx mult_of(Idx x, Idx y) const { return mult[x * size + y]; }
  bool leq(Idx x, Idx y) const { return join_of(x, y) == y; }
  Idx lneg_of(Idx x) const { return (*lneg)[x]; }
  Idx rneg_of(Idx x) const { return (*rneg)[x]; }

  bool has_negations() const { return lneg.has_value() && rneg.has_value(); }

  // Least/greatest element of the derived order, if present.
  std::optional<Idx> bottom() const;
  std::optional<Idx> top() const;

  std::string element_name(Idx x) const;
};

using AlgebraPtr = std::shared_ptr<const AlgebraTable>;

// Finite partial order as an explicit relation matrix.
struct Poset {
  int size = 0;
  std::vector<char> leq_table;  // n*n

  bool leq(Idx x, Idx y) const { return leq_table[x * size + y] != 0; }
  bool lt(Idx x, Idx y) const { return leq(x, y) && x != y; }

  // Reflexivity, antisymmetry, transitivity.
  Report validate() const;
};

// Semiring-table well-formedness: shapes and ranges (throws input_error),
// then join semilattice laws, unit and associativity of mult, and both
// distributive laws. Optional unary tables are only checked for totality.
Report validate(const AlgebraTable& a);

// The natural order x <= y  iff  x v y = y.
Poset order_from_join(const AlgebraTable& a);

// Greatest lower bound in the derived order. Requires a least element
// (then the finite join-semilattice has all meets).
Idx derived_meet(const AlgebraTable& a, Idx x, Idx y);
BinaryTable meet_table(const AlgebraTable& a);

// Elements that are neither the least element nor the join of two
// strictly smaller elements.
std::vector<Idx> join_irreducibles(const Poset& p, const BinaryTable& join);
std::vector<Idx> join_irreducibles(const AlgebraTable& a);

// x /\ (y v z) = (x /\ y) v (x /\ z) over all triples, meets derived.
Report is_lattice_distributive(const AlgebraTable& a);

// Byte string whose equality coincides with isomorphism of the pointed
// algebras (constants are respected by the permutations considered).
struct CanonicalKey {
  std::string bytes;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey& a, const CanonicalKey& b) {
    return a.bytes <=> b.bytes;
  }
};

CanonicalKey canonical_key(const AlgebraTable& a);

// Permutes carrier indices: element x becomes perm[x]. Constants, tables
// and display names are relabeled consistently.
AlgebraTable apply_permutation(const AlgebraTable& a, const std::vector<Idx>& perm);

}  // namespace invsem

#endif
