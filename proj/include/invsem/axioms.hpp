#ifndef INVSEM_AXIOMS_HPP
#define INVSEM_AXIOMS_HPP

#include <optional>

#include "invsem/algebra.hpp"
#include "invsem/report.hpp"

namespace invsem {

// Residual tables: under[x*n+z] = x\z, over[z*n+y] = z/y.
struct Residuals {
  BinaryTable under;
  BinaryTable over;
};

struct ResidualsResult {
  Report report;
  std::optional<Residuals> tables;  // present iff report.pass
};

// Computes x\z = v{y | x*y <= z} and z/y = v{x | x*y <= z} and verifies
//   x*y <= z  iff  y <= x\z  iff  x <= z/y
// pointwise. Fails with the first violating (x,y,z) when the algebra is
// not residuated.
ResidualsResult residuals(const AlgebraTable& a);

// x^k in the mult monoid, k >= 0.
Idx power(const AlgebraTable& a, Idx x, int k);

Report is_idempotent_semiring(const AlgebraTable& a);
Report is_one_bounded(const AlgebraTable& a);
Report is_commutative(const AlgebraTable& a);

// x <= y  iff  x * ~y <= -1  iff  -y * x <= -1, with -1 = rneg(one).
Report is_involutive_semiring(const AlgebraTable& a);

// Equality form over a bottom zero: x <= y  iff  x * ~y = 0  iff  -y * x = 0.
Report is_one_bounded_involutive(const AlgebraTable& a);

// ~-x = x = -~x with ~x = x\0 and -x = 0/x computed from residuals.
Report is_involutive_rl(const AlgebraTable& a);

// Commutative idempotent semiring with rneg satisfying
//   x <= y iff x * -y = 0   and   x v y = -(-x * -(-x * y)).
Report is_mv_semiring(const AlgebraTable& a);

Report is_n_potent(const AlgebraTable& a, int n);
Report is_n_vn_regular(const AlgebraTable& a, int n);
Report is_nilpotent_semiring(const AlgebraTable& a);
Report is_mult_idempotent(const AlgebraTable& a);

// Distributive bounded lattice with complements, zero at the bottom and
// mult equal to the derived meet.
Report is_boolean_algebra(const AlgebraTable& a);

}  // namespace invsem

#endif
