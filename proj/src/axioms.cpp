#include "invsem/axioms.hpp"

namespace invsem {

namespace {

// Folds a validate failure into the calling predicate's report.
std::optional<Report> prevalidate(const AlgebraTable& a, const char* check) {
  Report v = validate(a);
  if (v.pass) return std::nullopt;
  return Report::fail(check, v.witness, "validate: " + v.detail);
}

}  // namespace

ResidualsResult residuals(const AlgebraTable& a) {
  if (auto bad = prevalidate(a, "residuals")) return {*bad, std::nullopt};
  auto bot = a.bottom();
  if (!bot) throw unsupported_error("residuals: no least element");
  const int n = a.size;
  Residuals r;
  r.under.assign(static_cast<size_t>(n) * n, *bot);
  r.over.assign(static_cast<size_t>(n) * n, *bot);
  for (Idx x = 0; x < n; ++x)
    for (Idx z = 0; z < n; ++z) {
      Idx acc = *bot;
      for (Idx y = 0; y < n; ++y)
        if (a.leq(a.mult_of(x, y), z)) acc = a.join_of(acc, y);
      r.under[x * n + z] = acc;
    }
  for (Idx z = 0; z < n; ++z)
    for (Idx y = 0; y < n; ++y) {
      Idx acc = *bot;
      for (Idx x = 0; x < n; ++x)
        if (a.leq(a.mult_of(x, y), z)) acc = a.join_of(acc, x);
      r.over[z * n + y] = acc;
    }
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      for (Idx z = 0; z < n; ++z) {
        const bool below = a.leq(a.mult_of(x, y), z);
        if (below != a.leq(y, r.under[x * n + z]))
          return {Report::fail("residuals", {x, y, z},
                               "x*y <= z iff y <= x\\z fails; not residuated"),
                  std::nullopt};
        if (below != a.leq(x, r.over[z * n + y]))
          return {Report::fail("residuals", {x, y, z},
                               "x*y <= z iff x <= z/y fails; not residuated"),
                  std::nullopt};
      }
  return {Report::ok("residuals"), std::move(r)};
}

Idx power(const AlgebraTable& a, Idx x, int k) {
  Idx acc = a.one;
  for (int i = 0; i < k; ++i) acc = a.mult_of(acc, x);
  return acc;
}

Report is_idempotent_semiring(const AlgebraTable& a) {
  if (auto bad = prevalidate(a, "is_idempotent_semiring")) return *bad;
  if (!a.zero) throw unsupported_error("is_idempotent_semiring: zero not declared");
  const Idx z = *a.zero;
  if (a.join_of(a.one, a.one) != a.one)
    return Report::fail("is_idempotent_semiring", {a.one}, "1 v 1 != 1");
  for (Idx x = 0; x < a.size; ++x)
    if (a.join_of(x, z) != x)
      return Report::fail("is_idempotent_semiring", {x}, "x v 0 != x");
  for (Idx x = 0; x < a.size; ++x)
    if (a.mult_of(x, z) != z || a.mult_of(z, x) != z)
      return Report::fail("is_idempotent_semiring", {x}, "0 is not absorbing");
  return Report::ok("is_idempotent_semiring");
}

Report is_one_bounded(const AlgebraTable& a) {
  if (auto bad = prevalidate(a, "is_one_bounded")) return *bad;
  for (Idx x = 0; x < a.size; ++x)
    if (a.join_of(x, a.one) != a.one)
      return Report::fail("is_one_bounded", {x}, "x v 1 != 1");
  return Report::ok("is_one_bounded");
}

Report is_commutative(const AlgebraTable& a) {
  if (auto bad = prevalidate(a, "is_commutative")) return *bad;
  for (Idx x = 0; x < a.size; ++x)
    for (Idx y = 0; y < a.size; ++y)
      if (a.mult_of(x, y) != a.mult_of(y, x))
        return Report::fail("is_commutative", {x, y}, "x*y != y*x");
  return Report::ok("is_commutative");
}

Report is_involutive_semiring(const AlgebraTable& a) {
  if (auto bad = prevalidate(a, "is_involutive_semiring")) return *bad;
  if (!a.has_negations())
    throw unsupported_error("is_involutive_semiring: lneg/rneg not declared");
  const Idx minus_one = a.rneg_of(a.one);
  if (a.zero && *a.zero != minus_one)
    return Report::fail("is_involutive_semiring", {*a.zero, minus_one},
                        "declared zero differs from -1");
  for (Idx x = 0; x < a.size; ++x)
    for (Idx y = 0; y < a.size; ++y) {
      const bool le = a.leq(x, y);
      if (le != a.leq(a.mult_of(x, a.lneg_of(y)), minus_one))
        return Report::fail("is_involutive_semiring", {x, y},
                            "x <= y iff x*~y <= -1 fails");
      if (le != a.leq(a.mult_of(a.rneg_of(y), x), minus_one))
        return Report::fail("is_involutive_semiring", {x, y},
                            "x <= y iff -y*x <= -1 fails");
    }
  return Report::ok("is_involutive_semiring");
}

Report is_one_bounded_involutive(const AlgebraTable& a) {
  if (auto bad = prevalidate(a, "is_one_bounded_involutive")) return *bad;
  if (!a.has_negations())
    throw unsupported_error("is_one_bounded_involutive: lneg/rneg not declared");
  if (!a.zero) throw unsupported_error("is_one_bounded_involutive: zero not declared");
  auto bot = a.bottom();
  if (!bot || *bot != *a.zero)
    throw unsupported_error("is_one_bounded_involutive: zero is not the least element");
  const Idx z = *a.zero;
  if (a.rneg_of(a.one) != z)
    return Report::fail("is_one_bounded_involutive", {a.rneg_of(a.one), z},
                        "-1 differs from the declared zero");
  for (Idx x = 0; x < a.size; ++x)
    for (Idx y = 0; y < a.size; ++y) {
      const bool le = a.leq(x, y);
      if (le != (a.mult_of(x, a.lneg_of(y)) == z))
        return Report::fail("is_one_bounded_involutive", {x, y},
                            "x <= y iff x*~y = 0 fails");
      if (le != (a.mult_of(a.rneg_of(y), x) == z))
        return Report::fail("is_one_bounded_involutive", {x, y},
                            "x <= y iff -y*x = 0 fails");
    }
  return Report::ok("is_one_bounded_involutive");
}

Report is_involutive_rl(const AlgebraTable& a) {
  if (!a.zero) throw unsupported_error("is_involutive_rl: zero not declared");
  auto rr = residuals(a);
  if (!rr.report.pass)
    return Report::fail("is_involutive_rl", rr.report.witness,
                        "residuals: " + rr.report.detail);
  const int n = a.size;
  const Idx z = *a.zero;
  const auto lneg_of = [&](Idx x) { return rr.tables->under[x * n + z]; };
  const auto rneg_of = [&](Idx x) { return rr.tables->over[z * n + x]; };
  for (Idx x = 0; x < n; ++x) {
    if (lneg_of(rneg_of(x)) != x)
      return Report::fail("is_involutive_rl", {x}, "~-x != x");
    if (rneg_of(lneg_of(x)) != x)
      return Report::fail("is_involutive_rl", {x}, "-~x != x");
  }
  return Report::ok("is_involutive_rl");
}

Report is_mv_semiring(const AlgebraTable& a) {
  Report idem = is_idempotent_semiring(a);
  if (!idem.pass)
    throw unsupported_error("is_mv_semiring: not an idempotent semiring (" +
                            idem.detail + ")");
  Report comm = is_commutative(a);
  if (!comm.pass) throw unsupported_error("is_mv_semiring: not commutative");
  if (!a.rneg) throw unsupported_error("is_mv_semiring: rneg not declared");
  const Idx z = *a.zero;
  for (Idx x = 0; x < a.size; ++x)
    for (Idx y = 0; y < a.size; ++y)
      if (a.leq(x, y) != (a.mult_of(x, a.rneg_of(y)) == z))
        return Report::fail("is_mv_semiring", {x, y}, "x <= y iff x*-y = 0 fails");
  for (Idx x = 0; x < a.size; ++x)
    for (Idx y = 0; y < a.size; ++y) {
      const Idx inner = a.mult_of(a.rneg_of(x), y);
      const Idx rhs = a.rneg_of(a.mult_of(a.rneg_of(x), a.rneg_of(inner)));
      if (a.join_of(x, y) != rhs)
        return Report::fail("is_mv_semiring", {x, y},
                            "x v y = -(-x * -(-x*y)) fails");
    }
  return Report::ok("is_mv_semiring");
}

Report is_n_potent(const AlgebraTable& a, int n) {
  if (auto bad = prevalidate(a, "is_n_potent")) return *bad;
  if (n < 1) throw input_error("is_n_potent: n must be >= 1");
  for (Idx x = 0; x < a.size; ++x) {
    const Idx p = power(a, x, n);
    if (a.mult_of(p, x) != p)
      return Report::fail("is_n_potent", {x}, "x^n != x^(n+1)");
  }
  return Report::ok("is_n_potent");
}

Report is_n_vn_regular(const AlgebraTable& a, int n) {
  if (auto bad = prevalidate(a, "is_n_vn_regular")) return *bad;
  if (n < 1) throw input_error("is_n_vn_regular: n must be >= 1");
  for (Idx x = 0; x < a.size; ++x) {
    const Idx p = power(a, x, n);
    bool found = false;
    for (Idx b = 0; b < a.size && !found; ++b)
      found = a.mult_of(a.mult_of(p, b), p) == p;
    if (!found)
      return Report::fail("is_n_vn_regular", {x}, "no b with x^n = x^n*b*x^n");
  }
  return Report::ok("is_n_vn_regular");
}

Report is_nilpotent_semiring(const AlgebraTable& a) {
  if (auto bad = prevalidate(a, "is_nilpotent_semiring")) return *bad;
  if (!a.zero) throw unsupported_error("is_nilpotent_semiring: zero not declared");
  for (Idx x = 0; x < a.size; ++x) {
    if (x == a.one) continue;
    bool vanishes = false;
    Idx p = a.one;
    // Powers of x cycle within `size` steps, so this bound is complete.
    for (int k = 1; k <= a.size && !vanishes; ++k) {
      p = a.mult_of(p, x);
      vanishes = p == *a.zero;
    }
    if (!vanishes)
      return Report::fail("is_nilpotent_semiring", {x}, "no power of x is 0");
  }
  return Report::ok("is_nilpotent_semiring");
}

Report is_mult_idempotent(const AlgebraTable& a) {
  if (auto bad = prevalidate(a, "is_mult_idempotent")) return *bad;
  for (Idx x = 0; x < a.size; ++x)
    if (a.mult_of(x, x) != x)
      return Report::fail("is_mult_idempotent", {x}, "x*x != x");
  return Report::ok("is_mult_idempotent");
}

Report is_boolean_algebra(const AlgebraTable& a) {
  if (auto bad = prevalidate(a, "is_boolean_algebra")) return *bad;
  if (!a.zero) throw unsupported_error("is_boolean_algebra: zero not declared");
  auto bot = a.bottom();
  if (!bot) return Report::fail("is_boolean_algebra", {}, "no least element");
  if (*bot != *a.zero)
    return Report::fail("is_boolean_algebra", {*a.zero},
                        "zero is not the least element");
  const int n = a.size;
  const BinaryTable mt = meet_table(a);
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      if (a.mult_of(x, y) != mt[x * n + y])
        return Report::fail("is_boolean_algebra", {x, y}, "mult differs from meet");
  Report dist = is_lattice_distributive(a);
  if (!dist.pass)
    return Report::fail("is_boolean_algebra", dist.witness, "lattice not distributive");
  const Idx topv = *a.top();  // finite join-semilattice always has a top
  for (Idx x = 0; x < n; ++x) {
    bool complemented = false;
    for (Idx c = 0; c < n && !complemented; ++c)
      complemented = a.join_of(x, c) == topv && mt[x * n + c] == *bot;
    if (!complemented)
      return Report::fail("is_boolean_algebra", {x}, "element has no complement");
  }
  return Report::ok("is_boolean_algebra");
}

}  // namespace invsem
