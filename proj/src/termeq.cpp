#include "invsem/termeq.hpp"

#include <algorithm>

namespace invsem {

AlgebraTable irl_to_invsr(const AlgebraTable& a) {
  Report inv = is_involutive_rl(a);
  if (!inv.pass)
    throw unsupported_error("irl_to_invsr: not an involutive residuated lattice (" +
                            inv.detail + ")");
  auto rr = residuals(a);
  const int n = a.size;
  const Idx z = *a.zero;
  AlgebraTable out = a;
  UnaryTable ln(n), rn(n);
  for (Idx x = 0; x < n; ++x) {
    ln[x] = rr.tables->under[x * n + z];
    rn[x] = rr.tables->over[z * n + x];
  }
  out.lneg = std::move(ln);
  out.rneg = std::move(rn);
  return out;
}

AlgebraTable invsr_to_irl(const AlgebraTable& a) {
  Report inv = is_involutive_semiring(a);
  if (!inv.pass)
    throw unsupported_error("invsr_to_irl: not an involutive semiring (" + inv.detail +
                            ")");
  const int n = a.size;
  AlgebraTable out = a;
  out.zero = a.rneg_of(a.one);
  BinaryTable meet(n * n), lres(n * n), rres(n * n);
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y) {
      meet[x * n + y] = a.lneg_of(a.join_of(a.rneg_of(x), a.rneg_of(y)));
      lres[x * n + y] = a.lneg_of(a.mult_of(a.rneg_of(y), x));  // x\y
      rres[x * n + y] = a.rneg_of(a.mult_of(y, a.lneg_of(x)));  // x/y
    }
  out.meet = std::move(meet);
  out.lres = std::move(lres);
  out.rres = std::move(rres);
  return out;
}

namespace {

Report compare_tables(const char* check, const BinaryTable& got,
                      const BinaryTable& want, int n, const std::string& what) {
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      if (got[x * n + y] != want[x * n + y])
        return Report::fail(check, {x, y}, what + " differs after roundtrip");
  return Report::ok(check);
}

}  // namespace

Report roundtrip_check(const AlgebraTable& a) {
  constexpr const char* check = "roundtrip_check";
  const int n = a.size;

  bool as_invsr = false;
  if (a.has_negations()) as_invsr = is_involutive_semiring(a).pass;
  bool as_irl = false;
  if (a.zero && a.bottom()) as_irl = is_involutive_rl(a).pass;
  if (!as_invsr && !as_irl)
    throw unsupported_error("roundtrip_check: neither translation precondition holds");

  if (as_invsr) {
    AlgebraTable irl = invsr_to_irl(a);
    AlgebraTable back = irl_to_invsr(irl);
    if (auto r = compare_tables(check, back.join, a.join, n, "join"); !r.pass) return r;
    if (auto r = compare_tables(check, back.mult, a.mult, n, "mult"); !r.pass) return r;
    for (Idx x = 0; x < n; ++x) {
      if (back.lneg_of(x) != a.lneg_of(x))
        return Report::fail(check, {x}, "lneg differs after roundtrip");
      if (back.rneg_of(x) != a.rneg_of(x))
        return Report::fail(check, {x}, "rneg differs after roundtrip");
    }
  }
  if (as_irl) {
    auto rr = residuals(a);
    AlgebraTable invsr = irl_to_invsr(a);
    AlgebraTable back = invsr_to_irl(invsr);
    if (*back.zero != *a.zero)
      return Report::fail(check, {*back.zero, *a.zero}, "zero differs after roundtrip");
    if (auto r = compare_tables(check, *back.lres, rr.tables->under, n, "x\\z"); !r.pass)
      return r;
    if (auto r = compare_tables(check, *back.rres, rr.tables->over, n, "z/y"); !r.pass)
      return r;
    if (auto r = compare_tables(check, *back.meet, meet_table(a), n, "meet"); !r.pass)
      return r;
  }
  return Report::ok(check);
}

IntervalResult unit_interval(const AlgebraTable& a) {
  constexpr const char* check = "unit_interval";
  Report inv = is_involutive_semiring(a);
  if (!inv.pass)
    throw unsupported_error("unit_interval: not an involutive semiring (" + inv.detail +
                            ")");
  const Idx z = a.rneg_of(a.one);
  IntervalResult res;
  for (Idx x = 0; x < a.size; ++x)
    if (a.leq(z, x) && a.leq(x, a.one)) res.members.push_back(x);
  const auto inside = [&](Idx x) {
    return std::binary_search(res.members.begin(), res.members.end(), x);
  };

  if (a.mult_of(z, z) == z) {
    // 0*0 = 0: the interval must be a subalgebra; verify closure directly.
    if (!inside(z) || !inside(a.one)) {
      res.report = Report::fail(check, {z}, "constant outside [0,1] despite 0*0=0");
      return res;
    }
    for (Idx x : res.members)
      for (Idx y : res.members) {
        if (!inside(a.join_of(x, y))) {
          res.report =
              Report::fail(check, {x, y}, "[0,1] not closed under join despite 0*0=0");
          return res;
        }
        if (!inside(a.mult_of(x, y))) {
          res.report =
              Report::fail(check, {x, y}, "[0,1] not closed under mult despite 0*0=0");
          return res;
        }
      }
    for (Idx x : res.members)
      if (!inside(a.lneg_of(x)) || !inside(a.rneg_of(x))) {
        res.report =
            Report::fail(check, {x}, "[0,1] not closed under negation despite 0*0=0");
        return res;
      }
    res.report = Report::ok(check, "[0,1] is a subalgebra");
    return res;
  }

  // 0*0 != 0: the interval cannot be a subalgebra; confirm by direct search.
  if (!a.leq(z, a.one)) {
    res.report = Report::fail(
        check, {z}, res.members.empty() ? "0 !<= 1, interval is empty"
                                        : "0 !<= 1, constants outside the interval");
    return res;
  }
  for (Idx x : res.members)
    for (Idx y : res.members)
      if (!inside(a.mult_of(x, y))) {
        res.report =
            Report::fail(check, {x, y}, "[0,1] not closed under mult, as 0*0 != 0 forces");
        return res;
      }
  // Theorem cross-check: with 0 <= 1 and 0*0 != 0 a mult-closure violation
  // must exist at (0,0); reaching this point is an inconsistency.
  throw internal_error("unit_interval: 0*0 != 0 but [0,1] is closed");
}

Report interval_criterion(const AlgebraTable& a) {
  IntervalResult iv = unit_interval(a);
  const Idx z = a.rneg_of(a.one);
  const bool idem = a.mult_of(z, z) == z;
  if (iv.report.pass == idem)
    return Report::ok("interval_criterion");
  return Report::fail("interval_criterion", iv.report.witness,
                      "subalgebra verdict disagrees with 0*0 = 0");
}

Report involutive_identities(const AlgebraTable& a) {
  constexpr const char* check = "involutive_identities";
  AlgebraTable t = invsr_to_irl(a);  // throws unless involutive
  const int n = t.size;
  for (Idx x = 0; x < n; ++x) {
    if (t.lneg_of(t.rneg_of(x)) != x) return Report::fail(check, {x}, "~-x != x");
    if (t.rneg_of(t.lneg_of(x)) != x) return Report::fail(check, {x}, "-~x != x");
    if (t.rneg_of(x) != t.rneg_of(t.lneg_of(t.rneg_of(x))))
      return Report::fail(check, {x}, "-x != -~-x");
  }
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      if (t.leq(x, y)) {
        if (!t.leq(t.lneg_of(y), t.lneg_of(x)))
          return Report::fail(check, {x, y}, "~ is not order-reversing");
        if (!t.leq(t.rneg_of(y), t.rneg_of(x)))
          return Report::fail(check, {x, y}, "- is not order-reversing");
      }
  const auto meet_of = [&](Idx x, Idx y) { return (*t.meet)[x * n + y]; };
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y) {
      if (meet_of(x, t.join_of(x, y)) != x)
        return Report::fail(check, {x, y}, "absorption x/\\(xvy) = x fails");
      if (t.join_of(x, meet_of(x, y)) != x)
        return Report::fail(check, {x, y}, "absorption xv(x/\\y) = x fails");
    }
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      for (Idx z = 0; z < n; ++z) {
        const bool below = t.leq(t.mult_of(x, y), z);
        if (below != t.leq(y, (*t.lres)[x * n + z]))
          return Report::fail(check, {x, y, z}, "(res) fails for derived x\\z");
        if (below != t.leq(x, (*t.rres)[z * n + y]))
          return Report::fail(check, {x, y, z}, "(res) fails for derived z/y");
      }
  return Report::ok(check);
}

Report galois_identities(const AlgebraTable& a) {
  constexpr const char* check = "galois_identities";
  if (!a.zero) throw unsupported_error("galois_identities: zero not declared");
  auto rr = residuals(a);
  if (!rr.report.pass)
    throw unsupported_error("galois_identities: not residuated (" + rr.report.detail +
                            ")");
  const int n = a.size;
  const Idx z = *a.zero;
  const auto lneg_of = [&](Idx x) { return rr.tables->under[x * n + z]; };
  const auto rneg_of = [&](Idx x) { return rr.tables->over[z * n + x]; };
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y) {
      const bool below = a.leq(a.mult_of(x, y), z);
      if (below != a.leq(x, rneg_of(y)))
        return Report::fail(check, {x, y}, "x <= 0/y iff xy <= 0 fails");
      if (below != a.leq(y, lneg_of(x)))
        return Report::fail(check, {x, y}, "xy <= 0 iff y <= x\\0 fails");
    }
  for (Idx x = 0; x < n; ++x)
    if (rneg_of(lneg_of(rneg_of(x))) != rneg_of(x))
      return Report::fail(check, {x}, "-~-x != -x");
  return Report::ok(check);
}

}  // namespace invsem
