#include "invsem/algebra.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace invsem {

std::optional<Idx> AlgebraTable::bottom() const {
  for (Idx b = 0; b < size; ++b) {
    bool least = true;
    for (Idx x = 0; x < size && least; ++x) least = leq(b, x);
    if (least) return b;
  }
  return std::nullopt;
}

std::optional<Idx> AlgebraTable::top() const {
  for (Idx t = 0; t < size; ++t) {
    bool greatest = true;
    for (Idx x = 0; x < size && greatest; ++x) greatest = leq(x, t);
    if (greatest) return t;
  }
  return std::nullopt;
}

std::string AlgebraTable::element_name(Idx x) const {
  if (x >= 0 && x < static_cast<Idx>(display.size()) && !display[x].empty())
    return display[x];
  return std::to_string(x);
}

Report Poset::validate() const {
  const int n = size;
  for (Idx x = 0; x < n; ++x)
    if (!leq(x, x)) return Report::fail("poset", {x}, "not reflexive");
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      if (x != y && leq(x, y) && leq(y, x))
        return Report::fail("poset", {x, y}, "not antisymmetric");
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      for (Idx z = 0; z < n; ++z)
        if (leq(x, y) && leq(y, z) && !leq(x, z))
          return Report::fail("poset", {x, y, z}, "not transitive");
  return Report::ok("poset");
}

namespace {

void check_shape(const AlgebraTable& a) {
  const int n = a.size;
  if (n <= 0) throw input_error("algebra '" + a.name + "': size must be positive");
  const auto bad = [n](Idx v) { return v < 0 || v >= n; };
  if (static_cast<int>(a.join.size()) != n * n)
    throw input_error("algebra '" + a.name + "': join table is not " +
                      std::to_string(n) + "x" + std::to_string(n));
  if (static_cast<int>(a.mult.size()) != n * n)
    throw input_error("algebra '" + a.name + "': mult table is not " +
                      std::to_string(n) + "x" + std::to_string(n));
  for (Idx v : a.join)
    if (bad(v)) throw input_error("algebra '" + a.name + "': join entry out of range");
  for (Idx v : a.mult)
    if (bad(v)) throw input_error("algebra '" + a.name + "': mult entry out of range");
  if (bad(a.one)) throw input_error("algebra '" + a.name + "': one out of range");
  if (a.zero && bad(*a.zero))
    throw input_error("algebra '" + a.name + "': zero out of range");
  for (const auto* t : {&a.lneg, &a.rneg}) {
    if (!t->has_value()) continue;
    if (static_cast<int>((*t)->size()) != n)
      throw input_error("algebra '" + a.name + "': unary table has wrong length");
    for (Idx v : **t)
      if (bad(v)) throw input_error("algebra '" + a.name + "': unary entry out of range");
  }
}

}  // namespace

Report validate(const AlgebraTable& a) {
  check_shape(a);
  const int n = a.size;
  for (Idx x = 0; x < n; ++x)
    if (a.join_of(x, x) != x)
      return Report::fail("validate", {x}, "join not idempotent at " + a.element_name(x));
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      if (a.join_of(x, y) != a.join_of(y, x))
        return Report::fail("validate", {x, y}, "join not commutative");
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      for (Idx z = 0; z < n; ++z)
        if (a.join_of(a.join_of(x, y), z) != a.join_of(x, a.join_of(y, z)))
          return Report::fail("validate", {x, y, z}, "join not associative");
  for (Idx x = 0; x < n; ++x)
    if (a.mult_of(a.one, x) != x || a.mult_of(x, a.one) != x)
      return Report::fail("validate", {x},
                          a.element_name(a.one) + " is not a multiplicative unit");
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      for (Idx z = 0; z < n; ++z)
        if (a.mult_of(a.mult_of(x, y), z) != a.mult_of(x, a.mult_of(y, z)))
          return Report::fail("validate", {x, y, z}, "mult not associative");
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      for (Idx z = 0; z < n; ++z) {
        if (a.mult_of(x, a.join_of(y, z)) != a.join_of(a.mult_of(x, y), a.mult_of(x, z)))
          return Report::fail("validate", {x, y, z}, "mult does not left-distribute over join");
        if (a.mult_of(a.join_of(x, y), z) != a.join_of(a.mult_of(x, z), a.mult_of(y, z)))
          return Report::fail("validate", {x, y, z}, "mult does not right-distribute over join");
      }
  return Report::ok("validate");
}

Poset order_from_join(const AlgebraTable& a) {
  Poset p;
  p.size = a.size;
  p.leq_table.assign(static_cast<size_t>(a.size) * a.size, 0);
  for (Idx x = 0; x < a.size; ++x)
    for (Idx y = 0; y < a.size; ++y)
      p.leq_table[x * a.size + y] = a.leq(x, y) ? 1 : 0;
  return p;
}

Idx derived_meet(const AlgebraTable& a, Idx x, Idx y) {
  auto bot = a.bottom();
  if (!bot) throw unsupported_error("derived_meet: no least element");
  Idx acc = *bot;
  for (Idx z = 0; z < a.size; ++z)
    if (a.leq(z, x) && a.leq(z, y)) acc = a.join_of(acc, z);
  // acc is a common lower bound because the set of common lower bounds is
  // closed under join; hence it is the greatest one.
  if (!a.leq(acc, x) || !a.leq(acc, y))
    throw internal_error("derived_meet: lower bounds not join-closed");
  return acc;
}

BinaryTable meet_table(const AlgebraTable& a) {
  BinaryTable m(static_cast<size_t>(a.size) * a.size);
  for (Idx x = 0; x < a.size; ++x)
    for (Idx y = 0; y < a.size; ++y) m[x * a.size + y] = derived_meet(a, x, y);
  return m;
}

std::vector<Idx> join_irreducibles(const Poset& p, const BinaryTable& join) {
  const int n = p.size;
  std::optional<Idx> least;
  for (Idx b = 0; b < n && !least; ++b) {
    bool ok = true;
    for (Idx x = 0; x < n && ok; ++x) ok = p.leq(b, x);
    if (ok) least = b;
  }
  std::vector<Idx> out;
  for (Idx x = 0; x < n; ++x) {
    if (least && x == *least) continue;
    bool reducible = false;
    for (Idx u = 0; u < n && !reducible; ++u)
      for (Idx v = 0; v < n && !reducible; ++v)
        if (p.lt(u, x) && p.lt(v, x) && join[u * n + v] == x) reducible = true;
    if (!reducible) out.push_back(x);
  }
  return out;
}

std::vector<Idx> join_irreducibles(const AlgebraTable& a) {
  return join_irreducibles(order_from_join(a), a.join);
}

Report is_lattice_distributive(const AlgebraTable& a) {
  const BinaryTable mt = meet_table(a);
  const int n = a.size;
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      for (Idx z = 0; z < n; ++z) {
        Idx lhs = mt[x * n + a.join_of(y, z)];
        Idx rhs = a.join_of(mt[x * n + y], mt[x * n + z]);
        if (lhs != rhs)
          return Report::fail("is_lattice_distributive", {x, y, z},
                              "x/\\(yvz) != (x/\\y)v(x/\\z)");
      }
  return Report::ok("is_lattice_distributive");
}

AlgebraTable apply_permutation(const AlgebraTable& a, const std::vector<Idx>& perm) {
  const int n = a.size;
  AlgebraTable b;
  b.name = a.name;
  b.size = n;
  b.join.resize(n * n);
  b.mult.resize(n * n);
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y) {
      b.join[perm[x] * n + perm[y]] = perm[a.join_of(x, y)];
      b.mult[perm[x] * n + perm[y]] = perm[a.mult_of(x, y)];
    }
  b.one = perm[a.one];
  if (a.zero) b.zero = perm[*a.zero];
  for (const auto* src : {&a.lneg, &a.rneg}) {
    if (!src->has_value()) continue;
    UnaryTable t(n);
    for (Idx x = 0; x < n; ++x) t[perm[x]] = perm[(**src)[x]];
    if (src == &a.lneg)
      b.lneg = std::move(t);
    else
      b.rneg = std::move(t);
  }
  if (!a.display.empty()) {
    b.display.resize(n);
    for (Idx x = 0; x < n; ++x) b.display[perm[x]] = a.display[x];
  }
  return b;
}

namespace {

// Encoding of the fundamental tables under a fixed relabeling. Derived
// attachments and display names do not affect the key.
std::string encode(const AlgebraTable& a) {
  std::string s;
  s.reserve(4 + a.join.size() + a.mult.size() + 2 * a.size);
  s.push_back(static_cast<char>(a.size));
  char flags = 0;
  if (a.zero) flags |= 1;
  if (a.lneg) flags |= 2;
  if (a.rneg) flags |= 4;
  if (a.zero && *a.zero == a.one) flags |= 8;
  s.push_back(flags);
  for (Idx v : a.join) s.push_back(static_cast<char>(v));
  for (Idx v : a.mult) s.push_back(static_cast<char>(v));
  if (a.lneg)
    for (Idx v : *a.lneg) s.push_back(static_cast<char>(v));
  if (a.rneg)
    for (Idx v : *a.rneg) s.push_back(static_cast<char>(v));
  return s;
}

}  // namespace

CanonicalKey canonical_key(const AlgebraTable& a) {
  const int n = a.size;
  if (n > 12) throw unsupported_error("canonical_key: carrier too large");
  // Constants pin their images: one -> 0, and a distinct zero -> 1. An
  // isomorphism must map constants to constants, so minimizing over the
  // constrained permutations still separates isomorphism classes exactly.
  const bool pin_zero = a.zero.has_value() && *a.zero != a.one && n >= 2;
  std::vector<Idx> sources;
  for (Idx x = 0; x < n; ++x)
    if (x != a.one && !(pin_zero && x == *a.zero)) sources.push_back(x);
  std::vector<Idx> targets;
  for (Idx t = 0; t < n; ++t)
    if (t != 0 && !(pin_zero && t == 1)) targets.push_back(t);

  std::vector<Idx> perm(n);
  std::string best;
  do {
    perm[a.one] = 0;
    if (pin_zero) perm[*a.zero] = 1;
    for (size_t i = 0; i < sources.size(); ++i) perm[sources[i]] = targets[i];
    std::string cand = encode(apply_permutation(a, perm));
    if (best.empty() || cand < best) best = std::move(cand);
  } while (std::next_permutation(targets.begin(), targets.end()));
  return CanonicalKey{std::move(best)};
}

}  // namespace invsem
