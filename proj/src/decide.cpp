#include "invsem/decide.hpp"

#include <algorithm>
#include <bit>

#include "invsem/axioms.hpp"

namespace invsem {

namespace {

constexpr long long kMaterializeCap = 4096;

std::vector<Idx> mask_elements(Mask mk, int n) {
  std::vector<Idx> out;
  for (Idx x = 0; x < n; ++x)
    if ((mk >> x) & 1u) out.push_back(x);
  return out;
}

void require_same_algebra(const AlgebraPtr& a, const SemimoduleTable& m,
                          const char* who) {
  if (m.over == a) return;
  if (m.over->join == a->join && m.over->mult == a->mult && m.over->one == a->one &&
      m.over->zero == a->zero)
    return;
  throw input_error(std::string(who) + ": semimodule is not over the given semiring");
}

void require_valid_module(const AlgebraPtr& a, const SemimoduleTable& m,
                          const char* who) {
  require_same_algebra(a, m, who);
  Report v = validate_semimodule(m);
  if (!v.pass)
    throw unsupported_error(std::string(who) + ": semimodule axioms fail: " + v.detail);
}

HomMap zero_hom(const SemimodulePtr& dom, const SemimodulePtr& cod) {
  return HomMap{dom, cod, HomKind::Module, std::vector<Idx>(dom->size, cod->zero)};
}

// Largest hom in `homs` whose value at probe[x] stays below x, for every x
// of the inner semimodule. Hom sets are closed under pointwise join, so
// folding the admissible ones yields the maximum.
HomMap max_bounded_hom(const std::vector<HomMap>& homs, const SemimodulePtr& factor,
                       const SemimodulePtr& inner,
                       const std::vector<Idx>& probe) {
  HomMap best = zero_hom(factor, inner);
  for (const HomMap& h : homs) {
    bool admissible = true;
    for (Idx x = 0; x < inner->size && admissible; ++x)
      admissible = inner->leq(h.map[probe[x]], x);
    if (admissible) best = hom_join(best, h);
  }
  return best;
}

void materialize(Retraction& r) {
  long long total = 1;
  for (int j = 0; j < r.arity; ++j) {
    total *= r.factor->size;
    if (total > kMaterializeCap) return;
  }
  SemimodulePtr outer;
  if (r.arity == 0) {
    outer = free_semimodule(r.inner->over, 0);
  } else {
    outer = product(std::vector<SemimodulePtr>(r.arity, r.factor));
  }
  const auto index_of = [&](const std::vector<Idx>& tuple) {
    Idx out = 0, stride = 1;
    for (int j = 0; j < r.arity; ++j) {
      out += tuple[j] * stride;
      stride *= r.factor->size;
    }
    return out;
  };
  HomMap sec{r.inner, outer, HomKind::Module, {}};
  sec.map.resize(r.inner->size);
  for (Idx x = 0; x < r.inner->size; ++x) sec.map[x] = index_of(r.section[x]);
  HomMap ret{outer, r.inner, HomKind::Module, {}};
  ret.map.resize(outer->size);
  for (Idx t = 0; t < outer->size; ++t) {
    Idx acc = r.inner->zero;
    Idx rem = t;
    for (int j = 0; j < r.arity; ++j) {
      acc = r.inner->join_of(acc, r.column_retract[j][rem % r.factor->size]);
      rem /= r.factor->size;
    }
    ret.map[t] = acc;
  }
  r.outer = outer;
  r.section_map = std::move(sec);
  r.retract_map = std::move(ret);
}

}  // namespace

Report verify_retraction(const Retraction& r) {
  constexpr const char* check = "verify_retraction";
  for (int j = 0; j < r.arity; ++j) {
    HomMap col{r.factor, r.inner, HomKind::Module, r.column_retract[j]};
    if (Report v = verify_hom(col); !v.pass)
      return Report::fail(check, v.witness, "retract column " + std::to_string(j) +
                                                " is not a hom: " + v.detail);
    HomMap sec{r.inner, r.factor, HomKind::Module, {}};
    sec.map.resize(r.inner->size);
    for (Idx x = 0; x < r.inner->size; ++x) sec.map[x] = r.section[x][j];
    if (Report v = verify_hom(sec); !v.pass)
      return Report::fail(check, v.witness, "section column " + std::to_string(j) +
                                                " is not a hom: " + v.detail);
  }
  for (Idx x = 0; x < r.inner->size; ++x) {
    Idx acc = r.inner->zero;
    for (int j = 0; j < r.arity; ++j)
      acc = r.inner->join_of(acc, r.column_retract[j][r.section[x][j]]);
    if (acc != x)
      return Report::fail(check, {x}, "retract(section(x)) != x");
  }
  if (r.section_map && r.retract_map) {
    if (Report v = verify_hom(*r.section_map); !v.pass)
      return Report::fail(check, v.witness, "materialized section: " + v.detail);
    if (Report v = verify_hom(*r.retract_map); !v.pass)
      return Report::fail(check, v.witness, "materialized retract: " + v.detail);
    for (Idx x = 0; x < r.inner->size; ++x)
      if (r.retract_map->map[r.section_map->map[x]] != x)
        return Report::fail(check, {x}, "materialized composition is not the identity");
  }
  return Report::ok(check);
}

std::vector<Idx> minimized_generators(const SemimoduleTable& m) {
  std::vector<Idx> gens = join_irreducibles(m);
  for (size_t i = 0; i < gens.size();) {
    std::vector<Idx> rest;
    for (size_t j = 0; j < gens.size(); ++j)
      if (j != i) rest.push_back(gens[j]);
    const auto span = subsemimodule_generated(m, rest);
    if (std::binary_search(span.begin(), span.end(), gens[i]))
      gens.erase(gens.begin() + static_cast<long>(i));
    else
      ++i;
  }
  return gens;
}

DecisionResult is_projective(const AlgebraPtr& a, const SemimodulePtr& m,
                             std::optional<std::vector<Idx>> generators) {
  constexpr const char* check = "is_projective";
  require_valid_module(a, *m, check);
  if (!a->zero) throw unsupported_error("is_projective: semiring has no zero");
  const std::vector<Idx> gens = generators ? *generators : minimized_generators(*m);
  {
    const auto span = subsemimodule_generated(*m, gens);
    if (static_cast<int>(span.size()) != m->size)
      throw input_error("is_projective: the given set does not generate");
  }
  const SemimodulePtr factor = regular(a);
  const std::vector<HomMap> homs = all_homs(m, factor, HomKind::Module);

  Retraction cert;
  cert.inner = m;
  cert.factor = factor;
  cert.arity = static_cast<int>(gens.size());
  cert.section.assign(m->size, std::vector<Idx>(cert.arity, 0));
  cert.column_retract.resize(cert.arity);
  for (int j = 0; j < cert.arity; ++j) {
    const Idx g = gens[j];
    // Bound: s_g(x).g <= x. The column retract is t |-> t.g.
    HomMap best = zero_hom(m, factor);
    for (const HomMap& h : homs) {
      bool admissible = true;
      for (Idx x = 0; x < m->size && admissible; ++x)
        admissible = m->leq(m->act(h.map[x], g), x);
      if (admissible) best = hom_join(best, h);
    }
    for (Idx x = 0; x < m->size; ++x) cert.section[x][j] = best.map[x];
    cert.column_retract[j].resize(factor->size);
    for (Idx t = 0; t < factor->size; ++t) cert.column_retract[j][t] = m->act(t, g);
  }
  for (Idx x = 0; x < m->size; ++x) {
    Idx acc = m->zero;
    for (int j = 0; j < cert.arity; ++j)
      acc = m->join_of(acc, cert.column_retract[j][cert.section[x][j]]);
    if (acc != x)
      return {Report::fail(check, {x},
                           "no section of the canonical surjection free(A," +
                               std::to_string(cert.arity) + ") ->> " + m->name),
              std::nullopt};
  }
  materialize(cert);
  return {Report::ok(check, m->name + " is a retract of free(A," +
                                std::to_string(cert.arity) + ")"),
          std::move(cert)};
}

DecisionResult is_injective(const AlgebraPtr& a, const SemimodulePtr& m) {
  constexpr const char* check = "is_injective";
  require_valid_module(a, *m, check);
  {
    Report idem = is_idempotent_semiring(*a);
    if (!idem.pass)
      throw unsupported_error("is_injective: not an additively idempotent semiring (" +
                              idem.detail + ")");
  }
  const IdSemimodule ids = id_semimodule(a);
  const std::vector<IdealSet> xs = ideals(*m);
  const int arity = static_cast<int>(xs.size());

  // eps(x)_I = {c in A | c.x in I}, one Id(A)-coordinate per ideal of m.
  std::vector<std::vector<Idx>> eps(m->size, std::vector<Idx>(arity));
  for (Idx x = 0; x < m->size; ++x)
    for (int j = 0; j < arity; ++j) {
      Mask mk = 0;
      for (Idx c = 0; c < a->size; ++c)
        if (xs[j].contains(m->act(c, x))) mk |= Mask{1} << c;
      const int idx = ids.index_of(mk);
      if (idx < 0) throw internal_error("is_injective: eps coordinate is not an ideal");
      eps[x][j] = idx;
    }
  // eps is an injective A-hom; anything else falsifies the construction.
  for (int j = 0; j < arity; ++j) {
    if (eps[m->zero][j] != ids.module->zero)
      throw internal_error("is_injective: eps does not preserve zero");
    for (Idx x = 0; x < m->size; ++x) {
      for (Idx y = 0; y < m->size; ++y)
        if (eps[m->join_of(x, y)][j] != ids.module->join_of(eps[x][j], eps[y][j]))
          throw internal_error("is_injective: eps does not preserve join");
      for (Idx s = 0; s < a->size; ++s)
        if (eps[m->act(s, x)][j] != ids.module->act(s, eps[x][j]))
          throw internal_error("is_injective: eps does not preserve the action");
    }
  }
  for (Idx x = 0; x < m->size; ++x)
    for (Idx y = x + 1; y < m->size; ++y)
      if (eps[x] == eps[y]) throw internal_error("is_injective: eps is not injective");

  const std::vector<HomMap> homs = all_homs(ids.module, m, HomKind::Module);

  Retraction cert;
  cert.inner = m;
  cert.factor = ids.module;
  cert.arity = arity;
  cert.section = eps;
  cert.column_retract.resize(arity);
  for (int j = 0; j < arity; ++j) {
    std::vector<Idx> probe(m->size);
    for (Idx x = 0; x < m->size; ++x) probe[x] = eps[x][j];
    cert.column_retract[j] = max_bounded_hom(homs, ids.module, m, probe).map;
  }
  for (Idx x = 0; x < m->size; ++x) {
    Idx acc = m->zero;
    for (int j = 0; j < arity; ++j)
      acc = m->join_of(acc, cert.column_retract[j][eps[x][j]]);
    if (acc != x)
      return {Report::fail(check, {x},
                           "no retraction of Id(A)^" + std::to_string(arity) +
                               " onto " + m->name + " through the eps-embedding"),
              std::nullopt};
  }
  materialize(cert);
  return {Report::ok(check, m->name + " is a retract of Id(A)^" + std::to_string(arity)),
          std::move(cert)};
}

DecisionResult is_self_injective(const AlgebraPtr& a) {
  DecisionResult r = is_injective(a, regular(a));
  r.report.check = "is_self_injective";
  return r;
}

namespace {

void require_one_bounded_involutive(const AlgebraPtr& a, const char* who, bool force) {
  if (force) return;
  Report bounded = is_one_bounded(*a);
  if (!bounded.pass) throw unsupported_error(std::string(who) + ": not 1-bounded");
  Report inv = a->has_negations() ? is_one_bounded_involutive(*a) : is_involutive_rl(*a);
  if (!inv.pass)
    throw unsupported_error(std::string(who) + ": not involutive (" + inv.detail + ")");
}

std::vector<SemimodulePtr> scope_ambients(const AlgebraPtr& a, int free_rank) {
  std::vector<SemimodulePtr> out{regular(a)};
  for (int k = 2; k <= free_rank; ++k) out.push_back(free_semimodule(a, k));
  return out;
}

}  // namespace

Report injective_iff_projective_check(const AlgebraPtr& a, int free_rank, bool force) {
  constexpr const char* check = "injective_iff_projective_check";
  require_one_bounded_involutive(a, check, force);
  for (const SemimodulePtr& ambient : scope_ambients(a, free_rank)) {
    for (Mask mk : enumerate_subsemimodules(*ambient)) {
      const auto elems = mask_elements(mk, ambient->size);
      SemimodulePtr sub = restrict_semimodule(*ambient, elems, "sub");
      const bool inj = is_injective(a, sub).report.pass;
      const bool proj = is_projective(a, sub).report.pass;
      if (inj != proj)
        return Report::fail(check, elems,
                            "subsemimodule of " + ambient->name + ": injective=" +
                                (inj ? "yes" : "no") + " projective=" +
                                (proj ? "yes" : "no"));
    }
  }
  return Report::ok(check);
}

Report cyclic_trichotomy_check(const AlgebraPtr& a, bool force) {
  constexpr const char* check = "cyclic_trichotomy_check";
  require_one_bounded_involutive(a, check, force);
  std::vector<Idx> idempotents;
  for (Idx e = 0; e < a->size; ++e)
    if (a->mult_of(e, e) == e) idempotents.push_back(e);
  for (Idx u = 0; u < a->size; ++u) {
    SemimodulePtr m = cyclic(a, u);
    bool iso_to_idem = false;
    for (Idx e : idempotents) {
      if (find_isomorphism(m, cyclic(a, e))) {
        iso_to_idem = true;
        break;
      }
    }
    const bool proj = is_projective(a, m).report.pass;
    const bool inj = is_injective(a, m).report.pass;
    if (iso_to_idem != proj || proj != inj)
      return Report::fail(check, {u},
                          "cyclic at " + a->element_name(u) + ": iso-to-Au-idempotent=" +
                              (iso_to_idem ? "yes" : "no") + " projective=" +
                              (proj ? "yes" : "no") + " injective=" +
                              (inj ? "yes" : "no"));
  }
  return Report::ok(check);
}

Report is_mid_complete(const SemimoduleTable& m) {
  constexpr const char* check = "is_mid_complete";
  const int n = m.size;
  // Bottom is the module zero; the finite semilattice is a complete lattice.
  BinaryTable meet(static_cast<size_t>(n) * n);
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y) {
      Idx acc = m.zero;
      for (Idx z = 0; z < n; ++z)
        if (m.leq(z, x) && m.leq(z, y)) acc = m.join_of(acc, z);
      if (!m.leq(acc, x) || !m.leq(acc, y))
        return Report::fail(check, {x, y}, "meets do not exist (not a lattice)");
      meet[x * n + y] = acc;
    }
  Idx top = m.zero;
  for (Idx x = 0; x < n; ++x) top = m.join_of(top, x);

  if (n <= 18) {
    const Mask limit = Mask{1} << n;
    for (Idx x = 0; x < n; ++x)
      for (Mask s = 0; s < limit; ++s) {
        Idx meet_all = top, meet_joined = top;
        for (Idx e = 0; e < n; ++e)
          if ((s >> e) & 1u) {
            meet_all = meet[meet_all * n + e];
            meet_joined = meet[meet_joined * n + m.join_of(x, e)];
          }
        if (m.join_of(x, meet_all) != meet_joined)
          return Report::fail(check, {x, static_cast<int>(s)},
                              "m v /\\S != /\\(m v S)");
      }
    return Report::ok(check);
  }
  // Large carrier: binary form, equivalent by finite induction.
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      for (Idx z = 0; z < n; ++z)
        if (m.join_of(x, meet[y * n + z]) !=
            meet[m.join_of(x, y) * n + m.join_of(x, z)])
          return Report::fail(check, {x, y, z}, "m v (y/\\z) != (mvy)/\\(mvz)");
  return Report::ok(check, "binary reduction");
}

Report is_join_distributive(int size, const BinaryTable& join) {
  constexpr const char* check = "is_join_distributive";
  const auto leq = [&](Idx x, Idx y) { return join[x * size + y] == y; };
  for (Idx a = 0; a < size; ++a)
    for (Idx b0 = 0; b0 < size; ++b0)
      for (Idx b1 = 0; b1 < size; ++b1) {
        if (!leq(a, join[b0 * size + b1])) continue;
        bool split = false;
        for (Idx a0 = 0; a0 < size && !split; ++a0) {
          if (!leq(a0, b0)) continue;
          for (Idx a1 = 0; a1 < size && !split; ++a1)
            split = leq(a1, b1) && join[a0 * size + a1] == a;
        }
        if (!split)
          return Report::fail(check, {a, b0, b1}, "a <= b0 v b1 admits no splitting");
      }
  return Report::ok(check);
}

Report is_join_distributive(const AlgebraTable& a) {
  return is_join_distributive(a.size, a.join);
}

Report is_join_distributive(const SemimoduleTable& m) {
  return is_join_distributive(m.size, m.join);
}

Report is_faithful(const AlgebraPtr& a, const SemimoduleTable& m) {
  constexpr const char* check = "is_faithful";
  require_same_algebra(a, m, check);
  if (!a->zero) throw unsupported_error("is_faithful: semiring has no zero");
  for (Idx s = 0; s < a->size; ++s) {
    if (s == *a->zero) continue;
    bool nontrivial = false;
    for (Idx x = 0; x < m.size && !nontrivial; ++x)
      nontrivial = m.act(s, x) != m.zero;
    if (!nontrivial)
      return Report::fail(check, {s},
                          a->element_name(s) + " != 0 acts as zero on " + m.name);
  }
  return Report::ok(check);
}

Report is_strong(const AlgebraPtr& a, const SemimoduleTable& m) {
  constexpr const char* check = "is_strong";
  require_same_algebra(a, m, check);
  if (!a->has_negations()) throw unsupported_error("is_strong: lneg/rneg not declared");
  for (Idx s = 0; s < a->size; ++s)
    for (Idx t = 0; t < a->size; ++t) {
      bool same = true;
      for (Idx x = 0; x < m.size && same; ++x) same = m.act(s, x) == m.act(t, x);
      if (!same) continue;
      for (Idx x = 0; x < m.size; ++x) {
        if (m.act(a->rneg_of(s), x) != m.act(a->rneg_of(t), x))
          return Report::fail(check, {s, t, x}, "-a.m != -b.m while a,b act equally");
        if (m.act(a->lneg_of(s), x) != m.act(a->lneg_of(t), x))
          return Report::fail(check, {s, t, x}, "~a.m != ~b.m while a,b act equally");
      }
    }
  return Report::ok(check);
}

Report strong_iff_faithful_check(const AlgebraPtr& a, int free_rank, bool force) {
  constexpr const char* check = "strong_iff_faithful_check";
  if (!force) {
    require_one_bounded_involutive(a, check, false);
    Report nil = is_nilpotent_semiring(*a);
    if (!nil.pass)
      throw unsupported_error(std::string(check) + ": not nilpotent (witness " +
                              nil.detail + ")");
  }
  AlgebraPtr algebra = a;
  if (!algebra->has_negations()) {
    // Negations derived from the residuals; the precondition guarantees them.
    auto rr = residuals(*a);
    if (rr.report.pass) {
      auto with = std::make_shared<AlgebraTable>(*a);
      const int n = a->size;
      UnaryTable ln(n), rn(n);
      for (Idx x = 0; x < n; ++x) {
        ln[x] = rr.tables->under[x * n + *a->zero];
        rn[x] = rr.tables->over[*a->zero * n + x];
      }
      with->lneg = std::move(ln);
      with->rneg = std::move(rn);
      algebra = with;
    }
  }
  for (const SemimodulePtr& ambient : scope_ambients(algebra, free_rank)) {
    for (Mask mk : enumerate_subsemimodules(*ambient)) {
      if (std::popcount(mk) < 2) continue;  // nontrivial semimodules only
      const auto elems = mask_elements(mk, ambient->size);
      SemimodulePtr sub = restrict_semimodule(*ambient, elems, "sub");
      const bool strong = is_strong(algebra, *sub).pass;
      const bool faithful = is_faithful(algebra, *sub).pass;
      if (strong != faithful)
        return Report::fail(check, elems,
                            "subsemimodule of " + ambient->name + ": strong=" +
                                (strong ? "yes" : "no") + " faithful=" +
                                (faithful ? "yes" : "no"));
    }
  }
  return Report::ok(check);
}

Report principal_ideal_equivalence_check(const AlgebraPtr& a, bool force) {
  constexpr const char* check = "principal_ideal_equivalence_check";
  require_one_bounded_involutive(a, check, force);
  bool all_principal_injective = true;
  Idx bad_u = -1;
  for (Idx u = 0; u < a->size && all_principal_injective; ++u) {
    if (!is_injective(a, cyclic(a, u)).report.pass) {
      all_principal_injective = false;
      bad_u = u;
    }
  }
  const bool self_vn =
      is_self_injective(a).report.pass && is_n_vn_regular(*a, 1).pass;
  const bool boolean = is_boolean_algebra(*a).pass;
  if (all_principal_injective == self_vn && self_vn == boolean)
    return Report::ok(check, all_principal_injective ? "all three hold"
                                                     : "all three fail");
  std::vector<int> w;
  if (bad_u >= 0) w.push_back(bad_u);
  return Report::fail(check, w,
                      std::string("principal-ideals-injective=") +
                          (all_principal_injective ? "yes" : "no") +
                          " self-injective-vn-regular=" + (self_vn ? "yes" : "no") +
                          " boolean=" + (boolean ? "yes" : "no"));
}

Report npotent_selfinjective_check(const AlgebraPtr& a, int n, bool force) {
  constexpr const char* check = "npotent_selfinjective_check";
  if (!force) {
    if (!is_one_bounded(*a).pass)
      throw unsupported_error(std::string(check) + ": not 1-bounded");
    Report idem = is_idempotent_semiring(*a);
    if (!idem.pass)
      throw unsupported_error(std::string(check) + ": not an idempotent semiring");
  }
  bool all_cyclic_injective = true;
  Idx bad = -1;
  for (Idx x = 0; x < a->size && all_cyclic_injective; ++x) {
    if (!is_injective(a, cyclic(a, power(*a, x, n))).report.pass) {
      all_cyclic_injective = false;
      bad = x;
    }
  }
  const bool rhs = is_self_injective(a).report.pass && is_n_potent(*a, n).pass;
  if (all_cyclic_injective == rhs)
    return Report::ok(check, all_cyclic_injective ? "both hold" : "both fail");
  std::vector<int> w;
  if (bad >= 0) w.push_back(bad);
  return Report::fail(check, w,
                      std::string("cyclic-at-x^n-injective=") +
                          (all_cyclic_injective ? "yes" : "no") +
                          " self-injective-and-n-potent=" + (rhs ? "yes" : "no"));
}

Report product_selfinjective_check(const std::vector<AlgebraPtr>& as) {
  constexpr const char* check = "product_selfinjective_check";
  AlgebraPtr p = product_semiring(as);
  const bool whole = is_self_injective(p).report.pass;
  bool each = true;
  int bad = -1;
  for (size_t i = 0; i < as.size() && each; ++i) {
    if (!is_self_injective(as[i]).report.pass) {
      each = false;
      bad = static_cast<int>(i);
    }
  }
  if (whole == each)
    return Report::ok(check, whole ? "product and factors self-injective"
                                   : "product and some factor both fail");
  std::vector<int> w;
  if (bad >= 0) w.push_back(bad);
  return Report::fail(check, w,
                      std::string("product self-injective=") + (whole ? "yes" : "no") +
                          " all factors=" + (each ? "yes" : "no"));
}

Report n_vn_regular_iff_n_potent(const AlgebraPtr& a, int n) {
  constexpr const char* check = "n_vn_regular_iff_n_potent";
  Report idem = is_idempotent_semiring(*a);
  if (!idem.pass)
    throw unsupported_error(std::string(check) + ": not an idempotent semiring");
  if (!is_one_bounded(*a).pass)
    throw unsupported_error(std::string(check) + ": not 1-bounded");
  const bool vn = is_n_vn_regular(*a, n).pass;
  const bool pot = is_n_potent(*a, n).pass;
  if (vn == pot) return Report::ok(check);
  return Report::fail(check, {n},
                      std::string("n-von-Neumann-regular=") + (vn ? "yes" : "no") +
                          " n-potent=" + (pot ? "yes" : "no"));
}

Report mult_idempotent_iff_boolean(const AlgebraPtr& a) {
  constexpr const char* check = "mult_idempotent_iff_boolean";
  require_one_bounded_involutive(a, check, false);
  const bool mi = is_mult_idempotent(*a).pass;
  const bool ba = is_boolean_algebra(*a).pass;
  if (mi == ba) return Report::ok(check);
  return Report::fail(check, {},
                      std::string("mult-idempotent=") + (mi ? "yes" : "no") +
                          " boolean=" + (ba ? "yes" : "no"));
}

}  // namespace invsem
