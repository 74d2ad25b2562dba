#include "invsem/homs.hpp"

#include <algorithm>

#include "invsem/axioms.hpp"

namespace invsem {

Report verify_hom(const HomMap& f) {
  constexpr const char* check = "verify_hom";
  const SemimoduleTable& d = *f.dom;
  const SemimoduleTable& c = *f.cod;
  if (static_cast<int>(f.map.size()) != d.size)
    throw input_error("verify_hom: map length differs from domain size");
  if (f.map[d.zero] != c.zero)
    return Report::fail(check, {d.zero}, "zero not preserved");
  for (Idx x = 0; x < d.size; ++x)
    for (Idx y = 0; y < d.size; ++y)
      if (f.map[d.join_of(x, y)] != c.join_of(f.map[x], f.map[y]))
        return Report::fail(check, {x, y}, "join not preserved");
  if (f.kind == HomKind::Module) {
    if (d.over->join != c.over->join || d.over->mult != c.over->mult)
      throw input_error("verify_hom: module hom between different over-algebras");
    for (Idx s = 0; s < d.over->size; ++s)
      for (Idx x = 0; x < d.size; ++x)
        if (f.map[d.act(s, x)] != c.act(s, f.map[x]))
          return Report::fail(check, {s, x}, "action not preserved");
  }
  return Report::ok(check);
}

namespace {

// Propagates generator images through joins and (for Module kind) the
// action. Returns false on a conflict. `img` uses -1 for undetermined.
bool propagate(const SemimoduleTable& d, const SemimoduleTable& c, HomKind kind,
               std::vector<Idx>& img) {
  bool grew = true;
  while (grew) {
    grew = false;
    for (Idx x = 0; x < d.size; ++x) {
      if (img[x] < 0) continue;
      for (Idx y = x; y < d.size; ++y) {
        if (img[y] < 0) continue;
        const Idx z = d.join_of(x, y);
        const Idx v = c.join_of(img[x], img[y]);
        if (img[z] < 0) {
          img[z] = v;
          grew = true;
        } else if (img[z] != v) {
          return false;
        }
      }
      if (kind == HomKind::Module) {
        for (Idx s = 0; s < d.over->size; ++s) {
          const Idx z = d.act(s, x);
          const Idx v = c.act(s, img[x]);
          if (img[z] < 0) {
            img[z] = v;
            grew = true;
          } else if (img[z] != v) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

struct HomSearch {
  const SemimodulePtr& dom;
  const SemimodulePtr& cod;
  HomKind kind;
  const HomConstraints& cons;
  const std::function<bool(const HomMap&)>& emit;
  std::vector<Idx> gens;
  bool stopped = false;

  bool allowed(Idx g, Idx v) const {
    for (const auto& [e, w] : cons.fixed)
      if (e == g && w != v) return false;
    if (cons.allow && !cons.allow(g, v)) return false;
    return true;
  }

  void run(size_t pos, const std::vector<Idx>& img) {
    if (stopped) return;
    if (pos == gens.size()) {
      for (Idx x = 0; x < dom->size; ++x)
        if (img[x] < 0) throw internal_error("enumerate_homs: generators do not generate");
      HomMap f{dom, cod, kind, img};
      if (!verify_hom(f).pass) return;
      bool keep = true;
      for (const auto& [e, w] : cons.fixed)
        if (f.map[e] != w) keep = false;
      if (keep && !emit(f)) stopped = true;
      return;
    }
    const Idx g = gens[pos];
    if (img[g] >= 0) {  // already forced by propagation
      if (allowed(g, img[g])) run(pos + 1, img);
      return;
    }
    for (Idx v = 0; v < cod->size && !stopped; ++v) {
      if (!allowed(g, v)) continue;
      std::vector<Idx> next = img;
      next[g] = v;
      if (propagate(*dom, *cod, kind, next)) run(pos + 1, next);
    }
  }
};

}  // namespace

void enumerate_homs(const SemimodulePtr& dom, const SemimodulePtr& cod, HomKind kind,
                    const HomConstraints& constraints,
                    const std::function<bool(const HomMap&)>& emit) {
  if (kind == HomKind::Module &&
      (dom->over->join != cod->over->join || dom->over->mult != cod->over->mult))
    throw unsupported_error("enumerate_homs: module homs need a common over-algebra");

  std::vector<Idx> gens = join_irreducibles(*dom);
  if (kind == HomKind::Module) {
    // Greedily drop generators that the rest already generate.
    for (size_t i = 0; i < gens.size();) {
      std::vector<Idx> rest;
      for (size_t j = 0; j < gens.size(); ++j)
        if (j != i) rest.push_back(gens[j]);
      const auto span = subsemimodule_generated(*dom, rest);
      if (std::binary_search(span.begin(), span.end(), gens[i]))
        gens.erase(gens.begin() + static_cast<long>(i));
      else
        ++i;
    }
  }
  // Constrained generators first: their branches are the narrowest.
  std::stable_partition(gens.begin(), gens.end(), [&](Idx g) {
    for (const auto& [e, w] : constraints.fixed)
      if (e == g) return true;
    return false;
  });

  HomSearch search{dom, cod, kind, constraints, emit, std::move(gens)};
  std::vector<Idx> img(dom->size, -1);
  img[dom->zero] = cod->zero;
  for (const auto& [e, w] : constraints.fixed) {
    if (img[e] >= 0 && img[e] != w) return;
    img[e] = w;
  }
  if (!propagate(*dom, *cod, kind, img)) return;
  search.run(0, img);
}

std::vector<HomMap> all_homs(const SemimodulePtr& dom, const SemimodulePtr& cod,
                             HomKind kind, const HomConstraints& constraints) {
  std::vector<HomMap> out;
  enumerate_homs(dom, cod, kind, constraints, [&](const HomMap& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

HomMap hom_join(const HomMap& f, const HomMap& g) {
  HomMap h = f;
  for (size_t i = 0; i < h.map.size(); ++i)
    h.map[i] = f.cod->join_of(f.map[i], g.map[i]);
  return h;
}

std::vector<HomMap> boolean_homs(const SemimodulePtr& s) {
  // v,0-preserving maps only; the Boolean action is determined by them.
  SemimodulePtr target =
      make_semilattice_module(2, boolean_semifield()->join, 0, "B2", {"0", "1"});
  SemimodulePtr source =
      make_semilattice_module(s->size, s->join, s->zero, s->name, s->display);
  return all_homs(source, target, HomKind::Semilattice);
}

std::vector<HomMap> boolean_homs(const AlgebraTable& a) {
  return boolean_homs(semimodule_from_semilattice(a));
}

IdealSet ker(const HomMap& f) {
  if (f.dom->size > 64) throw unsupported_error("ker: carrier too large");
  Mask mk = 0;
  for (Idx x = 0; x < f.dom->size; ++x)
    if (f.map[x] == f.cod->zero) mk |= Mask{1} << x;
  return IdealSet{f.dom->name, f.dom->size, mk};
}

std::optional<HomMap> find_isomorphism(const SemimodulePtr& dom,
                                       const SemimodulePtr& cod) {
  if (dom->size != cod->size) return std::nullopt;
  std::optional<HomMap> found;
  enumerate_homs(dom, cod, HomKind::Module, {}, [&](const HomMap& f) {
    std::vector<char> hit(cod->size, 0);
    for (Idx v : f.map) hit[v] = 1;
    if (std::find(hit.begin(), hit.end(), 0) != hit.end()) return true;
    HomMap inv{cod, dom, HomKind::Module, std::vector<Idx>(cod->size)};
    for (Idx x = 0; x < dom->size; ++x) inv.map[f.map[x]] = x;
    if (!verify_hom(inv).pass) return true;  // cannot happen for finite bijections
    found = f;
    return false;
  });
  return found;
}

HomSemimodule hom_b_semimodule(const AlgebraPtr& a) {
  Report idem = is_idempotent_semiring(*a);
  if (!idem.pass)
    throw unsupported_error("hom_b_semimodule: not an idempotent semiring (" +
                            idem.detail + ")");
  HomSemimodule out;
  out.homs = boolean_homs(*a);
  std::sort(out.homs.begin(), out.homs.end(),
            [](const HomMap& f, const HomMap& g) { return f.map < g.map; });
  const int n = static_cast<int>(out.homs.size());
  const auto locate = [&](const std::vector<Idx>& map) {
    for (int i = 0; i < n; ++i)
      if (out.homs[i].map == map) return i;
    throw internal_error("hom_b_semimodule: combination left Hom_B(A,B)");
  };
  auto mod = std::make_shared<SemimoduleTable>();
  mod->name = "Hom(" + a->name + ",B2)";
  mod->over = a;
  mod->size = n;
  mod->join.resize(static_cast<size_t>(n) * n);
  mod->action.resize(static_cast<size_t>(a->size) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mod->join[i * n + j] = locate(hom_join(out.homs[i], out.homs[j]).map);
  for (Idx s = 0; s < a->size; ++s)
    for (int i = 0; i < n; ++i) {
      std::vector<Idx> map(a->size);
      for (Idx t = 0; t < a->size; ++t) map[t] = out.homs[i].map[a->mult_of(t, s)];
      mod->action[s * n + i] = locate(map);
    }
  mod->zero = locate(std::vector<Idx>(a->size, 0));
  mod->display.resize(n);
  for (int i = 0; i < n; ++i) {
    std::string nm = "f";
    for (Idx v : out.homs[i].map) nm += std::to_string(v);
    mod->display[i] = nm;
  }
  Report v = validate_semimodule(*mod);
  if (!v.pass)
    throw internal_error("hom_b_semimodule: semimodule axioms fail: " + v.detail);
  out.module = mod;
  return out;
}

Report hom_id_iso_check(const AlgebraPtr& a) {
  constexpr const char* check = "hom_id_iso_check";
  HomSemimodule hom = hom_b_semimodule(a);
  IdSemimodule ids = id_semimodule(a);
  const int n = hom.module->size;
  if (n != static_cast<int>(ids.ideal_list.size()))
    return Report::fail(check, {n, static_cast<int>(ids.ideal_list.size())},
                        "|Hom_B(A,B)| != |Id(A)|");
  // Ker as an index map, verified to be a semimodule isomorphism.
  std::vector<Idx> kmap(n);
  std::vector<char> hit(n, 0);
  for (int i = 0; i < n; ++i) {
    const int j = ids.index_of(ker(hom.homs[i]).members);
    if (j < 0) return Report::fail(check, {i}, "kernel is not an ideal");
    kmap[i] = j;
    if (hit[j]) return Report::fail(check, {i, j}, "Ker is not injective");
    hit[j] = 1;
  }
  if (kmap[hom.module->zero] != ids.module->zero)
    return Report::fail(check, {hom.module->zero}, "Ker does not preserve zero");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (kmap[hom.module->join_of(i, j)] != ids.module->join_of(kmap[i], kmap[j]))
        return Report::fail(check, {i, j}, "Ker(f v g) != Ker(f) n Ker(g)");
  for (Idx s = 0; s < a->size; ++s)
    for (int i = 0; i < n; ++i)
      if (kmap[hom.module->act(s, i)] != ids.module->act(s, kmap[i]))
        return Report::fail(check, {s, i}, "Ker(a.f) != a.Ker(f)");
  return Report::ok(check);
}

Report phi_check(const AlgebraPtr& a) {
  constexpr const char* check = "phi_check";
  if (!a->zero) throw unsupported_error("phi_check: zero not declared");
  auto bot = a->bottom();
  if (!bot || *bot != *a->zero)
    throw unsupported_error("phi_check: zero is not the least element");
  if (!is_one_bounded(*a).pass)
    throw unsupported_error("phi_check: not 1-bounded");
  auto rr = residuals(*a);
  if (!rr.report.pass)
    throw unsupported_error("phi_check: not residuated (" + rr.report.detail + ")");

  const int n = a->size;
  const Idx z = *a->zero;
  const auto lneg_of = [&](Idx x) { return rr.tables->under[x * n + z]; };
  const auto rneg_of = [&](Idx x) { return rr.tables->over[z * n + x]; };

  IdSemimodule ids = id_semimodule(a);
  // Phi(x) = down-set of -x.
  std::vector<Idx> phi(n);
  for (Idx x = 0; x < n; ++x) {
    Mask down = 0;
    for (Idx w = 0; w < n; ++w)
      if (a->leq(w, rneg_of(x))) down |= Mask{1} << w;
    const int j = ids.index_of(down);
    if (j < 0) throw internal_error("phi_check: principal down-set is not an ideal");
    phi[x] = j;
  }

  bool iso = static_cast<int>(ids.ideal_list.size()) == n;
  std::vector<int> first_fail;
  std::string why;
  if (iso) {
    std::vector<char> hit(n, 0);
    for (Idx x = 0; x < n && iso; ++x) {
      if (hit[phi[x]]) iso = false, first_fail = {x}, why = "Phi not injective";
      hit[phi[x]] = 1;
    }
  } else {
    why = "|Id(A)| != |A|";
  }
  if (iso && phi[z] != ids.module->zero)
    iso = false, first_fail = {z}, why = "Phi does not preserve zero";
  for (Idx x = 0; x < n && iso; ++x)
    for (Idx y = 0; y < n && iso; ++y)
      if (phi[a->join_of(x, y)] != ids.module->join_of(phi[x], phi[y]))
        iso = false, first_fail = {x, y}, why = "Phi(x v y) != Phi(x) n Phi(y)";
  for (Idx s = 0; s < n && iso; ++s)
    for (Idx x = 0; x < n && iso; ++x)
      if (phi[a->mult_of(s, x)] != ids.module->act(s, phi[x]))
        iso = false, first_fail = {s, x}, why = "Phi does not preserve the action";

  AlgebraTable with_negs = *a;
  UnaryTable ln(n), rn(n);
  for (Idx x = 0; x < n; ++x) ln[x] = lneg_of(x), rn[x] = rneg_of(x);
  with_negs.lneg = std::move(ln);
  with_negs.rneg = std::move(rn);
  const bool involutive = is_involutive_semiring(with_negs).pass;

  if (iso == involutive)
    return Report::ok(check, iso ? "both verdicts true" : "both verdicts false");
  return Report::fail(check, first_fail,
                      "Phi-isomorphism verdict (" + std::string(iso ? "yes" : "no") +
                          ") disagrees with involutivity (" +
                          (involutive ? "yes" : "no") + "): " + why);
}

}  // namespace invsem
