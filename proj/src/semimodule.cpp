#include "invsem/semimodule.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "invsem/axioms.hpp"

namespace invsem {

namespace {

constexpr int kMaxMaskCarrier = 64;
constexpr long long kMaxBuiltCarrier = 100000;

void check_mask_capacity(int n, const char* who) {
  if (n > kMaxMaskCarrier)
    throw unsupported_error(std::string(who) + ": carrier larger than " +
                            std::to_string(kMaxMaskCarrier));
}

}  // namespace

std::string SemimoduleTable::element_name(Idx x) const {
  if (x >= 0 && x < static_cast<Idx>(display.size()) && !display[x].empty())
    return display[x];
  return std::to_string(x);
}

int IdealSet::count() const { return std::popcount(members); }

Report validate_semimodule(const SemimoduleTable& m) {
  constexpr const char* check = "validate_semimodule";
  if (!m.over) throw input_error("semimodule '" + m.name + "': no over-algebra");
  const AlgebraTable& a = *m.over;
  Report av = validate(a);
  if (!av.pass)
    return Report::fail(check, av.witness, "over-algebra invalid: " + av.detail);
  if (!a.zero)
    throw unsupported_error("semimodule '" + m.name +
                            "': over-algebra has no zero");
  const int n = m.size;
  if (n <= 0) throw input_error("semimodule '" + m.name + "': size must be positive");
  if (static_cast<int>(m.join.size()) != n * n)
    throw input_error("semimodule '" + m.name + "': join table is not " +
                      std::to_string(n) + "x" + std::to_string(n));
  if (static_cast<int>(m.action.size()) != a.size * n)
    throw input_error("semimodule '" + m.name + "': action table is not " +
                      std::to_string(a.size) + "x" + std::to_string(n));
  for (Idx v : m.join)
    if (v < 0 || v >= n)
      throw input_error("semimodule '" + m.name + "': join entry out of range");
  for (Idx v : m.action)
    if (v < 0 || v >= n)
      throw input_error("semimodule '" + m.name + "': action entry out of range");
  if (m.zero < 0 || m.zero >= n)
    throw input_error("semimodule '" + m.name + "': zero out of range");

  for (Idx x = 0; x < n; ++x)
    if (m.join_of(x, x) != x) return Report::fail(check, {x}, "join not idempotent");
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      if (m.join_of(x, y) != m.join_of(y, x))
        return Report::fail(check, {x, y}, "join not commutative");
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      for (Idx z = 0; z < n; ++z)
        if (m.join_of(m.join_of(x, y), z) != m.join_of(x, m.join_of(y, z)))
          return Report::fail(check, {x, y, z}, "join not associative");
  for (Idx x = 0; x < n; ++x)
    if (m.join_of(x, m.zero) != x)
      return Report::fail(check, {x}, "0 is not a join identity");

  for (Idx s = 0; s < a.size; ++s)
    for (Idx t = 0; t < a.size; ++t)
      for (Idx x = 0; x < n; ++x)
        if (m.act(a.mult_of(s, t), x) != m.act(s, m.act(t, x)))
          return Report::fail(check, {s, t, x}, "(ab).x != a.(b.x)");
  for (Idx s = 0; s < a.size; ++s)
    for (Idx x = 0; x < n; ++x)
      for (Idx y = 0; y < n; ++y)
        if (m.act(s, m.join_of(x, y)) != m.join_of(m.act(s, x), m.act(s, y)))
          return Report::fail(check, {s, x, y}, "a.(xvy) != a.x v a.y");
  for (Idx s = 0; s < a.size; ++s)
    for (Idx t = 0; t < a.size; ++t)
      for (Idx x = 0; x < n; ++x)
        if (m.act(a.join_of(s, t), x) != m.join_of(m.act(s, x), m.act(t, x)))
          return Report::fail(check, {s, t, x}, "(avb).x != a.x v b.x");
  for (Idx x = 0; x < n; ++x)
    if (m.act(*a.zero, x) != m.zero)
      return Report::fail(check, {x}, "0_A.x != 0_M");
  for (Idx s = 0; s < a.size; ++s)
    if (m.act(s, m.zero) != m.zero)
      return Report::fail(check, {s}, "a.0_M != 0_M");
  for (Idx x = 0; x < n; ++x)
    if (m.act(a.one, x) != x) return Report::fail(check, {x}, "1.x != x");
  return Report::ok(check);
}

AlgebraPtr boolean_semifield() {
  static const AlgebraPtr b2 = [] {
    auto a = std::make_shared<AlgebraTable>();
    a->name = "B2";
    a->size = 2;
    a->join = {0, 1, 1, 1};
    a->mult = {0, 0, 0, 1};
    a->one = 1;
    a->zero = 0;
    a->lneg = UnaryTable{1, 0};
    a->rneg = UnaryTable{1, 0};
    a->display = {"0", "1"};
    return AlgebraPtr(a);
  }();
  return b2;
}

SemimodulePtr regular(const AlgebraPtr& a) {
  if (!a->zero) throw unsupported_error("regular: over-algebra has no zero");
  auto m = std::make_shared<SemimoduleTable>();
  m->name = a->name;
  m->over = a;
  m->size = a->size;
  m->join = a->join;
  m->zero = *a->zero;
  m->action = a->mult;
  m->display = a->display;
  return m;
}

SemimodulePtr free_semimodule(const AlgebraPtr& a, int k) {
  if (!a->zero) throw unsupported_error("free: over-algebra has no zero");
  if (k < 0) throw input_error("free: rank must be >= 0");
  long long sz = 1;
  for (int i = 0; i < k; ++i) {
    sz *= a->size;
    if (sz > kMaxBuiltCarrier) throw unsupported_error("free: carrier too large");
  }
  const int n = static_cast<int>(sz);
  auto m = std::make_shared<SemimoduleTable>();
  m->name = a->name + "^" + std::to_string(k);
  m->over = a;
  m->size = n;
  m->join.resize(static_cast<size_t>(n) * n);
  m->action.resize(static_cast<size_t>(a->size) * n);
  const auto digit = [&](Idx t, int pos) {
    for (int i = 0; i < pos; ++i) t /= a->size;
    return t % a->size;
  };
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y) {
      Idx out = 0, stride = 1;
      for (int i = 0; i < k; ++i) {
        out += a->join_of(digit(x, i), digit(y, i)) * stride;
        stride *= a->size;
      }
      m->join[x * n + y] = out;
    }
  for (Idx s = 0; s < a->size; ++s)
    for (Idx x = 0; x < n; ++x) {
      Idx out = 0, stride = 1;
      for (int i = 0; i < k; ++i) {
        out += a->mult_of(s, digit(x, i)) * stride;
        stride *= a->size;
      }
      m->action[s * n + x] = out;
    }
  Idx z = 0, stride = 1;
  for (int i = 0; i < k; ++i) {
    z += *a->zero * stride;
    stride *= a->size;
  }
  m->zero = z;
  m->display.resize(n);
  for (Idx x = 0; x < n; ++x) {
    std::string s = "(";
    for (int i = 0; i < k; ++i) {
      if (i) s += ",";
      s += a->element_name(digit(x, i));
    }
    m->display[x] = s + ")";
  }
  return m;
}

Idx free_component(const SemimoduleTable& f, Idx t, int pos) {
  const int base = f.over->size;
  for (int i = 0; i < pos; ++i) t /= base;
  return t % base;
}

Idx free_index(const SemimoduleTable& f, const std::vector<Idx>& digits) {
  const int base = f.over->size;
  Idx out = 0, stride = 1;
  for (Idx d : digits) {
    out += d * stride;
    stride *= base;
  }
  return out;
}

Idx free_unit_tuple(const SemimoduleTable& f, int pos) {
  const int base = f.over->size;
  Idx out = 0, stride = 1;
  int k = 0;
  for (Idx n = f.size; n > 1; n /= base) ++k;
  for (int i = 0; i < k; ++i) {
    out += (i == pos ? f.over->one : *f.over->zero) * stride;
    stride *= base;
  }
  return out;
}

std::vector<Idx> subsemimodule_generated(const SemimoduleTable& m,
                                         const std::vector<Idx>& gens) {
  std::vector<char> in(m.size, 0);
  in[m.zero] = 1;
  for (Idx g : gens) {
    if (g < 0 || g >= m.size) throw input_error("subsemimodule_generated: bad index");
    in[g] = 1;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (Idx x = 0; x < m.size; ++x) {
      if (!in[x]) continue;
      for (Idx y = 0; y < m.size; ++y) {
        if (!in[y]) continue;
        Idx j = m.join_of(x, y);
        if (!in[j]) in[j] = 1, grew = true;
      }
      for (Idx s = 0; s < m.over->size; ++s) {
        Idx v = m.act(s, x);
        if (!in[v]) in[v] = 1, grew = true;
      }
    }
  }
  std::vector<Idx> out;
  for (Idx x = 0; x < m.size; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

SemimodulePtr restrict_semimodule(const SemimoduleTable& m,
                                  const std::vector<Idx>& elements,
                                  std::string name) {
  const int n = static_cast<int>(elements.size());
  std::vector<Idx> pos(m.size, -1);
  for (int i = 0; i < n; ++i) pos[elements[i]] = i;
  const auto inner = [&](Idx v, const char* law) {
    if (pos[v] < 0)
      throw input_error("restrict_semimodule '" + name + "': subset not closed under " +
                        law);
    return pos[v];
  };
  auto out = std::make_shared<SemimoduleTable>();
  out->name = std::move(name);
  out->over = m.over;
  out->size = n;
  out->zero = inner(m.zero, "zero");
  out->join.resize(static_cast<size_t>(n) * n);
  out->action.resize(static_cast<size_t>(m.over->size) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out->join[i * n + j] = inner(m.join_of(elements[i], elements[j]), "join");
  for (Idx s = 0; s < m.over->size; ++s)
    for (int i = 0; i < n; ++i)
      out->action[s * n + i] = inner(m.act(s, elements[i]), "action");
  out->display.resize(n);
  for (int i = 0; i < n; ++i) out->display[i] = m.element_name(elements[i]);
  return out;
}

SemimodulePtr cyclic(const AlgebraPtr& a, Idx u) {
  if (u < 0 || u >= a->size) throw input_error("cyclic: generator out of range");
  auto reg = regular(a);
  std::set<Idx> carrier;
  for (Idx x = 0; x < a->size; ++x) carrier.insert(a->mult_of(x, u));
  std::vector<Idx> elements(carrier.begin(), carrier.end());
  return restrict_semimodule(*reg, elements,
                             a->name + "*" + a->element_name(u));
}

SemimodulePtr product(const std::vector<SemimodulePtr>& ms) {
  if (ms.empty()) throw input_error("product: empty factor list");
  const AlgebraPtr a = ms.front()->over;
  for (const auto& m : ms)
    if (m->over != a && m->over->join != a->join)
      throw unsupported_error("product: factors over different semirings");
  long long sz = 1;
  for (const auto& m : ms) {
    sz *= m->size;
    if (sz > kMaxBuiltCarrier) throw unsupported_error("product: carrier too large");
  }
  const int n = static_cast<int>(sz);
  const int k = static_cast<int>(ms.size());
  const auto digits_of = [&](Idx t) {
    std::vector<Idx> d(k);
    for (int i = 0; i < k; ++i) {
      d[i] = t % ms[i]->size;
      t /= ms[i]->size;
    }
    return d;
  };
  const auto index_of = [&](const std::vector<Idx>& d) {
    Idx out = 0, stride = 1;
    for (int i = 0; i < k; ++i) {
      out += d[i] * stride;
      stride *= ms[i]->size;
    }
    return out;
  };
  auto out = std::make_shared<SemimoduleTable>();
  out->over = a;
  out->size = n;
  {
    std::string nm;
    for (const auto& m : ms) nm += (nm.empty() ? "" : "x") + m->name;
    out->name = nm;
  }
  out->join.resize(static_cast<size_t>(n) * n);
  out->action.resize(static_cast<size_t>(a->size) * n);
  for (Idx x = 0; x < n; ++x) {
    const auto dx = digits_of(x);
    for (Idx y = 0; y < n; ++y) {
      auto dy = digits_of(y);
      for (int i = 0; i < k; ++i) dy[i] = ms[i]->join_of(dx[i], dy[i]);
      out->join[x * n + y] = index_of(dy);
    }
  }
  for (Idx s = 0; s < a->size; ++s)
    for (Idx x = 0; x < n; ++x) {
      auto d = digits_of(x);
      for (int i = 0; i < k; ++i) d[i] = ms[i]->act(s, d[i]);
      out->action[s * n + x] = index_of(d);
    }
  {
    std::vector<Idx> d(k);
    for (int i = 0; i < k; ++i) d[i] = ms[i]->zero;
    out->zero = index_of(d);
  }
  out->display.resize(n);
  for (Idx x = 0; x < n; ++x) {
    const auto d = digits_of(x);
    std::string s = "(";
    for (int i = 0; i < k; ++i) {
      if (i) s += ",";
      s += ms[i]->element_name(d[i]);
    }
    out->display[x] = s + ")";
  }
  return out;
}

AlgebraPtr product_semiring(const std::vector<AlgebraPtr>& as) {
  if (as.empty()) throw input_error("product_semiring: empty factor list");
  long long sz = 1;
  for (const auto& a : as) {
    sz *= a->size;
    if (sz > kMaxBuiltCarrier)
      throw unsupported_error("product_semiring: carrier too large");
  }
  const int n = static_cast<int>(sz);
  const int k = static_cast<int>(as.size());
  const auto digits_of = [&](Idx t) {
    std::vector<Idx> d(k);
    for (int i = 0; i < k; ++i) {
      d[i] = t % as[i]->size;
      t /= as[i]->size;
    }
    return d;
  };
  const auto index_of = [&](const std::vector<Idx>& d) {
    Idx out = 0, stride = 1;
    for (int i = 0; i < k; ++i) {
      out += d[i] * stride;
      stride *= as[i]->size;
    }
    return out;
  };
  auto out = std::make_shared<AlgebraTable>();
  out->size = n;
  {
    std::string nm;
    for (const auto& a : as) nm += (nm.empty() ? "" : "x") + a->name;
    out->name = nm;
  }
  out->join.resize(static_cast<size_t>(n) * n);
  out->mult.resize(static_cast<size_t>(n) * n);
  for (Idx x = 0; x < n; ++x) {
    const auto dx = digits_of(x);
    for (Idx y = 0; y < n; ++y) {
      auto dj = digits_of(y);
      auto dm = dj;
      for (int i = 0; i < k; ++i) {
        dm[i] = as[i]->mult_of(dx[i], dm[i]);
        dj[i] = as[i]->join_of(dx[i], dj[i]);
      }
      out->join[x * n + y] = index_of(dj);
      out->mult[x * n + y] = index_of(dm);
    }
  }
  {
    std::vector<Idx> d(k);
    for (int i = 0; i < k; ++i) d[i] = as[i]->one;
    out->one = index_of(d);
  }
  if (std::all_of(as.begin(), as.end(), [](const auto& a) { return a->zero.has_value(); })) {
    std::vector<Idx> d(k);
    for (int i = 0; i < k; ++i) d[i] = *as[i]->zero;
    out->zero = index_of(d);
  }
  const bool all_lneg =
      std::all_of(as.begin(), as.end(), [](const auto& a) { return a->lneg.has_value(); });
  const bool all_rneg =
      std::all_of(as.begin(), as.end(), [](const auto& a) { return a->rneg.has_value(); });
  if (all_lneg || all_rneg) {
    UnaryTable ln(n), rn(n);
    for (Idx x = 0; x < n; ++x) {
      auto d = digits_of(x);
      auto dl = d, dr = d;
      for (int i = 0; i < k; ++i) {
        if (all_lneg) dl[i] = as[i]->lneg_of(d[i]);
        if (all_rneg) dr[i] = as[i]->rneg_of(d[i]);
      }
      ln[x] = index_of(dl);
      rn[x] = index_of(dr);
    }
    if (all_lneg) out->lneg = std::move(ln);
    if (all_rneg) out->rneg = std::move(rn);
  }
  out->display.resize(n);
  for (Idx x = 0; x < n; ++x) {
    const auto d = digits_of(x);
    std::string s = "(";
    for (int i = 0; i < k; ++i) {
      if (i) s += ",";
      s += as[i]->element_name(d[i]);
    }
    out->display[x] = s + ")";
  }
  return out;
}

SemimodulePtr make_semilattice_module(int size, BinaryTable join, Idx zero,
                                      std::string name,
                                      std::vector<std::string> display) {
  auto m = std::make_shared<SemimoduleTable>();
  m->name = std::move(name);
  m->over = boolean_semifield();
  m->size = size;
  m->join = std::move(join);
  m->zero = zero;
  m->action.resize(static_cast<size_t>(2) * size);
  for (Idx x = 0; x < size; ++x) {
    m->action[0 * size + x] = zero;
    m->action[1 * size + x] = x;
  }
  m->display = std::move(display);
  return m;
}

SemimodulePtr semimodule_from_semilattice(const AlgebraTable& a) {
  auto bot = a.bottom();
  if (!bot) throw unsupported_error("semimodule_from_semilattice: no least element");
  return make_semilattice_module(a.size, a.join, *bot, a.name, a.display);
}

namespace {

Mask close_subsemimodule(const SemimoduleTable& m, Mask in) {
  bool grew = true;
  while (grew) {
    grew = false;
    for (Idx x = 0; x < m.size; ++x) {
      if (!((in >> x) & 1u)) continue;
      for (Idx y = x; y < m.size; ++y) {
        if (!((in >> y) & 1u)) continue;
        Mask bit = Mask{1} << m.join_of(x, y);
        if (!(in & bit)) in |= bit, grew = true;
      }
      for (Idx s = 0; s < m.over->size; ++s) {
        Mask bit = Mask{1} << m.act(s, x);
        if (!(in & bit)) in |= bit, grew = true;
      }
    }
  }
  return in;
}

}  // namespace

std::vector<Mask> enumerate_subsemimodules(const SemimoduleTable& m) {
  check_mask_capacity(m.size, "enumerate_subsemimodules");
  std::set<Mask> seen;
  std::vector<Mask> queue;
  Mask least = close_subsemimodule(m, Mask{1} << m.zero);
  seen.insert(least);
  queue.push_back(least);
  for (size_t i = 0; i < queue.size(); ++i) {
    Mask s = queue[i];
    for (Idx x = 0; x < m.size; ++x) {
      if ((s >> x) & 1u) continue;
      Mask t = close_subsemimodule(m, s | (Mask{1} << x));
      if (seen.insert(t).second) queue.push_back(t);
    }
  }
  std::vector<Mask> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    return a < b;
  });
  return out;
}

namespace {

// Down-closure and join-closure alternating to a fixpoint.
Mask close_ideal(int n, const BinaryTable& join, Mask in) {
  bool grew = true;
  while (grew) {
    grew = false;
    for (Idx x = 0; x < n; ++x) {
      if (!((in >> x) & 1u)) continue;
      for (Idx y = 0; y < n; ++y) {
        if ((in >> y) & 1u) continue;
        if (join[y * n + x] == x) {  // y <= x
          in |= Mask{1} << y;
          grew = true;
        }
      }
      for (Idx y = 0; y < n; ++y) {
        if (!((in >> y) & 1u)) continue;
        const Mask bit = Mask{1} << join[x * n + y];
        if (!(in & bit)) in |= bit, grew = true;
      }
    }
  }
  return in;
}

std::vector<IdealSet> ideals_of(int n, const BinaryTable& join, Idx least,
                                const std::string& of) {
  std::set<Mask> seen;
  std::vector<Mask> queue;
  Mask bottom = close_ideal(n, join, Mask{1} << least);
  seen.insert(bottom);
  queue.push_back(bottom);
  for (size_t i = 0; i < queue.size(); ++i) {
    Mask s = queue[i];
    for (Idx x = 0; x < n; ++x) {
      if ((s >> x) & 1u) continue;
      Mask t = close_ideal(n, join, s | (Mask{1} << x));
      if (seen.insert(t).second) queue.push_back(t);
    }
  }
  std::vector<Mask> masks(seen.begin(), seen.end());
  std::sort(masks.begin(), masks.end(), [](Mask a, Mask b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    return a < b;
  });
  std::vector<IdealSet> out;
  out.reserve(masks.size());
  for (Mask mk : masks) out.push_back(IdealSet{of, n, mk});
  return out;
}

}  // namespace

std::vector<IdealSet> ideals(const AlgebraTable& a) {
  check_mask_capacity(a.size, "ideals");
  auto bot = a.bottom();
  if (!bot) throw unsupported_error("ideals: no least element");
  return ideals_of(a.size, a.join, *bot, a.name);
}

std::vector<IdealSet> ideals(const SemimoduleTable& m) {
  check_mask_capacity(m.size, "ideals");
  return ideals_of(m.size, m.join, m.zero, m.name);
}

int IdSemimodule::index_of(Mask members) const {
  for (size_t i = 0; i < ideal_list.size(); ++i)
    if (ideal_list[i].members == members) return static_cast<int>(i);
  return -1;
}

IdSemimodule id_semimodule(const AlgebraPtr& a) {
  Report idem = is_idempotent_semiring(*a);
  if (!idem.pass)
    throw unsupported_error("id_semimodule: not an additively idempotent semiring (" +
                            idem.detail + ")");
  IdSemimodule out;
  out.ideal_list = ideals(*a);
  const int n = static_cast<int>(out.ideal_list.size());
  auto mod = std::make_shared<SemimoduleTable>();
  mod->name = "Id(" + a->name + ")";
  mod->over = a;
  mod->size = n;
  mod->join.resize(static_cast<size_t>(n) * n);
  mod->action.resize(static_cast<size_t>(a->size) * n);
  const auto locate = [&](Mask mk, const char* what) {
    int i = out.index_of(mk);
    if (i < 0)
      throw internal_error(std::string("id_semimodule: ") + what +
                           " left the ideal family");
    return i;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mod->join[i * n + j] =
          locate(out.ideal_list[i].members & out.ideal_list[j].members, "intersection");
  for (Idx s = 0; s < a->size; ++s)
    for (int i = 0; i < n; ++i) {
      Mask mk = 0;
      for (Idx x = 0; x < a->size; ++x)
        if (out.ideal_list[i].contains(a->mult_of(x, s))) mk |= Mask{1} << x;
      mod->action[s * n + i] = locate(mk, "scalar action");
    }
  Mask full = a->size == 64 ? ~Mask{0} : (Mask{1} << a->size) - 1;
  mod->zero = locate(full, "full ideal");
  mod->display.resize(n);
  for (int i = 0; i < n; ++i) {
    std::string s = "{";
    bool first = true;
    for (Idx x = 0; x < a->size; ++x)
      if (out.ideal_list[i].contains(x)) {
        if (!first) s += ",";
        s += a->element_name(x);
        first = false;
      }
    mod->display[i] = s + "}";
  }
  Report v = validate_semimodule(*mod);
  if (!v.pass) throw internal_error("id_semimodule: semimodule axioms fail: " + v.detail);
  out.module = mod;
  return out;
}

std::vector<Idx> join_irreducibles(const SemimoduleTable& m) {
  Poset p;
  p.size = m.size;
  p.leq_table.assign(static_cast<size_t>(m.size) * m.size, 0);
  for (Idx x = 0; x < m.size; ++x)
    for (Idx y = 0; y < m.size; ++y)
      p.leq_table[x * m.size + y] = m.leq(x, y) ? 1 : 0;
  return join_irreducibles(p, m.join);
}

}  // namespace invsem
