#include "invsem/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <future>
#include <map>
#include <numeric>
#include <set>

#include <json.hpp>

#include "invsem/axioms.hpp"
#include "invsem/io.hpp"
#include "invsem/registry.hpp"

namespace invsem {

std::string to_string(AlgebraClass c) {
  switch (c) {
    case AlgebraClass::IdempotentSemiring: return "idempotent-semiring";
    case AlgebraClass::OneBoundedIdempotent: return "1-bounded-idempotent";
    case AlgebraClass::InvolutiveSemiring: return "involutive-semiring";
    case AlgebraClass::OneBoundedInvolutive: return "1-bounded-involutive";
    case AlgebraClass::PointedResiduated: return "pointed-residuated";
  }
  return "?";
}

std::optional<AlgebraClass> class_from_string(const std::string& s) {
  for (AlgebraClass c :
       {AlgebraClass::IdempotentSemiring, AlgebraClass::OneBoundedIdempotent,
        AlgebraClass::InvolutiveSemiring, AlgebraClass::OneBoundedInvolutive,
        AlgebraClass::PointedResiduated}) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

namespace {

struct ClassTraits {
  bool need_bottom;       // bottom exists and sits at index 0
  bool declare_zero;      // emitted tables declare zero = bottom
  bool one_is_top;        // unit pinned to the top element
  bool involutive;        // search over order-reversing negation pairs
  bool bottom_absorbs;    // x*0 = 0 = 0*x prefilled
  bool bound_by_meet;     // candidate values capped by the meet (1-bounded)
  bool need_residuals;    // final filter: residuals must exist
};

ClassTraits traits_of(AlgebraClass c) {
  switch (c) {
    case AlgebraClass::IdempotentSemiring:
      return {true, true, false, false, true, false, false};
    case AlgebraClass::OneBoundedIdempotent:
      return {true, true, true, false, true, true, false};
    case AlgebraClass::InvolutiveSemiring:
      return {false, false, false, true, false, false, false};
    case AlgebraClass::OneBoundedInvolutive:
      return {true, true, true, true, true, true, false};
    case AlgebraClass::PointedResiduated:
      return {true, true, false, false, true, false, true};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Stage 1: naturally labeled join-semilattices (indices extend the order).
// Element j is added with a chosen down-set; the partial join table grows
// with it, and any pair acquiring its first upper bound gets j as its join.
// ---------------------------------------------------------------------------

struct SemilatticeGen {
  int n;
  bool need_bottom;
  std::vector<BinaryTable> out;
  BinaryTable join;              // -1 = no common upper bound yet
  std::vector<Mask> down;        // down[x] includes x

  void run() {
    join.assign(static_cast<size_t>(n) * n, -1);
    down.assign(n, 0);
    join[0] = 0;
    down[0] = 1;
    extend(1);
  }

  void extend(int j) {
    if (j == n) {
      for (int i = 0; i < n * n; ++i)
        if (join[i] < 0) return;  // some pair never got an upper bound
      out.push_back(join);
      return;
    }
    const Mask below = (Mask{1} << j) - 1;
    for (Mask d = 0; d <= below; ++d) {
      if (need_bottom && !(d & 1)) continue;
      bool ok = true;
      for (int x = 0; x < j && ok; ++x)
        if ((d >> x) & 1u) ok = (down[x] & ~d) == 0;  // down-closed
      if (!ok) continue;
      // Existing joins of pairs inside d must lie inside d.
      for (int x = 0; x < j && ok; ++x) {
        if (!((d >> x) & 1u)) continue;
        for (int y = x; y < j && ok; ++y) {
          if (!((d >> y) & 1u)) continue;
          const Idx z = join[x * n + y];
          if (z >= 0 && !((d >> z) & 1u)) ok = false;
        }
      }
      if (!ok) continue;

      BinaryTable saved_join = join;
      std::vector<Mask> saved_down = down;
      down[j] = d | (Mask{1} << j);
      join[j * n + j] = j;
      for (int x = 0; x < j; ++x) {
        if ((d >> x) & 1u) {
          join[x * n + j] = j;
          join[j * n + x] = j;
        }
      }
      for (int x = 0; x < j; ++x) {
        if (!((d >> x) & 1u)) continue;
        for (int y = x; y < j; ++y) {
          if (!((d >> y) & 1u)) continue;
          if (join[x * n + y] < 0) {
            join[x * n + y] = j;
            join[y * n + x] = j;
          }
        }
      }
      extend(j + 1);
      join = std::move(saved_join);
      down = std::move(saved_down);
    }
  }
};

std::string bare_lattice_key(int n, const BinaryTable& join) {
  std::vector<Idx> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  std::string cand(static_cast<size_t>(n) * n, 0);
  do {
    for (Idx x = 0; x < n; ++x)
      for (Idx y = 0; y < n; ++y)
        cand[perm[x] * n + perm[y]] = static_cast<char>(perm[join[x * n + y]]);
    if (best.empty() || cand < best) best = cand;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<BinaryTable> semilattices_up_to_iso(int n, bool need_bottom) {
  SemilatticeGen gen{n, need_bottom, {}, {}, {}};
  gen.run();
  std::map<std::string, BinaryTable> reps;
  for (auto& j : gen.out) reps.try_emplace(bare_lattice_key(n, j), std::move(j));
  std::vector<BinaryTable> out;
  out.reserve(reps.size());
  for (auto& [k, j] : reps) out.push_back(std::move(j));
  return out;
}

std::vector<std::vector<Idx>> order_reversing_bijections(int n,
                                                         const BinaryTable& join) {
  const auto leq = [&](Idx x, Idx y) { return join[x * n + y] == y; };
  std::vector<Idx> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<Idx>> out;
  do {
    bool ok = true;
    for (Idx x = 0; x < n && ok; ++x)
      for (Idx y = 0; y < n && ok; ++y)
        if (leq(x, y) != leq(perm[y], perm[x])) ok = false;
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Stage 3: mult-table backtracking. Cells are filled row-major; a cell with
// a join-reducible row or column is forced by distributivity from earlier
// cells, so branching happens on irreducible pairs only. Pruning rules are
// all sound consequences of the class axioms; the emitted algebra is
// revalidated by the class predicate regardless.
// ---------------------------------------------------------------------------

struct MultSearch {
  int n = 0;
  const BinaryTable* join = nullptr;
  Idx one = 0;
  std::optional<Idx> absorbing_zero;
  const std::vector<Idx>* lneg = nullptr;  // ~  (involutive classes)
  const std::vector<Idx>* rneg = nullptr;  // -
  Idx minus_one = -1;
  bool bound_by_meet = false;
  BinaryTable meet;                          // valid when bound_by_meet
  std::vector<std::pair<Idx, Idx>> decomp;   // per element; (-1,-1) = irreducible
  std::function<void(const BinaryTable&)> leaf;

  BinaryTable mult;

  bool leq(Idx x, Idx y) const { return (*join)[x * n + y] == y; }
  Idx jn(Idx x, Idx y) const { return (*join)[x * n + y]; }

  bool cell_ok(Idx r, Idx c, Idx v) const {
    if (lneg) {
      // x*u <= -1  iff  x <= -u, entrywise
      if (leq(v, minus_one) != leq(r, (*rneg)[c])) return false;
    }
    if (bound_by_meet && !leq(v, meet[r * n + c])) return false;
    // associativity on triples whose cells are all present
    for (Idx t = 0; t < n; ++t) {
      {  // (r,c,t)
        const Idx ct = mult[c * n + t];
        if (ct >= 0 && mult[v * n + t] >= 0 && mult[r * n + ct] >= 0 &&
            mult[v * n + t] != mult[r * n + ct])
          return false;
      }
      {  // (t,r,c)
        const Idx tr = mult[t * n + r];
        if (tr >= 0 && mult[t * n + v] >= 0 && mult[tr * n + c] >= 0 &&
            mult[t * n + v] != mult[tr * n + c])
          return false;
      }
    }
    // triples that evaluate through (r,c) as a product cell
    for (Idx x = 0; x < n; ++x)
      for (Idx y = 0; y < n; ++y) {
        if (mult[x * n + y] == r && y != c) {  // (x,y,c): (xy)c vs x(yc)
          const Idx yc = mult[y * n + c];
          if (yc >= 0 && mult[x * n + yc] >= 0 && mult[x * n + yc] != v) return false;
        }
        if (mult[x * n + y] == c && x != r) {  // (r,x,y): (rx)y vs r(xy)
          const Idx rx = mult[r * n + x];
          if (rx >= 0 && mult[rx * n + y] >= 0 && mult[rx * n + y] != v) return false;
        }
      }
    // distributivity with one operand joined in
    for (Idx t = 0; t < n; ++t) {
      const Idx w = jn(c, t);
      if (mult[r * n + t] >= 0 && mult[r * n + w] >= 0 &&
          mult[r * n + w] != jn(v, mult[r * n + t]))
        return false;
      const Idx w2 = jn(r, t);
      if (mult[t * n + c] >= 0 && mult[w2 * n + c] >= 0 &&
          mult[w2 * n + c] != jn(v, mult[t * n + c]))
        return false;
    }
    return true;
  }

  void run() {
    mult.assign(static_cast<size_t>(n) * n, -1);
    // unit row/column
    for (Idx x = 0; x < n; ++x) {
      if (!place(one, x, x)) return;
      if (!place(x, one, x)) return;
    }
    if (absorbing_zero) {
      const Idx z = *absorbing_zero;
      for (Idx x = 0; x < n; ++x) {
        if (!place(z, x, z)) return;
        if (!place(x, z, z)) return;
      }
    }
    descend(0);
  }

  // Places a forced value unless the cell already holds it.
  bool place(Idx r, Idx c, Idx v) {
    Idx& cell = mult[r * n + c];
    if (cell >= 0) return cell == v;
    if (!cell_ok(r, c, v)) return false;
    cell = v;
    return true;
  }

  void descend(int pos) {
    if (pos == n * n) {
      leaf(mult);
      return;
    }
    const Idx r = pos / n, c = pos % n;
    if (mult[pos] >= 0) {
      descend(pos + 1);
      return;
    }
    const auto [ru, rv] = decomp[r];
    if (ru >= 0) {  // r = ru v rv with earlier rows
      const Idx v = jn(mult[ru * n + c], mult[rv * n + c]);
      if (place(r, c, v)) {
        descend(pos + 1);
        mult[pos] = -1;
      }
      return;
    }
    const auto [cu, cv] = decomp[c];
    if (cu >= 0) {  // c = cu v cv with earlier columns
      const Idx v = jn(mult[r * n + cu], mult[r * n + cv]);
      if (place(r, c, v)) {
        descend(pos + 1);
        mult[pos] = -1;
      }
      return;
    }
    for (Idx v = 0; v < n; ++v) {
      if (!cell_ok(r, c, v)) continue;
      mult[pos] = v;
      descend(pos + 1);
      mult[pos] = -1;
    }
  }
};

bool class_predicate(AlgebraClass cls, const AlgebraTable& a) {
  if (!validate(a).pass) return false;
  switch (cls) {
    case AlgebraClass::IdempotentSemiring:
      return is_idempotent_semiring(a).pass;
    case AlgebraClass::OneBoundedIdempotent:
      return is_idempotent_semiring(a).pass && is_one_bounded(a).pass;
    case AlgebraClass::InvolutiveSemiring:
      return is_involutive_semiring(a).pass;
    case AlgebraClass::OneBoundedInvolutive:
      return is_idempotent_semiring(a).pass && is_one_bounded(a).pass &&
             is_involutive_semiring(a).pass && is_one_bounded_involutive(a).pass;
    case AlgebraClass::PointedResiduated:
      return is_idempotent_semiring(a).pass && residuals(a).report.pass;
  }
  return false;
}

// Decomposition of join-reducible elements into two strictly smaller parts
// (smaller in the order, hence at earlier indices under natural labeling).
std::vector<std::pair<Idx, Idx>> reducible_decomposition(int n, const BinaryTable& join) {
  const auto leq = [&](Idx x, Idx y) { return join[x * n + y] == y; };
  std::vector<std::pair<Idx, Idx>> d(n, {-1, -1});
  for (Idx x = 0; x < n; ++x)
    for (Idx u = 0; u < n && d[x].first < 0; ++u) {
      if (!leq(u, x) || u == x) continue;
      for (Idx v = u; v < n && d[x].first < 0; ++v) {
        if (!leq(v, x) || v == x) continue;
        if (join[u * n + v] == x) d[x] = {u, v};
      }
    }
  return d;
}

// One (lattice, unit, negation-pair) branch of the size-n search.
struct SizeBranch {
  BinaryTable join;
  Idx one;
  std::optional<std::vector<Idx>> lneg, rneg;
};

std::vector<SizeBranch> branches_for(int n, AlgebraClass cls,
                                     const BinaryTable& join) {
  const ClassTraits t = traits_of(cls);
  std::vector<SizeBranch> out;
  std::vector<Idx> units;
  if (t.one_is_top)
    units.push_back(n - 1);
  else
    for (Idx u = 0; u < n; ++u) units.push_back(u);
  if (!t.involutive) {
    for (Idx u : units) out.push_back({join, u, std::nullopt, std::nullopt});
    return out;
  }
  for (const auto& phi : order_reversing_bijections(n, join)) {
    std::vector<Idx> inv(n);
    for (Idx x = 0; x < n; ++x) inv[phi[x]] = x;
    for (Idx u : units) {
      if (phi[u] != inv[u]) continue;  // ~1 = -1 holds in every involutive semiring
      out.push_back({join, u, phi, inv});
    }
  }
  return out;
}

void run_branch(int n, AlgebraClass cls, const SizeBranch& br,
                const std::function<void(AlgebraTable&&)>& sink) {
  const ClassTraits t = traits_of(cls);
  MultSearch search;
  search.n = n;
  search.join = &br.join;
  search.one = br.one;
  if (t.bottom_absorbs) search.absorbing_zero = 0;
  if (br.lneg) {
    search.lneg = &*br.lneg;
    search.rneg = &*br.rneg;
    search.minus_one = (*br.rneg)[br.one];
  }
  if (t.bound_by_meet) {
    AlgebraTable tmp;
    tmp.size = n;
    tmp.join = br.join;
    tmp.mult = br.join;  // placeholder, meets depend on join only
    tmp.one = br.one;
    search.bound_by_meet = true;
    search.meet = meet_table(tmp);
  }
  search.decomp = reducible_decomposition(n, br.join);
  search.leaf = [&](const BinaryTable& mult) {
    AlgebraTable a;
    a.size = n;
    a.join = br.join;
    a.mult = mult;
    a.one = br.one;
    if (br.lneg) {
      a.lneg = br.lneg;
      a.rneg = br.rneg;
    }
    if (t.declare_zero)
      a.zero = 0;
    else if (br.rneg)
      a.zero = std::nullopt;  // 0-free presentation: -1 stays derived
    if (class_predicate(cls, a)) sink(std::move(a));
  };
  search.run();
}

// ---------------------------------------------------------------------------
// Checkpointing: enough to resume from the next unprocessed lattice branch.
// ---------------------------------------------------------------------------

struct CheckpointData {
  int size = 1;
  long long next_lattice = 0;
  std::vector<std::string> found;  // emitted algebra blocks
};

std::string spec_fingerprint(const SearchSpec& spec, int only_size) {
  std::string s = to_string(spec.cls) + "/" + std::to_string(spec.max_size) + "/" +
                  std::to_string(only_size);
  for (const auto& [name, want] : spec.filters)
    s += "/" + name + "=" + (want ? "1" : "0");
  return s;
}

void save_checkpoint(const std::string& file, const SearchSpec& spec, int only_size,
                     const CheckpointData& data) {
  nlohmann::json j;
  j["version"] = 1;
  j["spec"] = spec_fingerprint(spec, only_size);
  j["size"] = data.size;
  j["next_lattice"] = data.next_lattice;
  j["found"] = data.found;
  std::ofstream out(file, std::ios::trunc);
  if (!out) throw input_error("cannot write checkpoint file '" + file + "'");
  out << j.dump(1) << '\n';
}

std::optional<CheckpointData> load_checkpoint(const std::string& file,
                                              const SearchSpec& spec, int only_size) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw input_error("checkpoint file '" + file + "' is corrupt: " + e.what());
  }
  if (j.value("version", 0) != 1)
    throw input_error("checkpoint file '" + file + "' has an unknown version");
  if (j.value("spec", "") != spec_fingerprint(spec, only_size))
    throw input_error("checkpoint file '" + file + "' was written for a different search");
  CheckpointData data;
  data.size = j.value("size", 1);
  data.next_lattice = j.value("next_lattice", 0);
  data.found = j.value("found", std::vector<std::string>{});
  return data;
}

}  // namespace

EnumOutcome enumerate_collect(const SearchSpec& spec, const EnumOptions& opts) {
  if (spec.max_size < 1) throw input_error("enumerate: max_size must be >= 1");
  if (spec.max_size > 8) throw unsupported_error("enumerate: max_size is capped at 8");
  const ClassTraits traits = traits_of(spec.cls);

  std::vector<int> sizes;
  if (opts.only_size > 0)
    sizes.push_back(opts.only_size);
  else
    for (int n = 1; n <= spec.max_size; ++n) sizes.push_back(n);

  CheckpointData progress;
  progress.size = sizes.front();
  if (!opts.checkpoint_file.empty()) {
    if (auto loaded = load_checkpoint(opts.checkpoint_file, spec, opts.only_size))
      progress = *loaded;
  }
  // Keyed collection; resume re-keys previously found algebras.
  std::map<std::pair<int, std::string>, AlgebraTable> found;
  for (const auto& text : progress.found) {
    AlgebraPtr a = parse_algebra(text);
    found.emplace(std::make_pair(a->size, canonical_key(*a).bytes), *a);
  }

  long long budget = opts.branch_budget;
  bool completed = true;
  long long processed = 0;
  int since_save = 0;

  for (int n : sizes) {
    if (!completed || n < progress.size) continue;
    const auto lattices = semilattices_up_to_iso(n, traits.need_bottom);
    const long long start =
        (n == progress.size) ? progress.next_lattice : 0;
    for (long long li = start; li < static_cast<long long>(lattices.size()); ++li) {
      if (budget == 0) {
        completed = false;
        progress.size = n;
        progress.next_lattice = li;
        break;
      }
      for (const SizeBranch& br : branches_for(n, spec.cls, lattices[li])) {
        run_branch(n, spec.cls, br, [&](AlgebraTable&& a) {
          std::string key = canonical_key(a).bytes;
          found.emplace(std::make_pair(n, std::move(key)), std::move(a));
        });
      }
      ++processed;
      if (budget > 0) --budget;
      if (!opts.checkpoint_file.empty() && ++since_save >= opts.checkpoint_every) {
        since_save = 0;
        progress.size = n;
        progress.next_lattice = li + 1;
        progress.found.clear();
        for (const auto& [k, a] : found) progress.found.push_back(emit(a));
        save_checkpoint(opts.checkpoint_file, spec, opts.only_size, progress);
      }
    }
    if (completed) {
      progress.size = n + 1;
      progress.next_lattice = 0;
    }
  }

  if (!opts.checkpoint_file.empty()) {
    progress.found.clear();
    for (const auto& [k, a] : found) progress.found.push_back(emit(a));
    save_checkpoint(opts.checkpoint_file, spec, opts.only_size, progress);
  }

  EnumOutcome out;
  out.completed = completed;
  out.branches_processed = processed;
  std::map<int, long long> ordinal;
  for (auto& [key, a] : found) {
    AlgebraTable alg = a;
    alg.name = to_string(spec.cls) + "-" + std::to_string(key.first) + "-" +
               std::to_string(ordinal[key.first]++);
    for (char& ch : alg.name)
      if (ch == '-') ch = '_';
    bool keep = true;
    auto ptr = std::make_shared<AlgebraTable>(alg);
    for (const auto& [check, want] : spec.filters) {
      try {
        if (run_named_check(ptr, check).pass != want) keep = false;
      } catch (const unsupported_error&) {
        keep = false;
      }
      if (!keep) break;
    }
    if (!keep) continue;
    out.algebras.push_back(std::move(alg));
    if (spec.limit && static_cast<long long>(out.algebras.size()) >= *spec.limit) break;
  }
  return out;
}

void enumerate_algebras(const SearchSpec& spec,
                        const std::function<bool(const AlgebraTable&)>& emit) {
  EnumOutcome outcome = enumerate_collect(spec);
  for (const AlgebraTable& a : outcome.algebras)
    if (!emit(a)) return;
}

NondistributiveResult smallest_nondistributive(int max_size, const EnumOptions& opts) {
  constexpr const char* check = "smallest_nondistributive";
  NondistributiveResult res;
  for (int n = 1; n <= max_size; ++n) {
    SearchSpec spec;
    spec.cls = AlgebraClass::OneBoundedInvolutive;
    spec.max_size = n;
    EnumOptions sized = opts;
    sized.only_size = n;  // sizes below n were handled in earlier iterations
    if (!opts.checkpoint_file.empty())
      sized.checkpoint_file = opts.checkpoint_file + "." + std::to_string(n);
    EnumOutcome outcome = enumerate_collect(spec, sized);
    for (const AlgebraTable& a : outcome.algebras) {
      if (a.size != n) continue;
      ++res.instances_checked;
      if (!is_lattice_distributive(a).pass) {
        res.witness = a;
        res.report = Report::ok(
            check, "size " + std::to_string(n) + " witness " + a.name);
        res.completed = outcome.completed;
        return res;
      }
    }
    if (!outcome.completed) {
      res.completed = false;
      res.report = Report::ok(check, "budget exhausted at size " + std::to_string(n) +
                                         "; resume from checkpoint");
      return res;
    }
  }
  res.report = Report::ok(check, "none up to size " + std::to_string(max_size));
  return res;
}

BatteryResult theorem_battery(const SearchSpec& spec,
                              const std::vector<std::string>& checks, int threads) {
  EnumOutcome outcome = enumerate_collect(spec);
  std::vector<AlgebraPtr> instances;
  instances.reserve(outcome.algebras.size());
  for (const AlgebraTable& a : outcome.algebras)
    instances.push_back(std::make_shared<AlgebraTable>(a));

  BatteryResult result;
  result.report = Report::ok("theorem_battery");
  for (const std::string& check : checks) {
    BatteryLine line;
    line.check = check;
    line.instances = static_cast<long long>(instances.size());
    // 0 = pass, 1 = fail, 2 = skipped (precondition refused)
    std::vector<int> verdicts(instances.size(), 0);
    std::vector<std::string> details(instances.size());
    const auto eval = [&](size_t i) {
      try {
        Report r = run_named_check(instances[i], check);
        verdicts[i] = r.pass ? 0 : 1;
        if (!r.pass) details[i] = r.detail;
      } catch (const unsupported_error&) {
        verdicts[i] = 2;
      }
    };
    if (threads > 1 && instances.size() > 1) {
      std::vector<std::future<void>> futs;
      std::atomic<size_t> next{0};
      const int workers = std::min<int>(threads, static_cast<int>(instances.size()));
      for (int w = 0; w < workers; ++w)
        futs.push_back(std::async(std::launch::async, [&] {
          for (size_t i = next.fetch_add(1); i < instances.size();
               i = next.fetch_add(1))
            eval(i);
        }));
      for (auto& f : futs) f.get();
    } else {
      for (size_t i = 0; i < instances.size(); ++i) eval(i);
    }
    for (size_t i = 0; i < instances.size(); ++i) {
      if (verdicts[i] == 1) {
        ++line.failures;
        if (line.first_failure.empty())
          line.first_failure = instances[i]->name + ": " + details[i];
      } else if (verdicts[i] == 2) {
        ++line.skipped;
      }
    }
    if (line.failures > 0 && result.report.pass)
      result.report = Report::fail("theorem_battery", {},
                                   check + " fails on " + line.first_failure);
    result.lines.push_back(std::move(line));
  }
  return result;
}

}  // namespace invsem
