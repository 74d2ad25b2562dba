// Acceptance suite: the golden examples and exhaustive property runs, one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "invsem/axioms.hpp"
#include "invsem/corpus.hpp"
#include "invsem/decide.hpp"
#include "invsem/enumerate.hpp"
#include "invsem/homs.hpp"
#include "invsem/io.hpp"
#include "invsem/termeq.hpp"

using namespace invsem;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(int number, const std::string& what, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string note;
  const auto start = Clock::now();
  bool ok = false;
  try {
    ok = body(note);
  } catch (const std::exception& e) {
    ok = false;
    note = std::string("exception: ") + e.what();
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (budget_seconds > 0 && seconds > budget_seconds) {
    ok = false;
    note += " [over time budget]";
  }
  std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number,
              what.c_str(), seconds, note.empty() ? "" : " -- ", note.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::vector<AlgebraPtr> enumerate_ptrs(AlgebraClass cls, int max_size,
                                       std::vector<std::pair<std::string, bool>> filters = {}) {
  SearchSpec spec;
  spec.cls = cls;
  spec.max_size = max_size;
  spec.filters = std::move(filters);
  EnumOutcome out = enumerate_collect(spec);
  std::vector<AlgebraPtr> ptrs;
  ptrs.reserve(out.algebras.size());
  for (auto& a : out.algebras) ptrs.push_back(std::make_shared<AlgebraTable>(a));
  return ptrs;
}

// Down-closure + join-closure of a subset, computed from the join table;
// an independent route to the meet of a family in Id(A).
Mask ideal_closure(const AlgebraTable& a, Mask in) {
  bool grew = true;
  while (grew) {
    grew = false;
    for (Idx x = 0; x < a.size; ++x) {
      if (!((in >> x) & 1u)) continue;
      for (Idx y = 0; y < a.size; ++y) {
        if (((in >> y) & 1u)) continue;
        if (a.leq(y, x)) {
          in |= Mask{1} << y;
          grew = true;
        }
      }
      for (Idx y = 0; y < a.size; ++y) {
        if (!((in >> y) & 1u)) continue;
        const Mask bit = Mask{1} << a.join_of(x, y);
        if (!(in & bit)) in |= bit, grew = true;
      }
    }
  }
  return in;
}

}  // namespace

int main() {
  std::vector<Retraction> certified;  // retractions discovered in criteria 1-2
  std::vector<SemimodulePtr> certified_injective;

  criterion(1, "A3 is projective but not injective over itself", 1.0,
            [&](std::string& note) {
              AlgebraPtr a3 = corpus_algebra("A3");
              DecisionResult proj = is_projective(a3, regular(a3));
              DecisionResult inj = is_injective(a3, regular(a3));
              if (!proj.report.pass) {
                note = "projectivity verdict wrong";
                return false;
              }
              if (proj.retraction) certified.push_back(*proj.retraction);
              if (inj.report.pass) {
                note = "injectivity verdict wrong";
                return false;
              }
              if (ideals(*regular(a3)).size() != 3) {
                note = "embedding index set is not ideals(A3)";
                return false;
              }
              if (inj.report.detail.find("Id(A)^3") == std::string::npos) {
                note = "search did not go through Id(A3)^{ideals(A3)}: " +
                       inj.report.detail;
                return false;
              }
              return true;
            });

  criterion(2, "C4 suite: classification, 2-potency, self-injectivity, cyclics", 1.0,
            [&](std::string& note) {
              AlgebraPtr c4 = corpus_algebra("C4");
              const auto expect = [&](bool got, const char* what) {
                if (!got) note = what;
                return got;
              };
              if (!expect(validate(*c4).pass, "validate")) return false;
              if (!expect(is_one_bounded(*c4).pass, "1-bounded")) return false;
              if (!expect(is_commutative(*c4).pass, "commutative")) return false;
              if (!expect(is_one_bounded_involutive(*c4).pass, "involutive"))
                return false;
              if (!expect(is_n_potent(*c4, 2).pass, "2-potent")) return false;
              if (!expect(!is_n_potent(*c4, 1).pass, "not 1-potent")) return false;
              DecisionResult self = is_self_injective(c4);
              if (!expect(self.report.pass, "self-injective")) return false;
              if (self.retraction) certified.push_back(*self.retraction);
              certified_injective.push_back(regular(c4));
              for (Idx u : {0, 2, 3}) {  // {0}, Cb, C4
                DecisionResult i = is_injective(c4, cyclic(c4, u));
                DecisionResult p = is_projective(c4, cyclic(c4, u));
                if (!expect(i.report.pass && p.report.pass, "cyclic injective+projective"))
                  return false;
                if (i.retraction) certified.push_back(*i.retraction);
                if (p.retraction) certified.push_back(*p.retraction);
                certified_injective.push_back(cyclic(c4, u));
              }
              if (!expect(!is_injective(c4, cyclic(c4, 1)).report.pass, "Ca not injective"))
                return false;
              if (!expect(!is_projective(c4, cyclic(c4, 1)).report.pass,
                          "Ca not projective"))
                return false;
              return true;
            });

  criterion(3, "term equivalence round-trips on 1-bounded involutive semirings <= 5",
            300.0, [&](std::string& note) {
              auto algebras = enumerate_ptrs(AlgebraClass::OneBoundedInvolutive, 5);
              if (algebras.size() != 9) {
                note = "unexpected stream size " + std::to_string(algebras.size());
                return false;
              }
              for (const auto& a : algebras) {
                if (!roundtrip_check(*a).pass) {
                  note = "roundtrip fails on " + a->name;
                  return false;
                }
                if (!involutive_identities(*a).pass) {
                  note = "identity battery fails on " + a->name;
                  return false;
                }
              }
              return true;
            });

  criterion(4, "interval subalgebra verdict equals 0*0=0 on involutive semirings <= 5",
            0.0, [&](std::string& note) {
              auto algebras = enumerate_ptrs(AlgebraClass::InvolutiveSemiring, 5);
              int nonidem = 0;
              for (const auto& a : algebras) {
                if (!interval_criterion(*a).pass) {
                  note = "disagreement on " + a->name;
                  return false;
                }
                if (a->mult_of(a->rneg_of(a->one), a->rneg_of(a->one)) !=
                    a->rneg_of(a->one))
                  ++nonidem;
              }
              if (nonidem == 0) {
                note = "0*0 != 0 side never exercised";
                return false;
              }
              note = std::to_string(algebras.size()) + " instances, " +
                     std::to_string(nonidem) + " with 0*0 != 0";
              return true;
            });

  criterion(5, "Hom_B(A,B) isomorphic to Id(A) on idempotent semirings <= 4 and corpus",
            0.0, [&](std::string& note) {
              for (const auto& a : enumerate_ptrs(AlgebraClass::IdempotentSemiring, 4))
                if (!hom_id_iso_check(a).pass) {
                  note = "fails on " + a->name;
                  return false;
                }
              for (const auto& entry : builtin_corpus())
                if (!hom_id_iso_check(entry.algebra).pass) {
                  note = "fails on corpus " + entry.name;
                  return false;
                }
              return true;
            });

  criterion(6, "Phi biconditional on 1-bounded pointed residuated semilattices <= 5",
            0.0, [&](std::string& note) {
              auto algebras = enumerate_ptrs(AlgebraClass::PointedResiduated, 5,
                                             {{"is_one_bounded", true}});
              for (const auto& a : algebras)
                if (!phi_check(a).pass) {
                  note = "fails on " + a->name;
                  return false;
                }
              note = std::to_string(algebras.size()) + " instances";
              return true;
            });

  criterion(7, "injective iff projective on subsemimodules, 1-bounded involutive <= 4",
            600.0, [&](std::string& note) {
              for (const auto& a : enumerate_ptrs(AlgebraClass::OneBoundedInvolutive, 4))
                if (!injective_iff_projective_check(a, 2).pass) {
                  note = "fails on " + a->name;
                  return false;
                }
              return true;
            });

  criterion(8, "cyclic trichotomy on 1-bounded involutive semirings <= 4", 0.0,
            [&](std::string& note) {
              for (const auto& a : enumerate_ptrs(AlgebraClass::OneBoundedInvolutive, 4))
                if (!cyclic_trichotomy_check(a).pass) {
                  note = "fails on " + a->name;
                  return false;
                }
              return true;
            });

  criterion(9, "strong/faithful, Boolean, n-potency and principal-ideal batteries", 0.0,
            [&](std::string& note) {
              for (const auto& a :
                   enumerate_ptrs(AlgebraClass::OneBoundedInvolutive, 4,
                                  {{"is_nilpotent_semiring", true}}))
                if (!strong_iff_faithful_check(a).pass) {
                  note = "strong/faithful fails on " + a->name;
                  return false;
                }
              for (const auto& a : enumerate_ptrs(AlgebraClass::OneBoundedInvolutive, 5))
                if (!mult_idempotent_iff_boolean(a).pass) {
                  note = "Boolean biconditional fails on " + a->name;
                  return false;
                }
              for (const auto& a : enumerate_ptrs(AlgebraClass::OneBoundedIdempotent, 4)) {
                for (int n = 1; n <= 4; ++n) {
                  if (!n_vn_regular_iff_n_potent(a, n).pass) {
                    note = "vN-regular/potent fails on " + a->name;
                    return false;
                  }
                  if (!npotent_selfinjective_check(a, n).pass) {
                    note = "n-potent self-injective fails on " + a->name;
                    return false;
                  }
                }
              }
              for (const auto& a : enumerate_ptrs(AlgebraClass::OneBoundedInvolutive, 4))
                if (!principal_ideal_equivalence_check(a).pass) {
                  note = "principal-ideal equivalence fails on " + a->name;
                  return false;
                }
              return true;
            });

  criterion(10, "non-distributive 1-bounded involutive lattices first appear at size 7",
            1800.0, [&](std::string& note) {
              NondistributiveResult none = smallest_nondistributive(6);
              if (none.witness || !none.completed) {
                note = "unexpected witness below size 7";
                return false;
              }
              NondistributiveResult found = smallest_nondistributive(7);
              if (!found.witness || found.witness->size != 7) {
                note = "no size-7 witness";
                return false;
              }
              AlgebraPtr back = parse_algebra(emit(*found.witness));
              if (!validate(*back).pass || !is_one_bounded(*back).pass ||
                  !is_involutive_semiring(*back).pass ||
                  !is_one_bounded_involutive(*back).pass ||
                  !is_involutive_rl(*back).pass) {
                note = "witness does not re-validate";
                return false;
              }
              if (is_lattice_distributive(*back).pass) {
                note = "witness is distributive after re-parsing";
                return false;
              }
              // checkpoint/resume: budget-limited runs converge to the same witness
              const std::string ckpt = "/tmp/invsem_acceptance_ckpt.json";
              for (int n = 1; n <= 7; ++n)
                std::remove((ckpt + "." + std::to_string(n)).c_str());
              EnumOptions opts;
              opts.checkpoint_file = ckpt;
              opts.branch_budget = 5;
              opts.checkpoint_every = 1;
              NondistributiveResult resumed;
              int rounds = 0;
              do {
                resumed = smallest_nondistributive(7, opts);
                if (++rounds > 500) {
                  note = "resume did not converge";
                  return false;
                }
              } while (!resumed.completed && !resumed.witness);
              for (int n = 1; n <= 7; ++n)
                std::remove((ckpt + "." + std::to_string(n)).c_str());
              if (!resumed.witness ||
                  !(canonical_key(*resumed.witness) == canonical_key(*found.witness))) {
                note = "checkpointed run found a different witness";
                return false;
              }
              note = "resumed in " + std::to_string(rounds) + " budgeted runs";
              return true;
            });

  criterion(11, "products from {B2, A3, C4, L3} are self-injective iff all factors are",
            0.0, [&](std::string& note) {
              const std::vector<std::string> pool{"B2", "A3", "C4", "L3"};
              for (const auto& x : pool)
                for (const auto& y : pool) {
                  AlgebraPtr ax = corpus_algebra(x), ay = corpus_algebra(y);
                  if (!product_selfinjective_check({ax, ay}).pass) {
                    note = "fails on " + x + " x " + y;
                    return false;
                  }
                }
              return true;
            });

  criterion(12, "ideal-lattice completeness, MID, and MID-retract closure", 0.0,
            [&](std::string& note) {
              for (const auto& entry : builtin_corpus()) {
                const AlgebraPtr& a = entry.algebra;
                IdSemimodule ids = id_semimodule(a);
                const int n = ids.module->size;
                const Mask full = (a->size == 64) ? ~Mask{0} : (Mask{1} << a->size) - 1;
                // completeness: the join of any family is the intersection
                for (Mask family = 0; family < (Mask{1} << n); ++family) {
                  Idx join_idx = ids.module->zero;
                  Mask inter = full;
                  for (int i = 0; i < n; ++i)
                    if ((family >> i) & 1u) {
                      join_idx = ids.module->join_of(join_idx, i);
                      inter &= ids.ideal_list[i].members;
                    }
                  if (ids.ideal_list[join_idx].members != inter) {
                    note = "join of ideals is not intersection in " + entry.name;
                    return false;
                  }
                }
                // MID for the ideal lattice under join-distributivity, with the
                // meet checked against the closure-of-union route
                if (is_join_distributive(*a).pass) {
                  AlgebraTable idlat;
                  idlat.size = n;
                  idlat.join = ids.module->join;
                  idlat.mult = ids.module->join;
                  idlat.one = 0;
                  const BinaryTable meets = meet_table(idlat);
                  Idx top = ids.module->zero;
                  for (int i = 0; i < n; ++i) top = ids.module->join_of(top, i);
                  const auto meet_fold = [&](Mask family) {
                    Idx acc = top;
                    for (int i = 0; i < n; ++i)
                      if ((family >> i) & 1u) acc = meets[acc * n + i];
                    return acc;
                  };
                  for (Mask family = 0; family < (Mask{1} << n); ++family) {
                    Mask unions = 0;
                    for (int i = 0; i < n; ++i)
                      if ((family >> i) & 1u) unions |= ids.ideal_list[i].members;
                    const Mask closed =
                        family == 0 ? ids.ideal_list[top].members
                                    : ideal_closure(*a, unions);
                    if (ids.ideal_list[meet_fold(family)].members != closed) {
                      note = "meet of ideals differs from closure of union in " +
                             entry.name;
                      return false;
                    }
                    for (Idx j = 0; j < n; ++j) {
                      const Idx lhs = ids.module->join_of(j, meet_fold(family));
                      Idx rhs = top;
                      for (int i = 0; i < n; ++i)
                        if ((family >> i) & 1u)
                          rhs = meets[rhs * n + ids.module->join_of(j, i)];
                      if (lhs != rhs) {
                        note = "MID fails for ideals of " + entry.name;
                        return false;
                      }
                    }
                  }
                }
              }
              for (const auto& m : certified_injective)
                if (!is_mid_complete(*m).pass) {
                  note = "certified injective semimodule " + m->name +
                         " is not MID-complete";
                  return false;
                }
              int checked = 0;
              for (const auto& r : certified) {
                if (!r.outer) continue;
                if (is_mid_complete(*r.outer).pass && !is_mid_complete(*r.inner).pass) {
                  note = "retract of a MID-complete object is not MID-complete";
                  return false;
                }
                ++checked;
              }
              note = std::to_string(checked) + " retractions checked";
              return checked > 0;
            });

  std::printf("%s\n", failures == 0 ? "acceptance: all criteria pass"
                                    : "acceptance: FAILURES present");
  return failures == 0 ? 0 : 1;
}
