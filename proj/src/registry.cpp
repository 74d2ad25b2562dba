#include "invsem/registry.hpp"

#include <charconv>
#include <functional>
#include <map>
#include <optional>

#include "invsem/axioms.hpp"
#include "invsem/decide.hpp"
#include "invsem/homs.hpp"
#include "invsem/termeq.hpp"

namespace invsem {

namespace {

using CheckFn = std::function<Report(const AlgebraPtr&, std::optional<int>)>;

int need_param(const std::optional<int>& p, const char* name) {
  if (!p) throw input_error(std::string(name) + " needs a parameter (name:N)");
  return *p;
}

const std::map<std::string, CheckFn>& table() {
  static const std::map<std::string, CheckFn> reg = {
      {"validate", [](const AlgebraPtr& a, auto) { return validate(*a); }},
      {"is_idempotent_semiring",
       [](const AlgebraPtr& a, auto) { return is_idempotent_semiring(*a); }},
      {"is_one_bounded", [](const AlgebraPtr& a, auto) { return is_one_bounded(*a); }},
      {"is_commutative", [](const AlgebraPtr& a, auto) { return is_commutative(*a); }},
      {"is_involutive_semiring",
       [](const AlgebraPtr& a, auto) { return is_involutive_semiring(*a); }},
      {"is_one_bounded_involutive",
       [](const AlgebraPtr& a, auto) { return is_one_bounded_involutive(*a); }},
      {"is_involutive_rl",
       [](const AlgebraPtr& a, auto) { return is_involutive_rl(*a); }},
      {"is_mv_semiring", [](const AlgebraPtr& a, auto) { return is_mv_semiring(*a); }},
      {"is_mult_idempotent",
       [](const AlgebraPtr& a, auto) { return is_mult_idempotent(*a); }},
      {"is_boolean_algebra",
       [](const AlgebraPtr& a, auto) { return is_boolean_algebra(*a); }},
      {"is_nilpotent_semiring",
       [](const AlgebraPtr& a, auto) { return is_nilpotent_semiring(*a); }},
      {"is_lattice_distributive",
       [](const AlgebraPtr& a, auto) { return is_lattice_distributive(*a); }},
      {"is_join_distributive",
       [](const AlgebraPtr& a, auto) { return is_join_distributive(*a); }},
      {"residuals", [](const AlgebraPtr& a, auto) { return residuals(*a).report; }},
      {"is_n_potent",
       [](const AlgebraPtr& a, std::optional<int> p) {
         return is_n_potent(*a, need_param(p, "is_n_potent"));
       }},
      {"is_n_vn_regular",
       [](const AlgebraPtr& a, std::optional<int> p) {
         return is_n_vn_regular(*a, need_param(p, "is_n_vn_regular"));
       }},
      {"roundtrip_check", [](const AlgebraPtr& a, auto) { return roundtrip_check(*a); }},
      {"involutive_identities",
       [](const AlgebraPtr& a, auto) { return involutive_identities(*a); }},
      {"galois_identities",
       [](const AlgebraPtr& a, auto) { return galois_identities(*a); }},
      {"interval_criterion",
       [](const AlgebraPtr& a, auto) { return interval_criterion(*a); }},
      {"hom_id_iso_check", [](const AlgebraPtr& a, auto) { return hom_id_iso_check(a); }},
      {"phi_check", [](const AlgebraPtr& a, auto) { return phi_check(a); }},
      {"is_self_injective",
       [](const AlgebraPtr& a, auto) { return is_self_injective(a).report; }},
      {"is_projective_regular",
       [](const AlgebraPtr& a, auto) {
         Report r = is_projective(a, regular(a)).report;
         r.check = "is_projective_regular";
         return r;
       }},
      {"is_mid_complete_regular",
       [](const AlgebraPtr& a, auto) {
         Report r = is_mid_complete(*regular(a));
         r.check = "is_mid_complete_regular";
         return r;
       }},
      {"cyclic_injective",
       [](const AlgebraPtr& a, std::optional<int> p) {
         Report r = is_injective(a, cyclic(a, need_param(p, "cyclic_injective"))).report;
         r.check = "cyclic_injective";
         return r;
       }},
      {"cyclic_projective",
       [](const AlgebraPtr& a, std::optional<int> p) {
         Report r =
             is_projective(a, cyclic(a, need_param(p, "cyclic_projective"))).report;
         r.check = "cyclic_projective";
         return r;
       }},
      {"ideal_count",
       [](const AlgebraPtr& a, std::optional<int> p) {
         const int want = need_param(p, "ideal_count");
         const int got = static_cast<int>(ideals(*a).size());
         if (got == want) return Report::ok("ideal_count");
         return Report::fail("ideal_count", {got, want},
                             "found " + std::to_string(got) + " ideals, expected " +
                                 std::to_string(want));
       }},
      {"boolean_hom_count",
       [](const AlgebraPtr& a, std::optional<int> p) {
         const int want = need_param(p, "boolean_hom_count");
         const int got = static_cast<int>(boolean_homs(*a).size());
         if (got == want) return Report::ok("boolean_hom_count");
         return Report::fail("boolean_hom_count", {got, want},
                             "found " + std::to_string(got) + " homs, expected " +
                                 std::to_string(want));
       }},
      {"injective_iff_projective_check",
       [](const AlgebraPtr& a, auto) { return injective_iff_projective_check(a); }},
      {"cyclic_trichotomy_check",
       [](const AlgebraPtr& a, auto) { return cyclic_trichotomy_check(a); }},
      {"strong_iff_faithful_check",
       [](const AlgebraPtr& a, auto) { return strong_iff_faithful_check(a); }},
      {"principal_ideal_equivalence_check",
       [](const AlgebraPtr& a, auto) { return principal_ideal_equivalence_check(a); }},
      {"npotent_selfinjective_check",
       [](const AlgebraPtr& a, std::optional<int> p) {
         return npotent_selfinjective_check(a,
                                            need_param(p, "npotent_selfinjective_check"));
       }},
      {"n_vn_regular_iff_n_potent",
       [](const AlgebraPtr& a, std::optional<int> p) {
         return n_vn_regular_iff_n_potent(a, need_param(p, "n_vn_regular_iff_n_potent"));
       }},
      {"mult_idempotent_iff_boolean",
       [](const AlgebraPtr& a, auto) { return mult_idempotent_iff_boolean(a); }},
  };
  return reg;
}

}  // namespace

std::vector<std::string> registered_checks() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : table()) out.push_back(name);
  return out;
}

Report run_named_check(const AlgebraPtr& a, const std::string& name) {
  std::string base = name;
  std::optional<int> param;
  if (auto colon = name.find(':'); colon != std::string::npos) {
    base = name.substr(0, colon);
    const std::string arg = name.substr(colon + 1);
    int value = 0;
    auto [p, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), value);
    if (ec != std::errc() || p != arg.data() + arg.size())
      throw input_error("check '" + name + "': bad parameter '" + arg + "'");
    param = value;
  }
  const auto& reg = table();
  auto it = reg.find(base);
  if (it == reg.end()) throw input_error("unknown check '" + base + "'");
  return it->second(a, param);
}

}  // namespace invsem
