// Command-line front end: classification checks, translations, ideal and
// hom computations, injectivity/projectivity decisions, theorem batteries,
// and bounded exhaustive enumeration over the block file format.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "invsem/axioms.hpp"
#include "invsem/corpus.hpp"
#include "invsem/decide.hpp"
#include "invsem/enumerate.hpp"
#include "invsem/homs.hpp"
#include "invsem/io.hpp"
#include "invsem/registry.hpp"
#include "invsem/termeq.hpp"

using namespace invsem;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

struct Output {
  bool as_json = false;
  json doc;
  Clock::time_point start = Clock::now();

  void set(const std::string& key, json value) { doc[key] = std::move(value); }

  int finish(int exit_code) {
    if (as_json) {
      doc["timing"] = {
          {"seconds", std::chrono::duration<double>(Clock::now() - start).count()}};
      std::cout << doc.dump(2) << "\n";
    }
    return exit_code;
  }
};

json report_json(const Report& r) {
  json j;
  j["check"] = r.check;
  j["verdict"] = r.pass ? "yes" : "no";
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// INPUT forms: corpus:NAME, or PATH[#BLOCK] in the block file format.
struct Resolved {
  Document doc;
  AlgebraPtr algebra;
};

Resolved resolve_algebra(const std::string& input) {
  Resolved r;
  if (input.rfind("corpus:", 0) == 0) {
    r.algebra = corpus_algebra(input.substr(7));
    r.doc.algebras.push_back(r.algebra);
    return r;
  }
  std::string path = input, block;
  if (auto hash = input.find('#'); hash != std::string::npos) {
    path = input.substr(0, hash);
    block = input.substr(hash + 1);
  }
  r.doc = parse_document(read_file(path));
  if (block.empty()) {
    if (r.doc.algebras.empty()) throw input_error("no algebra in '" + path + "'");
    r.algebra = r.doc.algebras.front();
  } else {
    r.algebra = r.doc.algebra(block);
    if (!r.algebra) throw input_error("no algebra named '" + block + "' in '" + path + "'");
  }
  return r;
}

// MODULE forms: regular (default), cyclic:ELEM, or a semimodule block name.
SemimodulePtr resolve_module(const Resolved& in, const std::string& module) {
  if (module.empty() || module == "regular") return regular(in.algebra);
  if (module.rfind("cyclic:", 0) == 0) {
    const std::string elem = module.substr(7);
    for (Idx x = 0; x < in.algebra->size; ++x)
      if (in.algebra->element_name(x) == elem || std::to_string(x) == elem)
        return cyclic(in.algebra, x);
    throw input_error("no element '" + elem + "' in '" + in.algebra->name + "'");
  }
  if (SemimodulePtr m = in.doc.semimodule(module)) return m;
  throw input_error("no semimodule named '" + module + "'");
}

SemimodulePtr resolve_any_module(const std::string& input) {
  if (input.rfind("corpus:", 0) == 0) return regular(corpus_algebra(input.substr(7)));
  std::string path = input, block;
  if (auto hash = input.find('#'); hash != std::string::npos) {
    path = input.substr(0, hash);
    block = input.substr(hash + 1);
  }
  Document doc = parse_document(read_file(path));
  if (!block.empty()) {
    if (SemimodulePtr m = doc.semimodule(block)) return m;
    if (AlgebraPtr a = doc.algebra(block)) return regular(a);
    throw input_error("no block named '" + block + "' in '" + path + "'");
  }
  if (!doc.semimodules.empty()) return doc.semimodules.front();
  if (!doc.algebras.empty()) return regular(doc.algebras.front());
  throw input_error("no blocks in '" + path + "'");
}

std::string verdict_word(bool b) { return b ? "yes" : "no"; }

const std::vector<std::string> kClassificationChecks = {
    "validate",           "is_idempotent_semiring",  "is_one_bounded",
    "is_commutative",     "is_involutive_semiring",  "is_one_bounded_involutive",
    "is_involutive_rl",   "is_mv_semiring",          "is_mult_idempotent",
    "is_boolean_algebra", "is_nilpotent_semiring",   "is_lattice_distributive",
    "is_join_distributive", "residuals",             "is_self_injective",
    "is_projective_regular"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite involutive semirings, residuated lattices and semimodules"};
  app.require_subcommand(1);
  Output out;
  int threads = 1;
  app.add_flag("--json", out.as_json, "machine-readable report");
  app.add_option("--threads", threads, "worker cap for batteries")->default_val(1);

  std::string input, klass, module_name, dom_input, cod_input, kind = "a-hom";
  std::string checks_csv, checkpoint;
  int max_size = 4;
  long long limit = -1, budget = -1;

  auto* cmd_check = app.add_subcommand("check", "classify an algebra");
  cmd_check->add_option("input", input)->required();
  cmd_check->add_option("--class", klass, "run a single named check");

  auto* cmd_termeq = app.add_subcommand("termeq", "round-trip the two presentations");
  cmd_termeq->add_option("input", input)->required();

  auto* cmd_interval = app.add_subcommand("interval", "the [0,1] subalgebra test");
  cmd_interval->add_option("input", input)->required();

  auto* cmd_ideals = app.add_subcommand("ideals", "list all ideals");
  cmd_ideals->add_option("input", input)->required();

  auto* cmd_homs = app.add_subcommand("homs", "enumerate homomorphisms");
  cmd_homs->add_option("dom", dom_input)->required();
  cmd_homs->add_option("cod", cod_input)->required();
  cmd_homs->add_option("--kind", kind, "a-hom or semilattice")->default_val("a-hom");

  auto* cmd_inj = app.add_subcommand("injective", "decide injectivity");
  cmd_inj->add_option("input", input)->required();
  cmd_inj->add_option("--module", module_name, "regular, cyclic:ELEM, or block name");

  auto* cmd_proj = app.add_subcommand("projective", "decide projectivity");
  cmd_proj->add_option("input", input)->required();
  cmd_proj->add_option("--module", module_name, "regular, cyclic:ELEM, or block name");

  auto* cmd_battery = app.add_subcommand("battery", "run checks over an enumerated class");
  cmd_battery->add_option("--class", klass)->required();
  cmd_battery->add_option("--max-size", max_size)->required();
  cmd_battery->add_option("--checks", checks_csv)->required();

  auto* cmd_enum = app.add_subcommand("enumerate", "emit one algebra per isomorphism class");
  cmd_enum->add_option("--class", klass)->required();
  cmd_enum->add_option("--max-size", max_size)->required();
  cmd_enum->add_option("--limit", limit);
  cmd_enum->add_option("--checkpoint", checkpoint);
  cmd_enum->add_option("--budget", budget, "lattice branches per run");

  auto* cmd_nd = app.add_subcommand("nondistributive",
                                    "least size with a non-distributive instance");
  cmd_nd->add_option("--max-size", max_size)->required();
  cmd_nd->add_option("--checkpoint", checkpoint);
  cmd_nd->add_option("--budget", budget);

  auto* cmd_corpus = app.add_subcommand("corpus", "re-verify all built-in expectations");
  bool corpus_list = false;
  cmd_corpus->add_flag("--list", corpus_list, "list entries instead of running");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_check->parsed()) {
      Resolved in = resolve_algebra(input);
      out.set("command", "check");
      out.set("inputs", json::array({input}));
      if (!klass.empty()) {
        Report r = run_named_check(in.algebra, klass);
        out.set("verdict", verdict_word(r.pass));
        if (!r.witness.empty()) out.set("witness", r.witness);
        if (!out.as_json)
          std::cout << in.algebra->name << " " << klass << ": " << verdict_word(r.pass)
                    << (r.detail.empty() ? "" : "  (" + r.detail + ")") << "\n";
        return out.finish(0);
      }
      json verdicts;
      for (const auto& name : kClassificationChecks) {
        std::string word;
        try {
          word = verdict_word(run_named_check(in.algebra, name).pass);
        } catch (const unsupported_error&) {
          word = "n/a";
        }
        verdicts[name] = word;
        if (!out.as_json) std::cout << name << ": " << word << "\n";
      }
      out.set("verdict", verdicts);
      return out.finish(0);
    }

    if (cmd_termeq->parsed()) {
      Resolved in = resolve_algebra(input);
      Report r = roundtrip_check(*in.algebra);
      out.set("command", "termeq");
      out.set("inputs", json::array({input}));
      out.doc.update(report_json(r));
      if (!out.as_json)
        std::cout << "roundtrip " << in.algebra->name << ": " << verdict_word(r.pass)
                  << "\n";
      return out.finish(r.pass ? 0 : 1);
    }

    if (cmd_interval->parsed()) {
      Resolved in = resolve_algebra(input);
      IntervalResult iv = unit_interval(*in.algebra);
      Report agreement = interval_criterion(*in.algebra);
      out.set("command", "interval");
      out.set("inputs", json::array({input}));
      out.set("verdict", iv.report.pass ? "subalgebra" : "not-a-subalgebra");
      json members = json::array();
      for (Idx x : iv.members) members.push_back(in.algebra->element_name(x));
      out.set("members", members);
      if (!iv.report.witness.empty()) out.set("witness", iv.report.witness);
      if (!out.as_json) {
        std::cout << "[0,1] in " << in.algebra->name << ": "
                  << (iv.report.pass ? "subalgebra" : "not a subalgebra") << " {";
        for (size_t i = 0; i < iv.members.size(); ++i)
          std::cout << (i ? "," : "") << in.algebra->element_name(iv.members[i]);
        std::cout << "}\n";
        if (!iv.report.detail.empty()) std::cout << iv.report.detail << "\n";
      }
      return out.finish(agreement.pass ? 0 : 1);
    }

    if (cmd_ideals->parsed()) {
      Resolved in = resolve_algebra(input);
      auto ids = ideals(*in.algebra);
      out.set("command", "ideals");
      out.set("inputs", json::array({input}));
      out.set("verdict", ids.size());
      json list = json::array();
      for (const auto& ideal : ids) {
        json members = json::array();
        for (Idx x = 0; x < in.algebra->size; ++x)
          if (ideal.contains(x)) members.push_back(in.algebra->element_name(x));
        list.push_back(members);
      }
      out.set("ideals", list);
      if (!out.as_json) {
        std::cout << ids.size() << " ideals of " << in.algebra->name << "\n";
        for (const auto& ideal : ids) {
          std::cout << "  {";
          bool first = true;
          for (Idx x = 0; x < in.algebra->size; ++x)
            if (ideal.contains(x)) {
              std::cout << (first ? "" : ",") << in.algebra->element_name(x);
              first = false;
            }
          std::cout << "}\n";
        }
      }
      return out.finish(0);
    }

    if (cmd_homs->parsed()) {
      SemimodulePtr dom = resolve_any_module(dom_input);
      SemimodulePtr cod = resolve_any_module(cod_input);
      HomKind hk;
      if (kind == "a-hom")
        hk = HomKind::Module;
      else if (kind == "semilattice")
        hk = HomKind::Semilattice;
      else
        throw input_error("unknown hom kind '" + kind + "'");
      auto homs = all_homs(dom, cod, hk);
      out.set("command", "homs");
      out.set("inputs", json::array({dom_input, cod_input}));
      out.set("verdict", homs.size());
      json maps = json::array();
      for (const auto& h : homs) maps.push_back(h.map);
      out.set("maps", maps);
      if (!out.as_json) {
        std::cout << homs.size() << " homs " << dom->name << " -> " << cod->name << "\n";
        for (const auto& h : homs) {
          for (Idx x = 0; x < dom->size; ++x)
            std::cout << (x ? " " : "  ") << dom->element_name(x) << "->"
                      << cod->element_name(h.map[x]);
          std::cout << "\n";
        }
      }
      return out.finish(0);
    }

    if (cmd_inj->parsed() || cmd_proj->parsed()) {
      const bool inj = cmd_inj->parsed();
      Resolved in = resolve_algebra(input);
      SemimodulePtr m = resolve_module(in, module_name);
      DecisionResult res = inj ? is_injective(in.algebra, m) : is_projective(in.algebra, m);
      out.set("command", inj ? "injective" : "projective");
      out.set("inputs",
              json::array({input, module_name.empty() ? "regular" : module_name}));
      out.set("verdict", verdict_word(res.report.pass));
      if (!res.report.witness.empty()) out.set("witness", res.report.witness);
      if (res.retraction) {
        json cert;
        cert["arity"] = res.retraction->arity;
        cert["factor"] = res.retraction->factor->name;
        cert["section"] = res.retraction->section;
        cert["column_retract"] = res.retraction->column_retract;
        cert["materialized"] = res.retraction->outer != nullptr;
        cert["verified"] = verify_retraction(*res.retraction).pass;
        out.set("certificate", cert);
      }
      if (!out.as_json)
        std::cout << m->name << " is " << (res.report.pass ? "" : "not ")
                  << (inj ? "injective" : "projective")
                  << (res.report.detail.empty() ? "" : "  (" + res.report.detail + ")")
                  << "\n";
      return out.finish(0);
    }

    if (cmd_battery->parsed()) {
      auto cls = class_from_string(klass);
      if (!cls) throw input_error("unknown class '" + klass + "'");
      SearchSpec spec;
      spec.cls = *cls;
      spec.max_size = max_size;
      std::vector<std::string> checks;
      std::stringstream ss(checks_csv);
      for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) checks.push_back(item);
      BatteryResult res = theorem_battery(spec, checks, threads);
      out.set("command", "battery");
      out.set("inputs", json::array({klass, max_size}));
      out.set("verdict", res.report.pass ? "pass" : "fail");
      json lines = json::array();
      for (const auto& line : res.lines) {
        lines.push_back({{"check", line.check},
                         {"instances", line.instances},
                         {"failures", line.failures},
                         {"skipped", line.skipped},
                         {"first_failure", line.first_failure}});
        if (!out.as_json)
          std::cout << line.check << ": " << line.instances << " instances, "
                    << line.failures << " failures, " << line.skipped << " skipped"
                    << (line.first_failure.empty() ? "" : "  first: " + line.first_failure)
                    << "\n";
      }
      out.set("lines", lines);
      return out.finish(res.report.pass ? 0 : 1);
    }

    if (cmd_enum->parsed()) {
      auto cls = class_from_string(klass);
      if (!cls) throw input_error("unknown class '" + klass + "'");
      SearchSpec spec;
      spec.cls = *cls;
      spec.max_size = max_size;
      if (limit >= 0) spec.limit = limit;
      EnumOptions opts;
      opts.checkpoint_file = checkpoint;
      opts.branch_budget = budget;
      EnumOutcome res = enumerate_collect(spec, opts);
      for (const auto& a : res.algebras) std::cout << emit(a) << "\n";
      std::cerr << res.algebras.size() << " algebras"
                << (res.completed ? "" : " (incomplete, resume from checkpoint)") << "\n";
      return 0;
    }

    if (cmd_nd->parsed()) {
      EnumOptions opts;
      opts.checkpoint_file = checkpoint;
      opts.branch_budget = budget;
      NondistributiveResult res = smallest_nondistributive(max_size, opts);
      out.set("command", "nondistributive");
      out.set("inputs", json::array({max_size}));
      out.set("verdict", res.witness ? "found" : "none");
      out.set("detail", res.report.detail);
      if (res.witness) out.set("witness_table", emit(*res.witness));
      if (!out.as_json) {
        std::cout << res.report.detail << "\n";
        if (res.witness) std::cout << emit(*res.witness);
      }
      return out.finish(0);
    }

    if (cmd_corpus->parsed()) {
      out.set("command", "corpus");
      if (corpus_list) {
        json entries = json::array();
        for (const auto& e : builtin_corpus()) {
          entries.push_back({{"name", e.name}, {"size", e.algebra->size}});
          if (!out.as_json) std::cout << e.name << " (size " << e.algebra->size << ")\n";
        }
        out.set("entries", entries);
        return out.finish(0);
      }
      std::vector<std::string> lines;
      Report r = run_corpus(&lines);
      if (!out.as_json)
        for (const auto& line : lines) std::cout << line << "\n";
      out.set("verdict", r.pass ? "pass" : "fail");
      out.set("lines", lines);
      if (!r.detail.empty()) out.set("detail", r.detail);
      if (!out.as_json)
        std::cout << (r.pass ? "all expectations reproduce" : "MISMATCH: " + r.detail)
                  << "\n";
      return out.finish(r.pass ? 0 : 1);
    }
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const unsupported_error& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 2;
  } catch (const internal_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
