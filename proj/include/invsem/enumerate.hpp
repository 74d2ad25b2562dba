#ifndef INVSEM_ENUMERATE_HPP
#define INVSEM_ENUMERATE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "invsem/algebra.hpp"
#include "invsem/report.hpp"

namespace invsem {

enum class AlgebraClass {
  IdempotentSemiring,
  OneBoundedIdempotent,
  InvolutiveSemiring,
  OneBoundedInvolutive,
  PointedResiduated,
};

std::string to_string(AlgebraClass c);
std::optional<AlgebraClass> class_from_string(const std::string& s);

struct SearchSpec {
  int max_size = 1;
  AlgebraClass cls = AlgebraClass::IdempotentSemiring;
  // Keep algebras whose named check verdict equals the given flag;
  // instances a filter refuses (unsupported) are dropped.
  std::vector<std::pair<std::string, bool>> filters;
  std::optional<long long> limit;
};

struct EnumOptions {
  std::string checkpoint_file;   // empty: no checkpointing
  long long branch_budget = -1;  // lattice branches this run, -1 = unlimited
  int checkpoint_every = 8;      // save after this many branches
  int only_size = 0;             // 0: all sizes up to max_size
};

struct EnumOutcome {
  bool completed = true;  // false iff the branch budget ran out
  std::vector<AlgebraTable> algebras;  // one per isomorphism class, sorted
                                       // by size then canonical key
  long long branches_processed = 0;
};

// Exhaustive bounded generation with canonical-key isomorphism rejection.
// Every emitted algebra passes its class predicate (rechecked through the
// axioms module, independently of the search-time propagation).
EnumOutcome enumerate_collect(const SearchSpec& spec, const EnumOptions& opts = {});

// Streaming wrapper over the collected, sorted result; callback false stops.
void enumerate_algebras(const SearchSpec& spec,
                        const std::function<bool(const AlgebraTable&)>& emit);

struct NondistributiveResult {
  Report report;
  std::optional<AlgebraTable> witness;  // least-size witness when found
  bool completed = true;                // false iff the budget ran out
  long long instances_checked = 0;
};

// Least carrier size <= max_size admitting a non-distributive 1-bounded
// involutive semiring, with a witness; "none" otherwise.
NondistributiveResult smallest_nondistributive(int max_size, const EnumOptions& opts = {});

struct BatteryLine {
  std::string check;
  long long instances = 0;
  long long failures = 0;
  long long skipped = 0;  // precondition refusals
  std::string first_failure;
};

struct BatteryResult {
  Report report;
  std::vector<BatteryLine> lines;
};

// Runs each named check over the enumerated stream; deterministic
// aggregation regardless of `threads`.
BatteryResult theorem_battery(const SearchSpec& spec,
                              const std::vector<std::string>& checks, int threads = 1);

}  // namespace invsem

#endif
