#ifndef INVSEM_CORPUS_HPP
#define INVSEM_CORPUS_HPP

#include <string>
#include <utility>
#include <vector>

#include "invsem/algebra.hpp"
#include "invsem/report.hpp"

namespace invsem {

// A built-in algebra together with the verdicts every build must
// reproduce. `origin` records whether a verdict is reported in the
// literature for this example or was computed here and frozen.
struct CorpusExpectation {
  std::string check;   // registry name, possibly "name:N"
  bool expected;
  std::string origin;  // "reported" or "computed"
};

struct CorpusEntry {
  std::string name;
  AlgebraPtr algebra;
  std::vector<CorpusExpectation> expected;
};

const std::vector<CorpusEntry>& builtin_corpus();

// Throws input_error for unknown names.
AlgebraPtr corpus_algebra(const std::string& name);

// Runs every expectation; optionally collects one "name check expected got"
// line per expectation. Passes iff all verdicts reproduce.
Report run_corpus(std::vector<std::string>* lines = nullptr);

}  // namespace invsem

#endif
