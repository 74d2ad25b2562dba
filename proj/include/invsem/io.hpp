#ifndef INVSEM_IO_HPP
#define INVSEM_IO_HPP

#include <string>
#include <vector>

#include "invsem/algebra.hpp"
#include "invsem/semimodule.hpp"

namespace invsem {

// Parsed file: algebra blocks followed by semimodule blocks that reference
// them by name.
struct Document {
  std::vector<AlgebraPtr> algebras;
  std::vector<SemimodulePtr> semimodules;

  AlgebraPtr algebra(const std::string& name) const;      // nullptr if absent
  SemimodulePtr semimodule(const std::string& name) const;
};

// Whitespace-separated block format with '#' comments. Diagnostics carry
// line numbers. Throws input_error.
Document parse_document(const std::string& text);

// Convenience for single-algebra text; errors when no algebra is present.
AlgebraPtr parse_algebra(const std::string& text);

std::string emit(const AlgebraTable& a);
std::string emit(const SemimoduleTable& m);
std::string emit(const Document& d);

}  // namespace invsem

#endif
