#ifndef INVSEM_REGISTRY_HPP
#define INVSEM_REGISTRY_HPP

#include <string>
#include <vector>

#include "invsem/algebra.hpp"
#include "invsem/report.hpp"

namespace invsem {

// Named checks usable as enumeration filters, battery members, corpus
// expectations and `check --class` targets. Parameterized checks are
// written "name:N" (e.g. is_n_potent:2, cyclic_injective:1).
std::vector<std::string> registered_checks();

// Throws input_error for unknown names and propagates unsupported_error
// when the check's precondition refuses the algebra.
Report run_named_check(const AlgebraPtr& a, const std::string& name);

}  // namespace invsem

#endif
