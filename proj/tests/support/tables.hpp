#pragma once

#include <string>
#include <vector>

#include "bvc/reductions.hpp"

namespace ref {

// Checks the closed-form level scores of a generated instance. Returns the
// number of entries checked; mismatches are appended to `failures`.
std::size_t check_score_table(const bvc::Reduction& r, std::vector<std::string>& failures);

}  // namespace ref
