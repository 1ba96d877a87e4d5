#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "mnhd/analysis.hpp"

namespace mnhd::detail {

std::string join(std::initializer_list<std::pair<const char*, QuadValue>> items);
std::string describe(const DeltaSet<QuadValue>& ds);

/// Which sufficient condition makes grow e^{at} + decay e^{-at}
/// nondecreasing, or nullptr.
const char* monotone_pair_condition(const QuadValue& grow, const QuadValue& decay);

/// Verdict and reason from the recorded checks.
void finish(Certificate& cert);

}  // namespace mnhd::detail
