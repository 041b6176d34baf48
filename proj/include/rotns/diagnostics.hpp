#pragma once

#include <string>
#include <vector>

namespace rotns {

/// Records a non-fatal precondition warning. Warnings accumulate in a
/// process-wide list until drained.
void warn(std::string message);

/// Returns and clears the recorded warnings.
std::vector<std::string> drain_warnings();

std::size_t warning_count();

}  // namespace rotns
