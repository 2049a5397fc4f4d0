#pragma once

#include "jetbracket/report.hpp"

namespace jetbracket {

/// Executes the checks of a parsed problem in declaration order and assembles
/// the report, including the structural conclusion block when vanishing
/// certificates were requested. Module errors are rethrown with the check
/// index attached.
Report run(const ProblemFile& problem, const RunOptions& options);

}  // namespace jetbracket
