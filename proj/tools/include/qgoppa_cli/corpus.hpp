#pragma once

// Reproducibility corpus: each entry rebuilds one worked example and diffs
// it against goldens committed in corpus.cpp.

#include <string>
#include <vector>

#include "qgoppa/oracle.hpp"

namespace qgoppa::cli {

const std::vector<std::string>& example_names();
bool is_example(const std::string& name);
// Throws qgoppa::Error(OutOfRange) for unknown names.
oracle::VerificationReport run_example(const std::string& name);

}  // namespace qgoppa::cli
