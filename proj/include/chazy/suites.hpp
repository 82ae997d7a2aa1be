// Named verification suites behind `verify --suite ...`. Each suite turns a
// family of identities into pass/fail checks with reproducible sampling.
#pragma once

#include "chazy/report.hpp"

namespace chazy {

std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);

// Throws std::invalid_argument for unknown names.
VerificationReport run_suite(const std::string& name, const RunConfig& cfg);

FullReport run_all(const RunConfig& cfg);

}  // namespace chazy
