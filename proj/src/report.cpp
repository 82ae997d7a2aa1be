#include "chazy/report.hpp"

#include <cstdio>

namespace chazy {

std::string format_deviation(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6e", v);
    return buf;
}

CheckEntry entry_from_exact(const ExactCheck& c) {
    CheckEntry e;
    e.id = c.id;
    e.pass = c.pass;
    e.max_deviation = "0";
    e.tolerance = "exact";
    if (c.witness) {
        e.witnesses["first_mismatch_exponent"] = to_string(c.witness->exponent);
        e.witnesses["lhs"] = to_string(c.witness->lhs);
        e.witnesses["rhs"] = to_string(c.witness->rhs);
        e.max_deviation = "coefficient mismatch";
    }
    return e;
}

CheckEntry entry_from_residual(std::string id, double residual, double tol) {
    CheckEntry e;
    e.id = std::move(id);
    e.max_deviation = format_deviation(residual);
    e.tolerance = format_deviation(tol);
    e.pass = residual <= tol;
    return e;
}

Json VerificationReport::to_json(bool include_runtime) const {
    Json j;
    j["suite"] = suite;
    j["seed"] = seed;
    j["pass"] = pass();
    if (include_runtime) j["runtime_ms"] = runtime_ms;
    Json arr = Json::array();
    for (const auto& c : checks) {
        Json e;
        e["id"] = c.id;
        if (!c.params.empty()) e["params"] = c.params;
        e["max_deviation"] = c.max_deviation;
        e["tolerance"] = c.tolerance;
        e["status"] = c.pass ? "pass" : "fail";
        if (!c.witnesses.empty()) e["witnesses"] = c.witnesses;
        arr.push_back(std::move(e));
    }
    j["checks"] = std::move(arr);
    return j;
}

Json FullReport::to_json(bool include_runtime) const {
    Json j;
    j["pass"] = pass();
    Json arr = Json::array();
    for (const auto& s : sections) arr.push_back(s.to_json(include_runtime));
    j["suites"] = std::move(arr);
    return j;
}

}  // namespace chazy
