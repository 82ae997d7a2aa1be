// Machine-readable verification reports and the deterministic run
// configuration shared by the CLI and the acceptance suite.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chazy/puiseux.hpp"
#include "chazy/theorem2.hpp"

namespace chazy {

using Json = nlohmann::ordered_json;

struct CheckEntry {
    std::string id;
    Json params = Json::object();
    std::string max_deviation = "0";  // exact checks report "0"
    std::string tolerance = "exact";
    bool pass = true;
    Json witnesses = Json::object();
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckEntry> checks;
    double runtime_ms = 0.0;
    std::uint64_t seed = 0;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    Json to_json(bool include_runtime = true) const;
};

struct FullReport {
    std::vector<VerificationReport> sections;
    bool pass() const {
        for (const auto& s : sections)
            if (!s.pass()) return false;
        return true;
    }
    Json to_json(bool include_runtime = true) const;
};

struct RunConfig {
    long order_q = 50;  // working order in powers of q
    double tol = 1e-7;
    int samples = 25;
    std::uint64_t seed = 42;
    double integ_tol = 1e-10;
    Complex base_x{0.0, 0.0};
    double path_len = 0.2;
    int traj_samples = 9;
    unsigned long sigma_n_max = 10000;
    std::optional<ZConvention> z_convention;

    PuiseuxSeries::Steps order_steps() const { return 4 * order_q; }
};

std::string format_deviation(double v);
CheckEntry entry_from_exact(const ExactCheck& c);
CheckEntry entry_from_residual(std::string id, double residual, double tol);

}  // namespace chazy
