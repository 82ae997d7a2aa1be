// Command-line entry point: series dumps, verification suites, trajectory
// integration, and the k=3 -> k=3/2 converse map.
//
// Exit codes: 0 pass, 1 check failure, 2 usage error, 3 numerical abort.
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "chazy/dynamics.hpp"
#include "chazy/hypergeom.hpp"
#include "chazy/suites.hpp"

namespace {

using namespace chazy;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

Complex parse_complex(const std::string& text) {
    // accepts "a", "bi", "a+bi", "a-bi" with optional 'j' for 'i'
    std::string s = text;
    for (auto& ch : s)
        if (ch == 'j') ch = 'i';
    std::size_t ipos = s.find('i');
    if (ipos == std::string::npos) return {std::stod(s), 0.0};
    // split at the sign that separates the two parts (not a leading sign, not after e/E)
    std::size_t split = std::string::npos;
    for (std::size_t k = 1; k + 1 < s.size(); ++k) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') split = k;
    }
    if (split == std::string::npos) {
        std::string imag = s.substr(0, ipos);
        if (imag.empty() || imag == "+") imag = "1";
        if (imag == "-") imag = "-1";
        return {0.0, std::stod(imag)};
    }
    double re = std::stod(s.substr(0, split));
    std::string imag = s.substr(split, ipos - split);
    if (imag == "+") imag = "1";
    if (imag == "-") imag = "-1";
    return {re, std::stod(imag)};
}

std::array<Complex, 3> parse_state(const std::string& text) {
    std::array<Complex, 3> out;
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        std::size_t comma = text.find(',', pos);
        std::string piece =
            comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
        if (piece.empty()) throw std::invalid_argument("state needs three components");
        out[i] = parse_complex(piece);
        if (i < 2) {
            if (comma == std::string::npos)
                throw std::invalid_argument("state needs three components");
            pos = comma + 1;
        }
    }
    return out;
}

std::string resolve_out_path(const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    if (const char* dir = std::getenv("CHAZY_OUT_DIR"))
        return std::string(dir) + "/" + path;
    return path;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(resolve_out_path(out_path));
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text << "\n";
}

SystemSpec parse_system(const std::string& name) {
    if (name == "ramanujan") return SystemSpec::ramanujan();
    if (name == "dh") return SystemSpec::darboux_halphen();
    if (name == "dh32") return SystemSpec::symmetric_dh32();
    if (name.rfind("genchazy:", 0) == 0)
        return SystemSpec::gen_chazy(rat_from_string(name.substr(9)));
    if (name.rfind("schwarz:", 0) == 0) {
        std::string p = name.substr(8);
        if (p == "000") return SystemSpec::schwarz_triangle(schwarz_000());
        if (p == "232323") return SystemSpec::schwarz_triangle(schwarz_232323());
        if (p == "13131") return SystemSpec::schwarz_triangle(schwarz_13131());
        if (p == "131312") return SystemSpec::schwarz_triangle(schwarz_131312());
        throw std::invalid_argument("unknown Schwarz profile: " + p +
                                    " (use 000, 232323, 13131, 131312)");
    }
    throw std::invalid_argument("unknown system: " + name);
}

int cmd_series(const std::string& object, long order_q, const std::string& format,
               const std::string& out_path) {
    PuiseuxSeries::Steps steps = 4 * order_q;
    PuiseuxSeries s;
    if (object == "E2")
        s = eisenstein(steps).P;
    else if (object == "E4")
        s = eisenstein(steps).Q;
    else if (object == "E6")
        s = eisenstein(steps).R;
    else if (object == "theta2")
        s = theta(steps).a;
    else if (object == "theta3")
        s = theta(steps).b;
    else if (object == "theta4")
        s = theta(steps).c;
    else if (object == "kappa2")
        s = modulus_data(theta(steps + 8)).kappa_sq.truncate(steps);
    else if (object.rfind("2F1:", 0) == 0) {
        std::string params = object.substr(4);
        std::size_t c1 = params.find(','), c2 = params.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw std::invalid_argument("2F1 object needs 2F1:a,b,c");
        auto f = coeffs_2F1(rat_from_string(params.substr(0, c1)),
                            rat_from_string(params.substr(c1 + 1, c2 - c1 - 1)),
                            rat_from_string(params.substr(c2 + 1)),
                            static_cast<std::size_t>(order_q) + 1);
        s = PuiseuxSeries::compose(f.coeffs, PuiseuxSeries::monomial(1, 4, steps + 4), steps);
    } else {
        throw std::invalid_argument("unknown series object: " + object);
    }
    emit(format == "csv" ? s.to_csv() : s.to_json(), out_path);
    return kExitPass;
}

int cmd_verify(const std::string& suite, const RunConfig& cfg, const std::string& out_path) {
    Json j;
    bool pass;
    if (suite == "all") {
        FullReport full = run_all(cfg);
        j = full.to_json();
        pass = full.pass();
    } else {
        VerificationReport rep = run_suite(suite, cfg);
        j = rep.to_json();
        pass = rep.pass();
    }
    emit(j.dump(2), out_path);
    return pass ? kExitPass : kExitFail;
}

int cmd_integrate(const std::string& system, const std::string& init, Complex from, Complex to,
                  double tol, int n_samples, const std::string& out_path) {
    SystemSpec sys = parse_system(system);
    std::array<Complex, 3> y0 = parse_state(init);

    auto to_json = [&](const std::vector<Sample>& samples, bool complete,
                       Complex last_good) {
        Json j;
        j["system"] = sys.name();
        j["path"] = {{"from", {from.real(), from.imag()}}, {"to", {to.real(), to.imag()}}};
        j["complete"] = complete;
        if (!complete) j["last_good_x"] = {last_good.real(), last_good.imag()};
        Json arr = Json::array();
        for (const auto& s : samples) {
            Json e;
            e["x"] = {s.x.real(), s.x.imag()};
            Json st = Json::array(), jt = Json::array();
            for (int i = 0; i < 3; ++i) {
                st.push_back({s.state[i].real(), s.state[i].imag()});
                Json jc = Json::array();
                for (const auto& c : s.jets[i].c) jc.push_back({c.real(), c.imag()});
                jt.push_back(std::move(jc));
            }
            e["state"] = std::move(st);
            e["jets"] = std::move(jt);
            arr.push_back(std::move(e));
        }
        j["samples"] = std::move(arr);
        return j;
    };

    try {
        Trajectory tr = integrate(sys, y0, from, to, tol, n_samples);
        emit(to_json(tr.samples, true, to).dump(2), out_path);
        return kExitPass;
    } catch (const SingularityStop& stop) {
        emit(to_json(stop.partial, false, stop.last_good_x).dump(2), out_path);
        std::cerr << "integration aborted: " << stop.what() << "\n";
        return kExitNumerical;
    }
}

int cmd_invert32(Complex p0, Complex q0, Complex r0, int root_index, bool all_roots,
                 const std::string& out_path) {
    CubicRoots roots = cubic_roots(q0, r0);
    Json j;
    j["input"] = {{"p0", {p0.real(), p0.imag()}},
                  {"q0", {q0.real(), q0.imag()}},
                  {"r0", {r0.real(), r0.imag()}}};
    Json arr = Json::array();
    for (int i = 0; i < 3; ++i) {
        if (!all_roots && i != root_index) continue;
        Json e;
        e["root_index"] = i;
        e["z"] = {roots.roots[i].real(), roots.roots[i].imag()};
        e["cubic_residual"] = roots.residuals[i];
        try {
            TripleC t = inverse_map32(p0, q0, r0, roots.roots[i]);
            e["P"] = {t.p.real(), t.p.imag()};
            e["Q"] = {t.q.real(), t.q.imag()};
            e["R"] = {t.r.real(), t.r.imag()};
        } catch (const BranchCollapse& bc) {
            e["error"] = bc.what();
        }
        arr.push_back(std::move(e));
    }
    j["triples"] = std::move(arr);
    emit(j.dump(2), out_path);
    return kExitPass;
}

void apply_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot read config file: " + path);
    Json j = Json::parse(f);
    if (j.contains("order")) cfg.order_q = j["order"].get<long>();
    if (j.contains("tol")) cfg.tol = j["tol"].get<double>();
    if (j.contains("samples")) cfg.samples = j["samples"].get<int>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("integ_tol")) cfg.integ_tol = j["integ_tol"].get<double>();
    if (j.contains("base_x")) cfg.base_x = {j["base_x"][0].get<double>(),
                                            j["base_x"][1].get<double>()};
    if (j.contains("path_len")) cfg.path_len = j["path_len"].get<double>();
    if (j.contains("traj_samples")) cfg.traj_samples = j["traj_samples"].get<int>();
    if (j.contains("sigma_n_max")) cfg.sigma_n_max = j["sigma_n_max"].get<unsigned long>();
    if (j.contains("z_convention"))
        cfg.z_convention = j["z_convention"].get<std::string>() == "theorem"
                               ? ZConvention::TheoremFullSqrt
                               : ZConvention::ProofHalfSqrt;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and numeric verification of the Ramanujan / generalised Chazy solution automorphisms"};
    app.require_subcommand(1);

    // series
    auto* series = app.add_subcommand("series", "dump exact q-expansions");
    std::string object, format = "json", out_path;
    long order_q = 50;
    series->add_option("--object", object,
                       "E2|E4|E6|theta2|theta3|theta4|kappa2|2F1:a,b,c")->required();
    series->add_option("--order", order_q, "truncation order in powers of q");
    series->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    series->add_option("--out", out_path, "output file (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite, z_convention, config_path, verify_out;
    RunConfig cfg;
    bool samples_set = false;
    verify->add_option("--suite", suite, "suite name or 'all'")->required();
    verify->add_option("--order", cfg.order_q, "series order in powers of q");
    verify->add_option("--tol", cfg.tol, "residual pass threshold");
    verify->add_option("--samples", cfg.samples, "random sample count")
        ->each([&](const std::string&) { samples_set = true; });
    verify->add_option("--seed", cfg.seed, "RNG seed");
    verify->add_option("--integ-tol", cfg.integ_tol, "integrator local error tolerance");
    verify->add_option("--z-convention", z_convention, "theorem|proof (Theorem 2 suites)")
        ->check(CLI::IsMember({"theorem", "proof", ""}));
    verify->add_option("--config", config_path, "JSON config overriding defaults");
    verify->add_option("--out", verify_out, "write the JSON report to a file");

    // integrate
    auto* integ = app.add_subcommand("integrate", "integrate a system along a segment");
    std::string system, init, from_s = "0", to_s = "0.2";
    double integ_tol = 1e-10;
    int n_samples = 9;
    std::string integ_out;
    integ->add_option("--system", system,
                      "ramanujan|genchazy:k|dh|dh32|schwarz:{000,232323,13131,131312}")
        ->required();
    integ->add_option("--init", init, "three comma-separated complex values")->required();
    integ->add_option("--from", from_s, "start point in the x-plane");
    integ->add_option("--to", to_s, "end point in the x-plane");
    integ->add_option("--tol", integ_tol, "local error tolerance");
    integ->add_option("--samples", n_samples, "number of recorded samples");
    integ->add_option("--out", integ_out, "output file (default stdout)");

    // invert32
    auto* inv = app.add_subcommand("invert32", "k=3 to k=3/2 converse map through the cubic");
    std::string p0_s, q0_s, r0_s;
    int root_index = -1;
    std::string inv_out;
    inv->add_option("--p0", p0_s)->required();
    inv->add_option("--q0", q0_s)->required();
    inv->add_option("--r0", r0_s)->required();
    inv->add_option("--root", root_index, "cubic root index 0..2 (default: all)");
    inv->add_option("--out", inv_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (series->parsed()) return cmd_series(object, order_q, format, out_path);
        if (verify->parsed()) {
            if (!config_path.empty()) apply_config_file(config_path, cfg);
            if (!z_convention.empty())
                cfg.z_convention = z_convention == "theorem" ? ZConvention::TheoremFullSqrt
                                                             : ZConvention::ProofHalfSqrt;
            if (samples_set && suite == "sigma-addition")
                cfg.sigma_n_max = static_cast<unsigned long>(cfg.samples);
            if (!is_suite_name(suite)) {
                std::cerr << "unknown suite: " << suite << "\n";
                return kExitUsage;
            }
            return cmd_verify(suite, cfg, verify_out);
        }
        if (integ->parsed())
            return cmd_integrate(system, init, parse_complex(from_s), parse_complex(to_s),
                                 integ_tol, n_samples, integ_out);
        if (inv->parsed())
            return cmd_invert32(parse_complex(p0_s), parse_complex(q0_s), parse_complex(r0_s),
                                root_index < 0 ? 0 : root_index, root_index < 0, inv_out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SingularityStop& e) {
        std::cerr << "numerical abort: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
