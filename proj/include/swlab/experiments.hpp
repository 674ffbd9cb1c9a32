#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "swlab/bottoms.hpp"
#include "swlab/euler_scheme.hpp"
#include "swlab/lagrangian.hpp"
#include "swlab/monitors.hpp"

namespace swlab {

// Config/argument problems -> exit 2; stepping failures -> exit 3;
// identity failures -> exit 4.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IdentityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ScenarioConfig {
    std::string name = "custom";
    enum class Coords { eulerian, lagrangian } coords = Coords::eulerian;

    // scheme
    double w11 = 0.5, z12 = 1.0;
    bool naive = false;
    // lagrangian scheme geometry comes from the bottom spec

    // bottom
    enum class Bottom { flat, parabolic, sinusoidal } bottom = Bottom::flat;
    double d1 = 0.0, d2 = 0.0;

    // domain
    double L = 100.0, h = 0.1, tau = 0.01, T = 1.0;

    // initial condition
    enum class Init { lake, dam, sigmoid } init = Init::lake;
    double eta0 = 5.0, etaL = 2.0, etaR = 0.5, sigma1 = 20.0;
    int smoothing = 8;

    // numerics
    double nu = 0.0, eps = 0.0;  // eps 0 -> solver default
    bool nu_auto = false;        // use the actual mass step as nu
    ViscosityMode viscosity_mode = ViscosityMode::per_layer;
    unsigned seed = 12345;

    std::size_t fields_stride = 0;  // extra field dumps every stride layers

    void validate() const;
};

ScenarioConfig parse_config_file(const std::string& path);
ScenarioConfig preset_config(const std::string& name);
std::vector<std::string> preset_names();

// Root directory for run outputs: $SWLAB_OUTPUT_ROOT or ./swlab_out.
std::string output_root();

struct RunResult {
    ScenarioConfig cfg;
    std::string out_dir;
    ConservationReport report;
    // final layer fields
    GridField x, u, eta;
    double max_abs_u = 0.0;  // over the whole run (well-balancedness)
    double max_eta_dev = 0.0;  // max |eta - eta0| for lake runs
    int max_iterations = 0;
};

RunResult run_scenario(const ScenarioConfig& cfg, bool write_files = true);

struct CompareResult {
    std::vector<double> e_R_a, e_R_b;          // aligned series
    std::vector<double> deps_a, deps_b;        // max |delta eps| per layer
    std::vector<double> log_ratio;             // log10(e_R_b / e_R_a)
    std::string out_dir;
};

CompareResult compare_schemes(const ScenarioConfig& a, const ScenarioConfig& b,
                              bool write_files = true);

struct VerifyResult {
    bool pass = true;
    std::string report;  // deterministic text, one line per suite
};

VerifyResult run_verifier(unsigned seed, std::size_t samples);

}  // namespace swlab
