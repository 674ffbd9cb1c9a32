#include "swlab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "swlab/direct_method.hpp"
#include "swlab/mass_coords.hpp"

namespace swlab {

namespace fs = std::filesystem;

void ScenarioConfig::validate() const {
    if (L <= 0.0 || h <= 0.0 || tau <= 0.0 || T <= 0.0)
        throw ValidationError("config: L, h, tau, T must be positive");
    double steps = T / tau;
    if (std::abs(steps - std::llround(steps)) > 1e-9)
        throw ValidationError("config: T must be a multiple of tau");
    if (nu < 0.0 || eps < 0.0) throw ValidationError("config: nu and eps must be nonnegative");
    if (smoothing < 0) throw ValidationError("config: smoothing must be nonnegative");
    if (coords == Coords::eulerian && init == Init::sigmoid)
        throw ValidationError("config: sigmoid dam is a Lagrangian initial condition");
    if (coords == Coords::lagrangian && bottom != Bottom::parabolic)
        throw ValidationError("config: Lagrangian runs need the parabolic basin bottom");
    if (init == Init::dam && smoothing >= static_cast<int>(std::llround(L / h)))
        throw ValidationError("config: smoothing wider than the mesh");
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw ValidationError("config: bad numeric value for " + key + ": " + v);
    }
}

bool to_bool(const std::string& v, const std::string& key) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ValidationError("config: bad boolean for " + key + ": " + v);
}

}  // namespace

ScenarioConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config: " + path);
    ScenarioConfig cfg;
    std::string line, section;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find_first_of("#;");
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[' && line.back() == ']') {
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ValidationError("config: expected key = value at line " + std::to_string(lineno));
        std::string key = section + "." + trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));

        if (key == "scenario.name") cfg.name = val;
        else if (key == "scenario.coords") {
            if (val == "eulerian") cfg.coords = ScenarioConfig::Coords::eulerian;
            else if (val == "lagrangian") cfg.coords = ScenarioConfig::Coords::lagrangian;
            else throw ValidationError("config: unknown coords: " + val);
        } else if (key == "scheme.w11") cfg.w11 = to_double(val, key);
        else if (key == "scheme.z12") cfg.z12 = to_double(val, key);
        else if (key == "scheme.naive") cfg.naive = to_bool(val, key);
        else if (key == "bottom.kind") {
            if (val == "flat") cfg.bottom = ScenarioConfig::Bottom::flat;
            else if (val == "parabolic") cfg.bottom = ScenarioConfig::Bottom::parabolic;
            else if (val == "sinusoidal") cfg.bottom = ScenarioConfig::Bottom::sinusoidal;
            else throw ValidationError("config: unknown bottom kind: " + val);
        } else if (key == "bottom.d1") cfg.d1 = to_double(val, key);
        else if (key == "bottom.d2") cfg.d2 = to_double(val, key);
        else if (key == "domain.L") cfg.L = to_double(val, key);
        else if (key == "domain.h") cfg.h = to_double(val, key);
        else if (key == "domain.tau") cfg.tau = to_double(val, key);
        else if (key == "domain.T") cfg.T = to_double(val, key);
        else if (key == "initial.kind") {
            if (val == "lake") cfg.init = ScenarioConfig::Init::lake;
            else if (val == "dam") cfg.init = ScenarioConfig::Init::dam;
            else if (val == "sigmoid") cfg.init = ScenarioConfig::Init::sigmoid;
            else throw ValidationError("config: unknown initial kind: " + val);
        } else if (key == "initial.eta0") cfg.eta0 = to_double(val, key);
        else if (key == "initial.etaL") cfg.etaL = to_double(val, key);
        else if (key == "initial.etaR") cfg.etaR = to_double(val, key);
        else if (key == "initial.sigma1") cfg.sigma1 = to_double(val, key);
        else if (key == "initial.smoothing") cfg.smoothing = static_cast<int>(to_double(val, key));
        else if (key == "numerics.nu") {
            if (val == "auto") cfg.nu_auto = true;
            else cfg.nu = to_double(val, key);
        }
        else if (key == "numerics.eps") cfg.eps = to_double(val, key);
        else if (key == "numerics.viscosity") {
            if (val == "per_layer") cfg.viscosity_mode = ViscosityMode::per_layer;
            else if (val == "per_iteration") cfg.viscosity_mode = ViscosityMode::per_iteration;
            else throw ValidationError("config: unknown viscosity mode: " + val);
        } else if (key == "numerics.seed") cfg.seed = static_cast<unsigned>(to_double(val, key));
        else if (key == "output.fields_stride")
            cfg.fields_stride = static_cast<std::size_t>(to_double(val, key));
        else throw ValidationError("config: unknown key: " + key);
    }
    cfg.validate();
    return cfg;
}

ScenarioConfig preset_config(const std::string& name) {
    ScenarioConfig c;
    c.name = name;
    if (name == "stationary-parabolic") {
        c.bottom = ScenarioConfig::Bottom::parabolic;
        c.d1 = 10.0;
        c.init = ScenarioConfig::Init::lake;
        c.eta0 = 5.0;
        c.T = 5.0;
    } else if (name == "dambreak-parabolic" || name == "dambreak-parabolic-naive") {
        c.bottom = ScenarioConfig::Bottom::parabolic;
        c.d1 = 10.0;
        c.init = ScenarioConfig::Init::dam;
        c.etaL = 2.0;
        c.etaR = 0.5;
        c.T = 2.5;
        c.naive = name == "dambreak-parabolic-naive";
    } else if (name == "dambreak-parabolic-viscous") {
        c.bottom = ScenarioConfig::Bottom::parabolic;
        c.d1 = 10.0;
        c.init = ScenarioConfig::Init::dam;
        c.etaL = 2.0;
        c.etaR = 0.5;
        c.T = 5.0;
        c.nu = 0.08;
    } else if (name == "dambreak-sinusoidal") {
        c.bottom = ScenarioConfig::Bottom::sinusoidal;
        c.d2 = 2.0;
        c.init = ScenarioConfig::Init::dam;
        c.etaL = 2.5;
        c.etaR = 0.5;
        c.T = 5.0;
        c.nu = 0.15;
    } else if (name == "lake-lagrangian") {
        c.coords = ScenarioConfig::Coords::lagrangian;
        c.bottom = ScenarioConfig::Bottom::parabolic;
        c.d1 = 10.0;
        c.init = ScenarioConfig::Init::lake;
        c.eta0 = 5.0;
        c.h = 0.1;
        c.tau = 0.01;
        c.T = 1.0;
    } else if (name == "dambreak-lagrangian" || name == "dambreak-lagrangian-viscous") {
        c.coords = ScenarioConfig::Coords::lagrangian;
        c.bottom = ScenarioConfig::Bottom::parabolic;
        c.d1 = 10.0;
        c.init = ScenarioConfig::Init::sigmoid;
        c.etaL = 2.0;
        c.etaR = 0.5;
        c.sigma1 = 20.0;
        c.h = 0.25;
        c.tau = 0.00125;
        c.T = 1.0;
        c.nu_auto = name == "dambreak-lagrangian-viscous";
    } else {
        throw ValidationError("unknown preset: " + name);
    }
    c.validate();
    return c;
}

std::vector<std::string> preset_names() {
    return {"stationary-parabolic",     "dambreak-parabolic",
            "dambreak-parabolic-naive", "dambreak-parabolic-viscous",
            "dambreak-sinusoidal",      "lake-lagrangian",
            "dambreak-lagrangian",      "dambreak-lagrangian-viscous"};
}

std::string output_root() {
    const char* env = std::getenv("SWLAB_OUTPUT_ROOT");
    return env && *env ? env : "swlab_out";
}

namespace {

void write_fields_csv(const std::string& path, const GridField& x, const GridField& u,
                      const GridField& eta, const GridField& rho, const GridField& H) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SolverError("cannot open for writing: " + path);
    out << "m,x,u,eta,rho,H\n";
    char buf[192];
    for (std::size_t m = 0; m < x.size(); ++m) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g,%.17g,%.17g\n", m, x[m], u[m],
                      eta[m], rho[m], H[m]);
        out << buf;
    }
}

BottomProfile make_bottom(const ScenarioConfig& cfg) {
    switch (cfg.bottom) {
        case ScenarioConfig::Bottom::flat:
            return BottomProfile::flat();
        case ScenarioConfig::Bottom::parabolic:
            return BottomProfile::parabolic_up(cfg.d1, cfg.L);
        case ScenarioConfig::Bottom::sinusoidal:
            return BottomProfile::sinusoidal(cfg.d2, cfg.L);
    }
    return BottomProfile::flat();
}

RunResult run_euler(const ScenarioConfig& cfg, const std::string& dir, bool write_files) {
    SpaceTimeMesh mesh;
    mesh.h = cfg.h;
    mesh.tau = cfg.tau;
    mesh.M = static_cast<std::size_t>(std::llround(cfg.L / cfg.h)) + 1;
    mesh.N = static_cast<std::size_t>(std::llround(cfg.T / cfg.tau));
    mesh.validate();

    BottomProfile bottom = make_bottom(cfg);
    EulerState st;
    st.h = cfg.h;
    st.tau = cfg.tau;
    st.H.resize(mesh.M);
    for (std::size_t m = 0; m < mesh.M; ++m) st.H[m] = eval_H(bottom, mesh.node(m));
    st.u.assign(mesh.M, 0.0);
    st.eta = cfg.init == ScenarioConfig::Init::lake
                 ? GridField(mesh.M, cfg.eta0)
                 : smooth_dam_profile(cfg.etaL, cfg.etaR, cfg.L / 2.0, cfg.smoothing, mesh);
    st.validate();

    SchemeFamily fam = cfg.naive ? naive_family() : family_coefficients(cfg.w11, cfg.z12);
    EulerStepOptions opt;
    opt.eps = cfg.eps > 0.0 ? cfg.eps : 1e-6;
    opt.nu = cfg.nu;
    opt.viscosity_mode = cfg.viscosity_mode;

    RunResult res;
    res.cfg = cfg;
    res.out_dir = dir;
    res.report.energy_series.push_back(total_energy(st));
    if (write_files)
        write_fields_csv(dir + "/fields_0.csv", [&] {
            GridField x(mesh.M);
            for (std::size_t m = 0; m < mesh.M; ++m) x[m] = mesh.node(m);
            return x;
        }(), st.u, st.eta, [&] {
            GridField r(mesh.M);
            for (std::size_t m = 0; m < mesh.M; ++m) r[m] = st.eta[m] + st.H[m];
            return r;
        }(), st.H);

    for (std::size_t n = 0; n < mesh.N; ++n) {
        GridField u_old = st.u, e_old = st.eta;
        StepDiagnostics diag;
        try {
            diag = advance(st, fam, opt);
        } catch (const std::exception& ex) {
            throw SolverError("euler solver failed at layer " + std::to_string(n) + ": " +
                              ex.what());
        }
        if (!diag.converged)
            throw SolverError("euler iteration did not converge at layer " + std::to_string(n));
        res.max_iterations = std::max(res.max_iterations, diag.iterations);
        res.report.layers.push_back(
            euler_layer_report(u_old, e_old, st.u, st.eta, st.H, fam, st.h, st.tau, n));
        res.report.energy_series.push_back(total_energy(st));
        for (std::size_t m = 0; m < mesh.M; ++m) {
            res.max_abs_u = std::max(res.max_abs_u, std::abs(st.u[m]));
            if (cfg.init == ScenarioConfig::Init::lake)
                res.max_eta_dev = std::max(res.max_eta_dev, std::abs(st.eta[m] - cfg.eta0));
        }
        if (write_files && cfg.fields_stride && (n + 1) % cfg.fields_stride == 0 &&
            n + 1 != mesh.N) {
            GridField x(mesh.M), r(mesh.M);
            for (std::size_t m = 0; m < mesh.M; ++m) {
                x[m] = mesh.node(m);
                r[m] = st.eta[m] + st.H[m];
            }
            write_fields_csv(dir + "/fields_" + std::to_string(n + 1) + ".csv", x, st.u, st.eta, r,
                             st.H);
        }
    }
    res.report.e_R = relative_energy_change(res.report.energy_series);
    res.u = st.u;
    res.eta = st.eta;
    res.x.resize(mesh.M);
    for (std::size_t m = 0; m < mesh.M; ++m) res.x[m] = mesh.node(m);
    if (write_files) {
        GridField r(mesh.M);
        for (std::size_t m = 0; m < mesh.M; ++m) r[m] = st.eta[m] + st.H[m];
        write_fields_csv(dir + "/fields_" + std::to_string(mesh.N) + ".csv", res.x, st.u, st.eta,
                         r, st.H);
        res.report.write_csv(dir + "/conservation.csv");
        res.report.write_energy_csv(dir + "/energy.csv");
        res.report.write_json(dir + "/summary.json");
    }
    return res;
}

RunResult run_lagrangian(const ScenarioConfig& cfg, const std::string& dir, bool write_files) {
    const double L = cfg.L, d1 = cfg.d1;
    auto Helev = [&](double x) {
        double s = 2.0 / L, d = x - L / 2.0;
        return d1 * (s * s * d * d - 1.0);
    };
    auto eta_init = [&](double x) {
        if (cfg.init == ScenarioConfig::Init::lake) return cfg.eta0;
        return cfg.etaL + (cfg.etaR - cfg.etaL) / (1.0 + std::exp(cfg.sigma1 * (L / 2.0 - x)));
    };
    auto rho0 = [&](double x) { return eta_init(x) - Helev(x); };

    MassMap map = build_mass_coordinate(rho0, L, L / 200000.0);
    double S = map.total();
    std::size_t M = static_cast<std::size_t>(std::floor(L / cfg.h));
    if (M < 4) throw ValidationError("lagrangian mesh: too few nodes");
    double hs = S / static_cast<double>(M - 1);

    LagrangianState st;
    st.hs = hs;
    st.tau = cfg.tau;
    st.x_curr = solve_alpha_cauchy(rho0, S, hs, 64);
    if (st.x_curr.size() != M) throw SolverError("lagrangian mesh: node count mismatch");
    st.x_prev = st.x_curr;  // zero initial velocity
    st.n = 1;
    st.validate();

    LagrScheme sc = LagrScheme::basin(d1, L);
    LagrStepOptions opt;
    opt.eps = cfg.eps > 0.0 ? cfg.eps : 1e-12;
    opt.nu = cfg.nu_auto ? hs : cfg.nu;

    RunResult res;
    res.cfg = cfg;
    res.out_dir = dir;

    auto energy_total = [&](const GridField& xa, const GridField& xb) {
        double sum = 0.0;
        for (std::size_t m = 0; m + 1 < M; ++m) {
            double xt = (xb[m] - xa[m]) / cfg.tau;
            double xsa = (xa[m + 1] - xa[m]) / hs, xsb = (xb[m + 1] - xb[m]) / hs;
            double b1 = 8.0 * d1 / (L * L);
            double pot = phi_cosh(cfg.tau, b1) * b1 * (xa[m] - L / 2.0) * (xb[m] - L / 2.0);
            sum += xt * xt + 0.5 * (1.0 / xsa + 1.0 / xsb) + pot;
        }
        return hs * sum;
    };

    auto fields_of = [&](const GridField& xp, const GridField& xc) {
        GridField u(M), eta(M), rho(M), H(M);
        for (std::size_t m = 0; m < M; ++m) {
            u[m] = (xc[m] - xp[m]) / cfg.tau;
            std::size_t cell = m + 1 < M ? m : m - 1;
            rho[m] = hs / (xc[cell + 1] - xc[cell]);
            H[m] = Helev(xc[m]);
            eta[m] = rho[m] + H[m];
        }
        return std::make_tuple(u, eta, rho, H);
    };

    if (write_files) {
        map.write_csv(dir + "/mass_map.csv");
        auto [u0, eta0f, rho0f, H0] = fields_of(st.x_prev, st.x_curr);
        write_fields_csv(dir + "/fields_0.csv", st.x_curr, u0, eta0f, rho0f, H0);
    }
    res.report.energy_series.push_back(energy_total(st.x_prev, st.x_curr));

    std::size_t N = static_cast<std::size_t>(std::llround(cfg.T / cfg.tau));
    for (std::size_t n = 1; n < N; ++n) {
        GridField x_before = st.x_prev;
        StepDiagnostics diag;
        try {
            diag = step_tridiagonal(st, sc, opt);
        } catch (const std::exception& ex) {
            throw SolverError("lagrangian solver failed at layer " + std::to_string(n) + ": " +
                              ex.what());
        }
        if (!diag.converged)
            throw SolverError("lagrangian iteration did not converge at layer " +
                              std::to_string(n));
        res.max_iterations = std::max(res.max_iterations, diag.iterations);
        // after the step: x_prev is layer n, x_curr is layer n+1
        res.report.layers.push_back(lagr_layer_report(x_before, st.x_prev, st.x_curr, sc, hs,
                                                      cfg.tau, n * cfg.tau, n));
        res.report.energy_series.push_back(energy_total(st.x_prev, st.x_curr));
        for (std::size_t m = 0; m < M; ++m)
            res.max_abs_u = std::max(res.max_abs_u, std::abs(st.x_curr[m] - st.x_prev[m]) / cfg.tau);
    }
    res.report.e_R = relative_energy_change(res.report.energy_series);
    auto [u, eta, rho, H] = fields_of(st.x_prev, st.x_curr);
    res.x = st.x_curr;
    res.u = u;
    res.eta = eta;
    if (write_files) {
        write_fields_csv(dir + "/fields_" + std::to_string(N) + ".csv", st.x_curr, u, eta, rho, H);
        res.report.write_csv(dir + "/conservation.csv");
        res.report.write_energy_csv(dir + "/energy.csv");
        res.report.write_json(dir + "/summary.json");
    }
    return res;
}

}  // namespace

RunResult run_scenario(const ScenarioConfig& cfg, bool write_files) {
    cfg.validate();
    std::string dir = output_root() + "/" + cfg.name;
    if (write_files) fs::create_directories(dir);
    return cfg.coords == ScenarioConfig::Coords::eulerian ? run_euler(cfg, dir, write_files)
                                                          : run_lagrangian(cfg, dir, write_files);
}

CompareResult compare_schemes(const ScenarioConfig& a, const ScenarioConfig& b, bool write_files) {
    if (a.coords != b.coords || a.L != b.L || a.h != b.h || a.tau != b.tau || a.T != b.T)
        throw ValidationError("compare: scenarios must share mesh and horizon");
    RunResult ra = run_scenario(a, write_files);
    RunResult rb = run_scenario(b, write_files);
    CompareResult c;
    c.e_R_a = ra.report.e_R;
    c.e_R_b = rb.report.e_R;
    auto deps_of = [](const RunResult& r) {
        std::vector<double> d;
        for (const LayerReport& lr : r.report.layers)
            for (const LawStats& ls : lr.laws)
                if (ls.law == "energy") d.push_back(ls.max);
        return d;
    };
    c.deps_a = deps_of(ra);
    c.deps_b = deps_of(rb);
    std::size_t n = std::min(c.e_R_a.size(), c.e_R_b.size());
    c.log_ratio.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        c.log_ratio[i] = (c.e_R_a[i] > 0.0 && c.e_R_b[i] > 0.0)
                             ? std::log10(c.e_R_b[i] / c.e_R_a[i])
                             : 0.0;
    if (write_files) {
        c.out_dir = output_root() + "/compare-" + a.name + "-vs-" + b.name;
        fs::create_directories(c.out_dir);
        std::ofstream out(c.out_dir + "/compare.csv", std::ios::binary);
        if (!out) throw SolverError("cannot open compare.csv");
        out << "layer,e_R_a,e_R_b,deps_a,deps_b,log10_ratio\n";
        char buf[192];
        for (std::size_t i = 0; i < n; ++i) {
            double da = i < c.deps_a.size() + 1 && i > 0 ? c.deps_a[i - 1] : 0.0;
            double db = i < c.deps_b.size() + 1 && i > 0 ? c.deps_b[i - 1] : 0.0;
            std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g,%.17g,%.17g\n", i, c.e_R_a[i],
                          c.e_R_b[i], da, db, c.log_ratio[i]);
            out << buf;
        }
    }
    return c;
}

VerifyResult run_verifier(unsigned seed, std::size_t samples) {
    if (samples < 1) throw ValidationError("verify: samples must be >= 1");
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> val(0.5, 2.0);
    std::uniform_real_distribution<double> par(-1.0, 1.0);
    std::ostringstream rep;
    bool pass = true;
    char buf[160];

    // energy identity over random windows and family members
    double worst_rel = 0.0;
    long bad_sample = -1;
    for (int p = 0; p < 10; ++p) {
        double w11 = par(rng), z12 = par(rng);
        for (std::size_t i = 0; i < samples; ++i) {
            EulerWindow w;
            w.u = val(rng); w.up = val(rng); w.uh = val(rng); w.uhp = val(rng);
            w.e = val(rng); w.ep = val(rng); w.eh = val(rng); w.ehp = val(rng);
            w.H = val(rng); w.Hp = val(rng);
            w.h = 0.1; w.tau = 0.01;
            double rel = std::abs(energy_identity_residual(w, w11, z12)) /
                         energy_identity_scale(w, w11, z12);
            if (rel > worst_rel) worst_rel = rel;
            if (rel > 1e-12 && bad_sample < 0) bad_sample = static_cast<long>(p * samples + i);
        }
    }
    bool ok1 = bad_sample < 0;
    pass = pass && ok1;
    std::snprintf(buf, sizeof buf, "energy-identity: %s max_rel=%.6e%s\n", ok1 ? "PASS" : "FAIL",
                  worst_rel, ok1 ? "" : (" first_bad=" + std::to_string(bad_sample)).c_str());
    rep << buf;

    // Euler operator annihilates random pure-divergence expressions
    double worst_div = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        double c1 = par(rng), c2 = par(rng), c3 = par(rng);
        GridStack g;
        g.h = 0.13;
        g.tau = 0.07;
        g.v.assign(7, std::vector<double>(9));
        for (auto& row : g.v)
            for (double& v : row) v = val(rng);
        auto f = [c1, c2, c3](const GridStack& gs, int l, int n) {
            double a = gs.v[l][n], b = gs.v[l][n + 1], c = gs.v[l + 1][n];
            return c1 * a * b + c2 * std::sin(a) * c + c3 * b * c * c;
        };
        StencilExpr expr = [f](const GridStack& gs, int l, int n) {
            return (f(gs, l, n + 1) - f(gs, l, n)) / gs.h;
        };
        worst_div = std::max(worst_div, std::abs(variational_euler_apply(expr, g, 3, 4, 2)));
    }
    bool ok2 = worst_div <= 1e-7;
    pass = pass && ok2;
    std::snprintf(buf, sizeof buf, "euler-operator-divergence: %s max=%.6e\n",
                  ok2 ? "PASS" : "FAIL", worst_div);
    rep << buf;

    // phi determination
    double worst_phi = 0.0;
    for (double tau : {0.05, 0.1, 0.2}) {
        double got = determine_phi(tau, seed + 17);
        worst_phi = std::max(worst_phi, std::abs(got - phi_cosh(tau, 1.0)));
    }
    bool ok3 = worst_phi <= 1e-6;
    pass = pass && ok3;
    std::snprintf(buf, sizeof buf, "phi-determination: %s max_err=%.6e\n", ok3 ? "PASS" : "FAIL",
                  worst_phi);
    rep << buf;

    VerifyResult r;
    r.pass = pass;
    r.report = rep.str();
    return r;
}

}  // namespace swlab
