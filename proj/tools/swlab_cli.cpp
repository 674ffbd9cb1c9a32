#include <cstdio>
#include <filesystem>
#include <string>

#include <CLI11.hpp>

#include "swlab/experiments.hpp"

namespace {

swlab::ScenarioConfig load_target(const std::string& target) {
    if (std::filesystem::exists(target)) return swlab::parse_config_file(target);
    return swlab::preset_config(target);
}

int guarded(int (*body)(void*), void* arg) {
    try {
        return body(arg);
    } catch (const swlab::ValidationError& ex) {
        std::fprintf(stderr, "validation error: %s\n", ex.what());
        return 2;
    } catch (const swlab::SolverError& ex) {
        std::fprintf(stderr, "solver error: %s\n", ex.what());
        return 3;
    } catch (const swlab::IdentityError& ex) {
        std::fprintf(stderr, "identity failure: %s\n", ex.what());
        return 4;
    } catch (const std::invalid_argument& ex) {
        std::fprintf(stderr, "validation error: %s\n", ex.what());
        return 2;
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "solver error: %s\n", ex.what());
        return 3;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"shallow-water structure-preserving scheme laboratory"};
    app.require_subcommand(1);

    std::string run_target;
    CLI::App* run = app.add_subcommand("run", "run a preset or config file scenario");
    run->add_option("target", run_target, "preset name or config path")->required();

    std::size_t samples = 10000;
    unsigned seed = 12345;
    CLI::App* verify = app.add_subcommand("verify", "run the identity verification suites");
    verify->add_option("--samples", samples, "random windows per parameter pair");
    verify->add_option("--seed", seed, "random seed");

    std::string cfg_a, cfg_b;
    CLI::App* compare = app.add_subcommand("compare", "run two scenarios and compare drift");
    compare->add_option("cfgA", cfg_a, "first preset/config")->required();
    compare->add_option("cfgB", cfg_b, "second preset/config")->required();

    CLI::App* list = app.add_subcommand("list-presets", "list builtin scenario presets");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) {
        struct Arg { const std::string& t; } a{run_target};
        return guarded(
            [](void* p) {
                auto& ar = *static_cast<Arg*>(p);
                swlab::RunResult r = swlab::run_scenario(load_target(ar.t));
                std::printf("run complete: %s\n", r.out_dir.c_str());
                std::printf("layers=%zu max_iterations=%d max|u|=%.3e final e_R=%.3e\n",
                            r.report.layers.size(), r.max_iterations, r.max_abs_u,
                            r.report.e_R.empty() ? 0.0 : r.report.e_R.back());
                return 0;
            },
            &a);
    }
    if (verify->parsed()) {
        struct Arg { unsigned s; std::size_t n; } a{seed, samples};
        return guarded(
            [](void* p) {
                auto& ar = *static_cast<Arg*>(p);
                swlab::VerifyResult v = swlab::run_verifier(ar.s, ar.n);
                std::fputs(v.report.c_str(), stdout);
                if (!v.pass) throw swlab::IdentityError("verification suite failed");
                return 0;
            },
            &a);
    }
    if (compare->parsed()) {
        struct Arg { const std::string &a, &b; } a{cfg_a, cfg_b};
        return guarded(
            [](void* p) {
                auto& ar = *static_cast<Arg*>(p);
                swlab::CompareResult c =
                    swlab::compare_schemes(load_target(ar.a), load_target(ar.b));
                std::printf("comparison written: %s\n", c.out_dir.c_str());
                if (!c.log_ratio.empty())
                    std::printf("final log10(e_R ratio b/a) = %.3f\n", c.log_ratio.back());
                return 0;
            },
            &a);
    }
    if (list->parsed()) {
        for (const std::string& n : swlab::preset_names()) std::printf("%s\n", n.c_str());
        return 0;
    }
    return 2;
}
