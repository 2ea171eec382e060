#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "snc/workbench.hpp"

namespace {

// SNC_<FLAG> environment variables supply defaults; explicit flags win.
template <class T>
void env_default(const char* name, T& value) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return;
    std::string s(v);
    if constexpr (std::is_same_v<T, std::string>) {
        value = s;
    } else {
        if (s.find_first_not_of("0123456789") != std::string::npos)
            throw snc::usage_error(std::string(name) + " must be a non-negative integer");
        value = static_cast<T>(std::stoull(s));
    }
}

}  // namespace

int main(int argc, char** argv) {
    snc::run_config cfg;
    try {
        env_default("SNC_CAP_EXACT", cfg.cap_exact);
        env_default("SNC_SEED", cfg.seed);
        env_default("SNC_BUDGET", cfg.budget);
        env_default("SNC_FORMAT", cfg.format);
        env_default("SNC_OUT", cfg.out);
    } catch (const std::exception& e) {
        std::cerr << "snc: " << e.what() << "\n";
        return 2;
    }

    CLI::App app{"Second neighbourhood workbench: SNP oracle, median orders, sedimentation, dependency digraphs "
                 "and theorem witnesses"};
    app.set_version_flag("--version", snc::tool_version);
    app.require_subcommand(1);
    app.add_option("--cap-exact", cfg.cap_exact, "largest n solved exactly (env SNC_CAP_EXACT)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "seed for generated instances (env SNC_SEED)");
    app.add_option("--budget", cfg.budget, "sweep size, search budget or sedimentation steps (env SNC_BUDGET)");
    app.add_option("--format", cfg.format, "human or machine (env SNC_FORMAT)")
        ->check(CLI::IsMember({"human", "machine"}));
    app.add_option("--out", cfg.out, "write the report here instead of stdout (env SNC_OUT)");
    app.add_option("--threads", cfg.threads, "worker threads, 0 for all cores");

    const char* instances_help = "instance files or specs such as fixture:name=C3";
    auto* oracle = app.add_subcommand("oracle", "vertices with the second neighbourhood property");
    oracle->add_option("instances", cfg.sources, instances_help)->required();
    auto* median = app.add_subcommand("median", "exact or local median order and its analysis");
    median->add_option("instances", cfg.sources, instances_help)->required();
    median->add_flag("--local", cfg.local, "repair --order into a local median order");
    median->add_flag("--good", cfg.good, "median order keeping every K(xi) contiguous");
    median->add_option("--order", cfg.order, "initial order, e.g. 0,1,2");
    auto* sediment = app.add_subcommand("sediment", "sedimentation trace of an order");
    sediment->add_option("instances", cfg.sources, instances_help)->required();
    sediment->add_option("--order", cfg.order, "initial order, identity by default");
    auto* delta = app.add_subcommand("delta", "dependency digraph, components, good edges and goodness");
    delta->add_option("instances", cfg.sources, instances_help)->required();
    auto* gates = app.add_subcommand("gates", "which theorem hypotheses hold");
    gates->add_option("instances", cfg.sources, instances_help)->required();
    auto* verify = app.add_subcommand("verify", "run a theorem's witness procedure");
    verify->add_option("theorem", cfg.argument, "theorem id, e.g. single-star")->required();
    verify->add_option("instances", cfg.sources, instances_help)->required();
    auto* sweep = app.add_subcommand("sweep", "exhaustive or seeded acceptance run");
    sweep->add_option("family", cfg.argument,
                      "tournaments-nN, tournaments-two-nN, digraphs-nN, random-digraphs-nN, gadgets, <theorem>-nN")
        ->required();
    auto* gen = app.add_subcommand("gen", "emit an instance");
    gen->add_option("spec", cfg.argument, "instance spec, e.g. star-deleted:n=8,seed=3,shape=2.1")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        snc::report rep = snc::run(cfg);
        std::string text = snc::emit_report(rep, cfg.format);
        if (cfg.out.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(cfg.out, std::ios::binary);
            if (!out) throw snc::usage_error("cannot write '" + cfg.out + "'");
            out << text;
        }
        return rep.exit_code();
    } catch (const snc::usage_error& e) {
        std::cerr << "snc: " << e.what() << "\n";
        return 2;
    } catch (const snc::unrealizable& e) {
        std::cerr << "snc: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "snc: " << e.what() << "\n";
        return 1;
    }
}
