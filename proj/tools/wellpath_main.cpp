#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wellpath/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Well-trajectory design and hook-load analysis"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    double md_step = -1.0;  // <0: take from config

    app.add_option("--config", config_path, "Config file (key = value under [section] headers)");
    app.add_option("--out", out_dir, "Output directory")->capture_default_str();
    app.add_option("--md-step", md_step, "Survey station spacing in ft (default 100)");

    for (const char* name : {"design-arc", "design-catenary", "compare", "hookload",
                             "sensitivity"})
        app.add_subcommand(name)->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return wellpath::cli::kConfigError;
    }
    const std::string cmd = app.get_subcommands().front()->get_name();

    wellpath::config::DesignConfig cfg;
    try {
        if (!config_path.empty()) cfg = wellpath::config::load_config(config_path);
        if (md_step > 0.0) cfg.output.md_step = md_step;
        wellpath::config::validate(cfg);
    } catch (const wellpath::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return wellpath::cli::kConfigError;
    }

    return wellpath::cli::run_command(cmd, cfg, out_dir);
}
