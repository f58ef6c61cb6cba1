#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "arquiver/run.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Stable Auslander-Reiten quiver computations for the domestic "
                 "finite group schemes over SL(2)"};
    app.require_subcommand(1);

    arq::RunConfig config;
    std::string family = "cyclic";
    std::string window;

    auto add_spec_flags = [&](CLI::App* cmd) {
        cmd->add_option("--family", family,
                        "cyclic | dihedral | tetrahedral | octahedral | icosahedral")
            ->required();
        cmd->add_option("--n", config.spec.n, "cyclic/dihedral parameter");
        cmd->add_option("--p", config.spec.p, "odd prime characteristic (default 5)");
        cmd->add_option("--r", config.spec.r, "infinitesimal height (default 1)");
        cmd->add_option("--format", config.format, "json | dot | text");
        cmd->add_option("--out", config.out, "output path (default stdout)");
    };

    for (const char* name :
         {"char-table", "mckay", "separated", "ar-component", "tubes", "check"}) {
        auto* cmd = app.add_subcommand(name);
        add_spec_flags(cmd);
        if (std::string(name) == "ar-component") {
            cmd->add_option("--l", config.l, "highest weight of the Weyl factor");
            cmd->add_option("--seed", config.seed,
                            "index of the seed simple module");
            cmd->add_option("--window", window, "slice range A:B (default -3:3)");
        }
        cmd->callback([&app, &config, &family, &window, name]() {
            config.command = name;
            config.spec.family = arq::family_from_string(family);
            auto* cmd = app.get_subcommand(name);
            config.p_defaulted = cmd->count("--p") == 0;
            config.r_defaulted = cmd->count("--r") == 0;
            if (!window.empty()) {
                auto colon = window.find(':');
                if (colon == std::string::npos)
                    throw CLI::ValidationError("--window", "expected A:B");
                config.nu_min = std::stol(window.substr(0, colon));
                config.nu_max = std::stol(window.substr(colon + 1));
            }
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : arq::kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return arq::kExitUsage;
    }
    return arq::run(config);
}
