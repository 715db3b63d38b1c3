// SPDX-License-Identifier: Apache-2.0
//
// fr3 — multi-band link analysis CLI.
//
// Subcommands: spectrum, array, tradeoff, pas, ris. Each reads a JSON
// configuration, computes the scenario, and writes CSV/JSON tables plus an
// effective_config.json and a manifest.json under --out. Outputs are a pure
// function of (config, seed): no clocks, no unseeded randomness.
//
// Exit codes: 0 success, 1 computation error, 2 configuration error,
// 3 I/O error. Errors are reported on stderr as a JSON record.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fr3kit/errors.hpp"
#include "fr3kit/runner.hpp"

namespace {

void print_error(int exit_code, const std::string& kind, const std::string& message) {
    std::string escaped;
    for (char c : message) {
        if (c == '"' || c == '\\') escaped.push_back('\\');
        if (c == '\n') {
            escaped += "\\n";
            continue;
        }
        escaped.push_back(c);
    }
    std::cerr << "{\"error\": {\"exit_code\": " << exit_code << ", \"kind\": \"" << kind
              << "\", \"message\": \"" << escaped << "\"}}\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fr3 — multi-band link analysis toolkit"};
    app.require_subcommand(1);

    std::string config_path, out_dir = ".", format = "csv";
    uint64_t seed = 0;
    bool seed_given = false;
    std::vector<std::string> overrides;
    app.add_option("--config", config_path, "JSON configuration file")->capture_default_str();
    app.add_option("--out", out_dir, "Output directory")->capture_default_str();
    app.add_option("--seed", seed, "Seed for synthetic generators")
        ->capture_default_str()
        ->each([&](const std::string&) { seed_given = true; });
    app.add_option("--format", format, "Output table format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--set", overrides,
                   "Override a config key, e.g. --set frequency_hz=28e9 "
                   "(relative to the subcommand section)");

    auto* spectrum = app.add_subcommand("spectrum", "Band registry, FR classification, aggregation");
    auto* array = app.add_subcommand("array", "Fixed-aperture directivity and beamwidth per band");
    auto* tradeoff = app.add_subcommand("tradeoff", "Coverage-capacity scan and balanced band");
    auto* pas = app.add_subcommand("pas", "Beamformed-PAS similarity metrics over a link ensemble");
    auto* ris = app.add_subcommand("ris", "RIS-aided SE/EE sweep");

    bool synthetic = false, compare = false;
    pas->add_flag("--synthetic", synthetic, "Generate the synthetic link ensemble");
    ris->add_flag("--compare", compare, "Run every configuration in the compare set");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error(2, "config", e.what());
        return 2;
    }

    fr3::RunConfig rc;
    if (spectrum->parsed()) rc.subcommand = fr3::Subcommand::spectrum;
    if (array->parsed()) rc.subcommand = fr3::Subcommand::array;
    if (tradeoff->parsed()) rc.subcommand = fr3::Subcommand::tradeoff;
    if (pas->parsed()) rc.subcommand = fr3::Subcommand::pas;
    if (ris->parsed()) rc.subcommand = fr3::Subcommand::ris;
    rc.config_path = config_path;
    rc.out_dir = out_dir;
    if (seed_given) rc.seed = seed;
    rc.format = fr3::table_format_from_string(format);
    rc.overrides = overrides;
    rc.pas_synthetic = synthetic;
    rc.ris_compare = compare;

    try {
        fr3::run(rc);
    } catch (const fr3::ConfigError& e) {
        print_error(2, "config", e.what());
        return 2;
    } catch (const fr3::IoError& e) {
        print_error(3, "io", e.what());
        return 3;
    } catch (const std::exception& e) {
        print_error(1, "compute", e.what());
        return 1;
    }
    return 0;
}
