#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "cli/output.hpp"
#include "vffc/errors.hpp"

#ifndef VFFC_VERSION
#define VFFC_VERSION "0.0.0"
#endif

namespace {

using namespace vffc::cli;
using nlohmann::json;

constexpr int kSchemaVersion = 1;

enum Exit { kOk = 0, kFailure = 1, kSchema = 2, kNumeric = 3 };

struct Invocation {
    std::string config_path;
    std::string out_dir;
    std::vector<std::string> sets;
    std::map<std::string, std::string> flags;
    unsigned workers = 0;
    bool manifest_only = false;
};

json parse_scalar(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error&) {
        return text;
    }
}

std::filesystem::path output_base(const Invocation& inv, const json& config) {
    if (!inv.out_dir.empty()) return inv.out_dir;
    if (const char* env = std::getenv("VFFC_OUTPUT_DIR"); env != nullptr && *env != '\0') return env;
    if (config.contains("output_dir") && config["output_dir"].is_string()) return config["output_dir"].get<std::string>();
    return "vffc_out";
}

int run(const CommandSpec& cmd, const Invocation& inv) {
    const auto started = std::chrono::steady_clock::now();
    ConfigSource source = inv.config_path.empty() ? ConfigSource::empty() : ConfigSource::from_file(inv.config_path);
    json& doc = source.root();

    if (doc.contains("schema_version")) {
        if (!doc["schema_version"].is_number_integer() || doc["schema_version"].get<int>() != kSchemaVersion) {
            throw SchemaError("schema_version: expected " + std::to_string(kSchemaVersion), source.name(),
                              source.line_of({"schema_version"}));
        }
        doc.erase("schema_version");
    }
    const std::filesystem::path dir = output_base(inv, doc) / cmd.name;
    doc.erase("output_dir");

    for (const auto& b : cmd.flags) {
        if (auto it = inv.flags.find(b.flag); it != inv.flags.end()) set_path(doc, b.path, parse_scalar(it->second));
    }
    for (const auto& s : inv.sets) {
        const auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0) throw SchemaError("--set expects key.path=value, got '" + s + "'", "<command line>", 0);
        std::vector<std::string> path;
        std::string key = s.substr(0, eq);
        for (std::size_t start = 0;;) {
            const auto dot = key.find('.', start);
            path.push_back(key.substr(start, dot - start));
            if (dot == std::string::npos) break;
            start = dot + 1;
        }
        set_path(doc, path, parse_scalar(s.substr(eq + 1)));
    }

    json resolved = json::object();
    Node root(source, &doc, {}, resolved);
    const Runner work = cmd.prepare(root, inv.workers);
    root.finish();

    json manifest{{"command", cmd.name},
                  {"version", VFFC_VERSION},
                  {"schema_version", kSchemaVersion},
                  {"config", resolved},
                  {"config_hash", hex64(fnv1a(resolved.dump()))},
                  {"seed", resolved.value("seed", json(0))},
                  {"dry_run", inv.manifest_only}};

    Outcome outcome;
    if (!inv.manifest_only) outcome = work();
    json files = json::array();
    for (const auto& a : outcome.artifacts) {
        write_atomic(dir / a.file, a.content);
        files.push_back({{"file", a.file}, {"bytes", a.content.size()}, {"fnv1a", hex64(fnv1a(a.content))}});
    }
    manifest["artifacts"] = files;
    manifest["converged"] = outcome.converged;
    manifest["summary"] = outcome.summary;
    manifest["wall_time_s"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    write_atomic(dir / "manifest.json", canonical_json(manifest));
    std::cout << dir.string() << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Variational compression of diagonal Trotter operators and Marcus-model dynamics"};
    app.set_version_flag("--version", VFFC_VERSION);
    app.require_subcommand(1);

    Invocation inv;
    const CommandSpec* chosen = nullptr;
    for (const auto& cmd : command_table()) {
        CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
        sub->add_option("-c,--config", inv.config_path, "JSON configuration file")->check(CLI::ExistingFile);
        sub->add_option("-o,--out", inv.out_dir, "output directory (overrides VFFC_OUTPUT_DIR and output_dir)");
        sub->add_option("--set", inv.sets, "override a config value: key.path=value")->take_all();
        sub->add_option("-j,--workers", inv.workers, "worker threads (0 = logical cores)");
        sub->add_flag("--manifest-only", inv.manifest_only, "validate the config and write only the manifest");
        for (const auto& b : cmd.flags) {
            sub->add_option_function<std::string>(
                b.flag, [&inv, flag = b.flag](const std::string& v) { inv.flags[flag] = v; }, b.help);
        }
        sub->callback([&chosen, &cmd] { chosen = &cmd; });
    }
    bool columns = false;
    app.add_subcommand("columns", "Print the CSV column reference")->callback([&columns] { columns = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kSchema;
    }
    if (columns) {
        std::cout << columns_reference();
        return kOk;
    }

    try {
        return run(*chosen, inv);
    } catch (const SchemaError& e) {
        std::cerr << "vffc: config error: " << e.diagnostic() << "\n";
        return kSchema;
    } catch (const vffc::ArgumentError& e) {
        std::cerr << "vffc: invalid argument: " << e.what() << "\n";
        return kSchema;
    } catch (const vffc::ContractViolation& e) {
        std::cerr << "vffc: invalid argument: " << e.what() << "\n";
        return kSchema;
    } catch (const vffc::NumericError& e) {
        std::cerr << "vffc: numeric error: " << e.what() << "\n";
        return kNumeric;
    } catch (const vffc::DomainError& e) {
        std::cerr << "vffc: numeric error: " << e.what() << "\n";
        return kNumeric;
    } catch (const std::exception& e) {
        std::cerr << "vffc: error: " << e.what() << "\n";
        return kFailure;
    }
}
