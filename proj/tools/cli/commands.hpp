#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli/config.hpp"
#include "cli/output.hpp"

namespace vffc::cli {

struct Outcome {
    std::vector<Artifact> artifacts;
    nlohmann::json summary = nlohmann::json::object();
    bool converged = true;
};

using Runner = std::function<Outcome()>;

/// Maps a command-line flag onto a config path.
struct FlagBinding {
    std::string flag;
    std::vector<std::string> path;
    std::string help;
};

struct CommandSpec {
    std::string name;
    std::string help;
    std::vector<FlagBinding> flags;
    /// Validates the config below `root`, fills `root`'s resolved document, and returns the work.
    std::function<Runner(Node& root, unsigned workers)> prepare;
};

const std::vector<CommandSpec>& command_table();

/// Markdown description of every CSV the commands emit.
std::string columns_reference();

}  // namespace vffc::cli
