#pragma once

#include <filesystem>
#include <initializer_list>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace vffc::cli {

/// Invalid configuration; `line` is 0 when the offending value came from the command line or a default.
class SchemaError : public std::runtime_error {
public:
    SchemaError(const std::string& message, std::string source, int line)
        : std::runtime_error(message), source_(std::move(source)), line_(line) {}

    const std::string& source() const { return source_; }
    int line() const { return line_; }
    std::string diagnostic() const;

private:
    std::string source_;
    int line_;
};

/// Raw configuration text with its parsed document.
class ConfigSource {
public:
    static ConfigSource from_file(const std::filesystem::path& path);
    static ConfigSource from_text(const std::string& text, const std::string& name);
    static ConfigSource empty();

    nlohmann::json& root() { return root_; }
    const nlohmann::json& root() const { return root_; }
    const std::string& name() const { return name_; }

    /// 1-based line where the key path first appears in the text, or 0.
    int line_of(const std::vector<std::string>& path) const;

private:
    std::string name_;
    std::string text_;
    nlohmann::json root_ = nlohmann::json::object();
};

/// Writes `value` at `path`, creating intermediate objects.
void set_path(nlohmann::json& doc, const std::vector<std::string>& path, nlohmann::json value);

/**
 * @brief Typed view of one config object.
 *
 * Every accessor records the effective value (explicit or default) into `resolved`, so the resolved
 * document is a complete description of the run. finish() rejects keys nobody asked for.
 */
class Node {
public:
    Node(const ConfigSource& source, const nlohmann::json* value, std::vector<std::string> path,
         nlohmann::json& resolved);

    double number(const std::string& key, double fallback);
    double positive(const std::string& key, double fallback);
    double non_negative(const std::string& key, double fallback);
    std::optional<double> optional_number(const std::string& key);
    int integer(const std::string& key, int fallback, int lo, int hi);
    std::uint64_t seed(const std::string& key, std::uint64_t fallback);
    std::string choice(const std::string& key, const std::string& fallback, std::initializer_list<const char*> allowed);
    std::optional<std::string> optional_string(const std::string& key);
    std::vector<double> numbers(const std::string& key, const std::vector<double>& fallback);
    std::vector<std::string> choices(const std::string& key, const std::vector<std::string>& fallback,
                                     std::initializer_list<const char*> allowed);
    bool has(const std::string& key) const;

    Node child(const std::string& key);
    void finish() const;

    [[noreturn]] void fail(const std::string& key, const std::string& what) const;

private:
    const nlohmann::json* find(const std::string& key);
    std::string dotted(const std::string& key) const;

    const ConfigSource* source_;
    const nlohmann::json* value_;
    std::vector<std::string> path_;
    nlohmann::json* resolved_;
    std::set<std::string> used_;
};

}  // namespace vffc::cli
