#pragma once

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace vffc::cli {

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);
std::string hex64(std::uint64_t v);

/// Shortest decimal text that round-trips the double.
std::string format_number(double v);

/// In-memory CSV with a fixed header; rows must match the header width.
class Csv {
public:
    explicit Csv(std::vector<std::string> header);

    Csv& row(std::vector<std::string> cells);
    std::string str() const;
    std::size_t rows() const { return rows_.size(); }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

struct Artifact {
    std::string file;
    std::string content;
};

/// Writes to a sibling temporary and renames it over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// Canonical serialization used for hashing and for JSON artifacts.
std::string canonical_json(const nlohmann::json& j);

}  // namespace vffc::cli
