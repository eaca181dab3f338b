#include "cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace vffc::cli {

std::string SchemaError::diagnostic() const {
    std::ostringstream os;
    os << source_;
    if (line_ > 0) os << ":" << line_;
    os << ": " << what();
    return os.str();
}

ConfigSource ConfigSource::from_text(const std::string& text, const std::string& name) {
    ConfigSource s;
    s.name_ = name;
    s.text_ = text;
    try {
        s.root_ = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const std::size_t upto = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        const int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n'));
        throw SchemaError(std::string("malformed JSON: ") + e.what(), name, line);
    }
    if (!s.root_.is_object()) throw SchemaError("configuration must be a JSON object", name, 1);
    return s;
}

ConfigSource ConfigSource::from_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot read configuration file", path.string(), 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str(), path.string());
}

ConfigSource ConfigSource::empty() {
    ConfigSource s;
    s.name_ = "<defaults>";
    return s;
}

int ConfigSource::line_of(const std::vector<std::string>& path) const {
    std::size_t pos = 0;
    for (const auto& key : path) {
        pos = text_.find("\"" + key + "\"", pos);
        if (pos == std::string::npos) return 0;
    }
    return 1 + static_cast<int>(std::count(text_.begin(), text_.begin() + static_cast<long>(pos), '\n'));
}

void set_path(nlohmann::json& doc, const std::vector<std::string>& path, nlohmann::json value) {
    nlohmann::json* at = &doc;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (!at->contains(path[i]) || !(*at)[path[i]].is_object()) (*at)[path[i]] = nlohmann::json::object();
        at = &(*at)[path[i]];
    }
    (*at)[path.back()] = std::move(value);
}

Node::Node(const ConfigSource& source, const nlohmann::json* value, std::vector<std::string> path,
           nlohmann::json& resolved)
    : source_(&source), value_(value), path_(std::move(path)), resolved_(&resolved) {
    if (value_ != nullptr && !value_->is_object()) {
        throw SchemaError(dotted("") + ": expected an object", source_->name(), source_->line_of(path_));
    }
    if (!resolved_->is_object()) *resolved_ = nlohmann::json::object();
}

std::string Node::dotted(const std::string& key) const {
    std::string s;
    for (const auto& p : path_) s += (s.empty() ? "" : ".") + p;
    if (!key.empty()) s += (s.empty() ? "" : ".") + key;
    return s.empty() ? "<root>" : s;
}

void Node::fail(const std::string& key, const std::string& what) const {
    std::vector<std::string> full = path_;
    if (!key.empty()) full.push_back(key);
    throw SchemaError(dotted(key) + ": " + what, source_->name(), source_->line_of(full));
}

const nlohmann::json* Node::find(const std::string& key) {
    used_.insert(key);
    if (value_ == nullptr) return nullptr;
    const auto it = value_->find(key);
    if (it == value_->end() || it->is_null()) return nullptr;
    return &*it;
}

bool Node::has(const std::string& key) const {
    return value_ != nullptr && value_->contains(key) && !(*value_)[key].is_null();
}

double Node::number(const std::string& key, double fallback) {
    const nlohmann::json* v = find(key);
    double x = fallback;
    if (v != nullptr) {
        if (!v->is_number()) fail(key, "expected a number");
        x = v->get<double>();
        if (!std::isfinite(x)) fail(key, "expected a finite number");
    }
    (*resolved_)[key] = x;
    return x;
}

double Node::positive(const std::string& key, double fallback) {
    const double x = number(key, fallback);
    if (!(x > 0.0)) fail(key, "must be positive");
    return x;
}

double Node::non_negative(const std::string& key, double fallback) {
    const double x = number(key, fallback);
    if (x < 0.0) fail(key, "must be non-negative");
    return x;
}

std::optional<double> Node::optional_number(const std::string& key) {
    const nlohmann::json* v = find(key);
    if (v == nullptr) {
        (*resolved_)[key] = nullptr;
        return std::nullopt;
    }
    return number(key, 0.0);
}

int Node::integer(const std::string& key, int fallback, int lo, int hi) {
    const nlohmann::json* v = find(key);
    long long x = fallback;
    if (v != nullptr) {
        if (!v->is_number_integer()) fail(key, "expected an integer");
        x = v->get<long long>();
    }
    if (x < lo || x > hi) fail(key, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    (*resolved_)[key] = x;
    return static_cast<int>(x);
}

std::uint64_t Node::seed(const std::string& key, std::uint64_t fallback) {
    const nlohmann::json* v = find(key);
    std::uint64_t x = fallback;
    if (v != nullptr) {
        if (!v->is_number_unsigned()) fail(key, "expected a non-negative integer");
        x = v->get<std::uint64_t>();
    }
    (*resolved_)[key] = x;
    return x;
}

std::string Node::choice(const std::string& key, const std::string& fallback,
                         std::initializer_list<const char*> allowed) {
    const nlohmann::json* v = find(key);
    std::string s = fallback;
    if (v != nullptr) {
        if (!v->is_string()) fail(key, "expected a string");
        s = v->get<std::string>();
    }
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return s == a; })) {
        std::string list;
        for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
        fail(key, "'" + s + "' is not one of {" + list + "}");
    }
    (*resolved_)[key] = s;
    return s;
}

std::optional<std::string> Node::optional_string(const std::string& key) {
    const nlohmann::json* v = find(key);
    if (v == nullptr) {
        (*resolved_)[key] = nullptr;
        return std::nullopt;
    }
    if (!v->is_string()) fail(key, "expected a string");
    (*resolved_)[key] = v->get<std::string>();
    return v->get<std::string>();
}

std::vector<double> Node::numbers(const std::string& key, const std::vector<double>& fallback) {
    const nlohmann::json* v = find(key);
    std::vector<double> out = fallback;
    if (v != nullptr) {
        if (!v->is_array()) fail(key, "expected an array of numbers");
        out.clear();
        for (const auto& e : *v) {
            if (!e.is_number() || !std::isfinite(e.get<double>())) fail(key, "expected an array of finite numbers");
            out.push_back(e.get<double>());
        }
    }
    (*resolved_)[key] = out;
    return out;
}

std::vector<std::string> Node::choices(const std::string& key, const std::vector<std::string>& fallback,
                                       std::initializer_list<const char*> allowed) {
    const nlohmann::json* v = find(key);
    std::vector<std::string> out = fallback;
    if (v != nullptr) {
        if (!v->is_array()) fail(key, "expected an array of strings");
        out.clear();
        for (const auto& e : *v) {
            if (!e.is_string()) fail(key, "expected an array of strings");
            out.push_back(e.get<std::string>());
        }
    }
    for (const auto& s : out) {
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return s == a; })) {
            fail(key, "'" + s + "' is not an accepted value");
        }
    }
    (*resolved_)[key] = out;
    return out;
}

Node Node::child(const std::string& key) {
    const nlohmann::json* v = find(key);
    std::vector<std::string> p = path_;
    p.push_back(key);
    if (v != nullptr && !v->is_object()) fail(key, "expected an object");
    return Node(*source_, v, std::move(p), (*resolved_)[key]);
}

void Node::finish() const {
    if (value_ == nullptr) return;
    for (const auto& [k, v] : value_->items()) {
        if (!used_.count(k)) fail(k, "unknown key");
    }
}

}  // namespace vffc::cli
