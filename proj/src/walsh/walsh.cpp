#include "vffc/walsh/walsh.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vffc/errors.hpp"

namespace vffc {

const char* to_string(Topology t) { return t == Topology::Ring ? "ring" : "linear"; }

Topology topology_from_string(const std::string& s) {
    if (s == "linear" || s == "Linear") return Topology::Linear;
    if (s == "ring" || s == "Ring") return Topology::Ring;
    throw ArgumentError("unknown topology '" + s + "' (expected linear or ring)");
}

DiagonalSpec walsh_transform(const RealVector& values) {
    const auto size = static_cast<std::uint64_t>(values.size());
    if (size < 2 || (size & (size - 1)) != 0) {
        throw ArgumentError("walsh_transform: length must be a power of two >= 2");
    }
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values(i))) throw DomainError("walsh_transform: non-finite input");
    }
    RealVector a = values;
    for (std::uint64_t h = 1; h < size; h <<= 1) {
        for (std::uint64_t i = 0; i < size; i += 2 * h) {
            for (std::uint64_t j = i; j < i + h; ++j) {
                const double u = a(static_cast<Eigen::Index>(j));
                const double v = a(static_cast<Eigen::Index>(j + h));
                a(static_cast<Eigen::Index>(j)) = u + v;
                a(static_cast<Eigen::Index>(j + h)) = u - v;
            }
        }
    }
    DiagonalSpec spec;
    spec.n = ceil_log2(size);
    spec.terms.reserve(size);
    const double scale = 1.0 / static_cast<double>(size);
    for (std::uint64_t j = 0; j < size; ++j) {
        spec.terms.push_back({static_cast<Mask>(j), a(static_cast<Eigen::Index>(j)) * scale});
    }
    return spec;
}

RealVector inverse_walsh(const DiagonalSpec& spec) {
    if (spec.n < 1 || spec.n > 24) throw ArgumentError("inverse_walsh: n out of range");
    const std::uint64_t size = std::uint64_t{1} << spec.n;
    RealVector a = RealVector::Zero(static_cast<Eigen::Index>(size));
    for (const auto& t : spec.terms) {
        if (t.mask >= size) throw ArgumentError("inverse_walsh: mask exceeds register");
        a(static_cast<Eigen::Index>(t.mask)) += t.coeff;
    }
    for (std::uint64_t h = 1; h < size; h <<= 1) {
        for (std::uint64_t i = 0; i < size; i += 2 * h) {
            for (std::uint64_t j = i; j < i + h; ++j) {
                const double u = a(static_cast<Eigen::Index>(j));
                const double v = a(static_cast<Eigen::Index>(j + h));
                a(static_cast<Eigen::Index>(j)) = u + v;
                a(static_cast<Eigen::Index>(j + h)) = u - v;
            }
        }
    }
    return a;
}

int term_order(Mask mask) { return popcount(mask); }

int term_locality(Mask mask, int n, Topology topology) {
    const int order = term_order(mask);
    if (order == 0) return 0;
    if (order == 1) return 1;
    if (order > 2) {
        throw UnsupportedError("term_locality: order " + std::to_string(order) + " terms are not supported");
    }
    const int i = __builtin_ctz(mask);
    const int j = 31 - __builtin_clz(mask);
    if (j >= n) throw ArgumentError("term_locality: mask exceeds register");
    const int d = j - i;
    return (topology == Topology::Ring ? std::min(d, n - d) : d) + 1;
}

DiagonalSpec truncate(const DiagonalSpec& spec, int max_order, int max_locality, Topology topology) {
    DiagonalSpec out;
    out.n = spec.n;
    for (const auto& t : spec.terms) {
        const int order = term_order(t.mask);
        if (order > max_order) continue;
        if (term_locality(t.mask, spec.n, topology) > max_locality) continue;
        out.terms.push_back(t);
    }
    return out;
}

std::vector<Mask> admissible_masks(int n, int max_locality, Topology topology) {
    if (n < 1 || n > 24) throw ArgumentError("admissible_masks: n out of range");
    std::vector<Mask> masks;
    for (int i = 0; i < n; ++i) masks.push_back(Mask{1} << i);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Mask m = (Mask{1} << i) | (Mask{1} << j);
            if (term_locality(m, n, topology) <= max_locality) masks.push_back(m);
        }
    }
    std::sort(masks.begin(), masks.end());
    return masks;
}

Circuit diagonal_circuit(const DiagonalSpec& spec, double tau) {
    Circuit c(spec.n);
    double phase = 0.0;
    bool any = false;
    for (const auto& t : spec.terms) {
        const int order = term_order(t.mask);
        if (order > 2) {
            throw UnsupportedError("diagonal_circuit: order " + std::to_string(order) + " term (mask " +
                                   std::to_string(t.mask) + ") has no native gate");
        }
        if (t.mask >> spec.n) throw ArgumentError("diagonal_circuit: mask exceeds register");
        any = true;
        const double a = tau * t.coeff;
        phase -= a;
        if (order == 1) {
            c.add(gates::rz(__builtin_ctz(t.mask), 2.0 * a));
        } else if (order == 2) {
            c.add(gates::zz(__builtin_ctz(t.mask), 31 - __builtin_clz(t.mask), 2.0 * a));
        }
    }
    if (any) c.add(gates::global_phase(phase));
    return c;
}

nlohmann::json diagonal_spec_to_json(const DiagonalSpec& spec) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : spec.terms) terms.push_back({{"mask", t.mask}, {"coeff", t.coeff}});
    return {{"n", spec.n}, {"terms", terms}};
}

DiagonalSpec diagonal_spec_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer()) {
        throw ArgumentError("diagonal spec: missing integer field 'n'");
    }
    if (!j.contains("terms") || !j.at("terms").is_array()) {
        throw ArgumentError("diagonal spec: missing array field 'terms'");
    }
    DiagonalSpec spec;
    spec.n = j.at("n").get<int>();
    if (spec.n < 1 || spec.n > 24) throw ArgumentError("diagonal spec: n out of range");
    std::size_t idx = 0;
    for (const auto& t : j.at("terms")) {
        if (!t.is_object() || !t.contains("mask") || !t.at("mask").is_number_unsigned() || !t.contains("coeff") ||
            !t.at("coeff").is_number()) {
            throw ArgumentError("diagonal spec: terms[" + std::to_string(idx) + "] needs unsigned 'mask' and numeric 'coeff'");
        }
        const auto mask = t.at("mask").get<std::uint64_t>();
        if (mask >> spec.n) throw ArgumentError("diagonal spec: terms[" + std::to_string(idx) + "].mask exceeds n");
        spec.terms.push_back({static_cast<Mask>(mask), t.at("coeff").get<double>()});
        ++idx;
    }
    return spec;
}

}  // namespace vffc
