#include "vffc/vff/ansatz.hpp"

#include <map>
#include <string>

#include "vffc/errors.hpp"
#include "vffc/qsim/simulator.hpp"

namespace vffc {

int gamma_count(int n, int layers_w) { return layers_w * (n + n / 2 + (n - 1) / 2); }

VffAnsatz make_ansatz(int n, int l, Topology topology, double tau, int layers_w) {
    if (n < 1 || n > 16) throw ArgumentError("make_ansatz: n out of range");
    if (l < 1) throw ArgumentError("make_ansatz: locality must be at least 1");
    if (layers_w < 0) throw ArgumentError("make_ansatz: negative W depth");
    VffAnsatz a;
    a.n = n;
    a.layers_w = layers_w;
    a.tau = tau;
    a.l = l;
    a.topology = topology;
    a.gammas = RealVector::Zero(gamma_count(n, layers_w));
    a.masks = admissible_masks(n, l, topology);
    a.thetas = RealVector::Zero(static_cast<Eigen::Index>(a.masks.size()));
    return a;
}

Circuit build_w(const VffAnsatz& a) {
    if (a.gammas.size() != gamma_count(a.n, a.layers_w)) throw ArgumentError("build_w: wrong gamma count");
    Circuit c(a.n);
    Eigen::Index k = 0;
    for (int layer = 0; layer < a.layers_w; ++layer) {
        for (int q = 0; q < a.n; ++q) c.add(gates::rz(q, a.gammas(k++)));
        for (int q = 0; q + 1 < a.n; q += 2) c.add(gates::zz(q, q + 1, a.gammas(k++)));
        for (int q = 1; q + 1 < a.n; q += 2) c.add(gates::zz(q, q + 1, a.gammas(k++)));
    }
    return c;
}

Circuit build_d(const VffAnsatz& a) {
    if (a.thetas.size() != static_cast<Eigen::Index>(a.masks.size())) {
        throw ArgumentError("build_d: thetas and masks differ in length");
    }
    Circuit c(a.n);
    for (std::size_t i = 0; i < a.masks.size(); ++i) {
        const Mask m = a.masks[i];
        const double th = a.thetas(static_cast<Eigen::Index>(i));
        if (m >> a.n) throw ArgumentError("build_d: mask exceeds register");
        switch (popcount(m)) {
            case 1:
                c.add(gates::rz(__builtin_ctz(m), th));
                break;
            case 2:
                c.add(gates::zz(__builtin_ctz(m), 31 - __builtin_clz(m), th));
                break;
            default:
                throw UnsupportedError("build_d: only order-1 and order-2 masks are realizable");
        }
    }
    if (a.global_phase != 0.0) c.add(gates::global_phase(a.global_phase));
    return c;
}

Circuit ansatz_circuit(const VffAnsatz& a) {
    const Circuit w = build_w(a);
    Circuit c(a.n);
    c.append(inverse(w));
    c.append(build_d(a));
    c.append(w);
    return c;
}

Unitary ansatz_unitary(const VffAnsatz& a) { return circuit_unitary<double>(ansatz_circuit(a)); }

RealVector parameters(const VffAnsatz& a) {
    RealVector p(a.num_parameters());
    p << a.thetas, a.gammas;
    return p;
}

void set_parameters(VffAnsatz& a, const RealVector& p) {
    if (p.size() != a.num_parameters()) throw ArgumentError("set_parameters: length mismatch");
    a.thetas = p.head(a.thetas.size());
    a.gammas = p.tail(a.gammas.size());
}

VffAnsatz fast_forward(const VffAnsatz& a, int N) {
    if (N < 0) throw ArgumentError("fast_forward: N must be non-negative");
    VffAnsatz out = a;
    out.thetas *= static_cast<double>(N);
    out.global_phase *= static_cast<double>(N);
    out.tau *= static_cast<double>(N);
    return out;
}

nlohmann::json ansatz_to_json(const VffAnsatz& a) {
    nlohmann::json thetas = nlohmann::json::object();
    for (std::size_t i = 0; i < a.masks.size(); ++i) {
        thetas[std::to_string(a.masks[i])] = a.thetas(static_cast<Eigen::Index>(i));
    }
    std::vector<double> gammas(a.gammas.data(), a.gammas.data() + a.gammas.size());
    return {{"n", a.n},         {"layers_w", a.layers_w},         {"gammas", gammas},
            {"thetas", thetas}, {"global_phase", a.global_phase}, {"tau", a.tau},
            {"l", a.l},         {"topology", to_string(a.topology)}};
}

VffAnsatz ansatz_from_json(const nlohmann::json& j) {
    auto need = [&](const char* key) -> const nlohmann::json& {
        if (!j.is_object() || !j.contains(key)) throw ArgumentError(std::string("ansatz: missing field '") + key + "'");
        return j.at(key);
    };
    try {
        VffAnsatz a = make_ansatz(need("n").get<int>(), need("l").get<int>(),
                                  topology_from_string(need("topology").get<std::string>()), need("tau").get<double>(),
                                  j.value("layers_w", 1));
        const auto gammas = need("gammas").get<std::vector<double>>();
        if (static_cast<Eigen::Index>(gammas.size()) != a.gammas.size()) {
            throw ArgumentError("ansatz: expected " + std::to_string(a.gammas.size()) + " gammas");
        }
        for (std::size_t i = 0; i < gammas.size(); ++i) a.gammas(static_cast<Eigen::Index>(i)) = gammas[i];
        std::map<Mask, double> given;
        for (const auto& [key, val] : need("thetas").items()) given[static_cast<Mask>(std::stoul(key))] = val.get<double>();
        if (given.size() != a.masks.size()) throw ArgumentError("ansatz: theta keys do not match the (l, topology) mask set");
        for (std::size_t i = 0; i < a.masks.size(); ++i) {
            auto it = given.find(a.masks[i]);
            if (it == given.end()) throw ArgumentError("ansatz: missing theta for mask " + std::to_string(a.masks[i]));
            a.thetas(static_cast<Eigen::Index>(i)) = it->second;
        }
        a.global_phase = j.value("global_phase", 0.0);
        return a;
    } catch (const nlohmann::json::exception& e) {
        throw ArgumentError(std::string("ansatz: ") + e.what());
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const ArgumentError*>(&e)) throw;
        throw ArgumentError(std::string("ansatz: ") + e.what());
    }
}

}  // namespace vffc
