#include "nonortho/serialize.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace nonortho {

using nlohmann::json;

namespace {

json amplitude_entries(const StateVector& v) {
    json entries = json::array();
    for (int i = 0; i < v.dim(); ++i) {
        const Complex a = v[i];
        if (a.real() == 0.0 && a.imag() == 0.0) {
            continue;
        }
        const BasisIndex b = basis_from_flat(i);
        entries.push_back({{"alpha", b.alpha},
                           {"p", b.p},
                           {"q", b.q},
                           {"re", a.real()},
                           {"im", a.imag()}});
    }
    return entries;
}

int read_n(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
        throw std::invalid_argument("expected an object with an integer \"n\"");
    }
    const int n = j["n"].get<int>();
    if (n < 1) {
        throw std::invalid_argument("\"n\" must be positive");
    }
    return n;
}

BasisIndex read_basis(const json& entry, int n) {
    const int alpha = entry.at("alpha").get<int>();
    const int p = entry.at("p").get<int>();
    const int q = entry.at("q").get<int>();
    if (alpha < 0 || alpha >= n || (p != 0 && p != 1) || (q != 0 && q != 1)) {
        throw std::invalid_argument("amplitude entry indexes outside the state space");
    }
    return BasisIndex{alpha, p, q};
}

}  // namespace

json state_to_json(const StateVector& v) {
    return json{{"n", v.n()}, {"amplitudes", amplitude_entries(v)}};
}

json codeword_to_json(const Codeword& cw) {
    return state_to_json(codeword_state(cw));
}

Codeword codeword_from_json(const json& j) {
    const int n = read_n(j);
    const json& entries = j.at("amplitudes");
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("a codeword has exactly n amplitude entries");
    }
    const double expected = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<std::uint8_t> packed(static_cast<std::size_t>(n), 255);
    for (const json& entry : entries) {
        const BasisIndex b = read_basis(entry, n);
        const double re = entry.at("re").get<double>();
        const double im = entry.at("im").get<double>();
        if (std::abs(re - expected) > 1e-9 || std::abs(im) > 1e-9) {
            throw std::invalid_argument("codeword amplitudes must equal 1/sqrt(n)");
        }
        if (packed[static_cast<std::size_t>(b.alpha)] != 255) {
            throw std::invalid_argument("codeword has two entries in one subspace");
        }
        packed[static_cast<std::size_t>(b.alpha)] = static_cast<std::uint8_t>(pack_pair(b.p, b.q));
    }
    return Codeword(n, std::move(packed));
}

StateVector state_from_json(const json& j) {
    const int n = read_n(j);
    const json& entries = j.at("amplitudes");
    if (!entries.is_array()) {
        throw std::invalid_argument("\"amplitudes\" must be an array");
    }
    StateVector v(n);
    std::vector<bool> seen(static_cast<std::size_t>(4 * n), false);
    for (const json& entry : entries) {
        const BasisIndex b = read_basis(entry, n);
        const int flat = flat_index(b);
        if (seen[static_cast<std::size_t>(flat)]) {
            throw std::invalid_argument("duplicate amplitude entry");
        }
        seen[static_cast<std::size_t>(flat)] = true;
        v[flat] = Complex{entry.at("re").get<double>(), entry.at("im").get<double>()};
    }
    if (std::abs(v.norm() - 1.0) > kNormTol) {
        throw std::invalid_argument("state is not normalized");
    }
    return v;
}

json tree_to_json(const OrderedTree& tree) {
    json edges = json::array();
    for (const auto& e : tree.edges()) {
        edges.push_back({{"from", e.from}, {"label", json::array({e.p, e.q})}, {"to", e.to}});
    }
    return json{{"root", tree.root()}, {"edges", edges}};
}

OrderedTree tree_from_json(const json& j) {
    if (!j.is_object() || !j.contains("root") || !j.contains("edges")) {
        throw std::invalid_argument("tree JSON needs \"root\" and \"edges\"");
    }
    const auto root = j["root"].get<OrderedTree::NodeId>();
    std::vector<OrderedTree::Edge> edges;
    for (const json& entry : j["edges"]) {
        const json& label = entry.at("label");
        if (!label.is_array() || label.size() != 2) {
            throw std::invalid_argument("edge label must be a [p, q] pair");
        }
        edges.push_back(OrderedTree::Edge{entry.at("from").get<OrderedTree::NodeId>(),
                                          label[0].get<int>(), label[1].get<int>(),
                                          entry.at("to").get<OrderedTree::NodeId>()});
    }
    return OrderedTree::from_edges(root, edges);
}

json search_result_json(int n, const BitString& target, double fidelity,
                        std::string_view oracle_variant, int queries) {
    return json{{"n", n},
                {"target", target.str()},
                {"fidelity", fidelity},
                {"oracle_variant", oracle_variant},
                {"queries", queries}};
}

json space_to_json(const SpaceReport& r) {
    return json{{"strings", r.strings},
                {"qubits_standard", r.qubits_standard},
                {"qubits_nonorthogonal", r.qubits_nonorthogonal},
                {"dimension", r.dimension}};
}

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

}  // namespace nonortho
