#include "nonortho/treesearch.hpp"

#include <algorithm>
#include <stdexcept>

#include "nonortho/grover.hpp"

namespace nonortho {

OrderedTree::OrderedTree(NodeId root) : root_(root) {
    children_[root] = {};
    depth_[root] = 0;
}

OrderedTree OrderedTree::from_edges(NodeId root, const std::vector<Edge>& edges) {
    OrderedTree tree(root);
    std::vector<Edge> pending = edges;
    bool progress = true;
    while (!pending.empty() && progress) {
        progress = false;
        std::vector<Edge> next;
        for (const Edge& e : pending) {
            if (tree.contains(e.from)) {
                tree.add_edge(e.from, e.p, e.q, e.to);
                progress = true;
            } else {
                next.push_back(e);
            }
        }
        pending = std::move(next);
    }
    if (!pending.empty()) {
        throw std::invalid_argument("edge list contains edges unreachable from the root");
    }
    return tree;
}

void OrderedTree::add_edge(NodeId from, int p, int q, NodeId to) {
    if ((p != 0 && p != 1) || (q != 0 && q != 1)) {
        throw std::invalid_argument("edge label bits must be 0 or 1");
    }
    if (!contains(from)) {
        throw std::invalid_argument("edge starts at a node not in the tree");
    }
    if (contains(to)) {
        // covers multiple parents, cycles and duplicate node ids alike
        throw std::invalid_argument("edge ends at a node already in the tree");
    }
    const int label = pack_pair(p, q);
    auto& slots = children_[from];
    if (slots[static_cast<std::size_t>(label)].has_value()) {
        throw std::invalid_argument("duplicate edge label on one node");
    }
    slots[static_cast<std::size_t>(label)] = to;
    children_[to] = {};
    parent_[to] = {from, static_cast<std::uint8_t>(label)};
    const int d = depth_.at(from) + 1;
    depth_[to] = d;
    max_depth_ = std::max(max_depth_, d);
    edges_.push_back(Edge{from, p, q, to});
}

std::optional<OrderedTree::NodeId> OrderedTree::child(NodeId id, int packed_label) const {
    auto it = children_.find(id);
    if (it == children_.end() || packed_label < 0 || packed_label > 3) {
        return std::nullopt;
    }
    return it->second[static_cast<std::size_t>(packed_label)];
}

std::optional<int> OrderedTree::depth_of(NodeId id) const {
    auto it = depth_.find(id);
    if (it == depth_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::vector<OrderedTree::NodeId> OrderedTree::nodes_at_depth(int depth) const {
    std::vector<NodeId> out;
    for (const auto& [id, d] : depth_) {
        if (d == depth) {
            out.push_back(id);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

TreePath OrderedTree::path_to(NodeId id) const {
    if (!contains(id)) {
        throw std::invalid_argument("node is not in the tree");
    }
    std::vector<std::uint8_t> labels;
    NodeId cur = id;
    while (cur != root_) {
        const auto& [par, label] = parent_.at(cur);
        labels.push_back(label);
        cur = par;
    }
    std::reverse(labels.begin(), labels.end());
    return TreePath{std::move(labels)};
}

Codeword path_to_codeword(const TreePath& path) {
    if (path.labels.empty()) {
        throw std::invalid_argument("cannot encode an empty path");
    }
    return Codeword(path.length(), path.labels);
}

TreePath codeword_to_path(const Codeword& cw) {
    std::vector<std::uint8_t> labels(static_cast<std::size_t>(cw.n()));
    for (int alpha = 0; alpha < cw.n(); ++alpha) {
        labels[static_cast<std::size_t>(alpha)] = static_cast<std::uint8_t>(cw.pair_value(alpha));
    }
    return TreePath{std::move(labels)};
}

namespace {

bool dfs_depth_n(const OrderedTree& tree, OrderedTree::NodeId node, OrderedTree::NodeId target,
                 int remaining, std::vector<std::uint8_t>& labels, std::uint64_t& examined) {
    if (remaining == 0) {
        ++examined;
        return node == target;
    }
    for (int label = 0; label < 4; ++label) {
        const auto next = tree.child(node, label);
        if (!next.has_value()) {
            continue;
        }
        labels.push_back(static_cast<std::uint8_t>(label));
        if (dfs_depth_n(tree, *next, target, remaining - 1, labels, examined)) {
            return true;
        }
        labels.pop_back();
    }
    return false;
}

}  // namespace

ClassicalFindResult classical_find(const OrderedTree& tree, OrderedTree::NodeId target, int depth) {
    if (depth < 1) {
        throw std::invalid_argument("classical_find requires depth >= 1");
    }
    std::vector<std::uint8_t> labels;
    labels.reserve(static_cast<std::size_t>(depth));
    std::uint64_t examined = 0;
    if (!dfs_depth_n(tree, tree.root(), target, depth, labels, examined)) {
        throw std::invalid_argument("target is not present at the given depth");
    }
    return ClassicalFindResult{TreePath{std::move(labels)}, examined};
}

QuantumFindResult quantum_find(const OrderedTree& tree, OrderedTree::NodeId target, int depth,
                               RandomSource& rng) {
    const auto d = tree.depth_of(target);
    if (!d.has_value()) {
        throw std::invalid_argument("target is not in the tree");
    }
    if (*d != depth) {
        throw std::invalid_argument("target is not at the requested depth");
    }
    if (depth < 1) {
        throw std::invalid_argument("quantum_find requires depth >= 1");
    }

    // the unique root-to-target path parameterizes the oracle; this lookup
    // is bookkeeping for the simulator, not a counted query
    const Codeword s = path_to_codeword(tree.path_to(target));

    const StateVector out = single_shot_search(depth, s);
    const DecoderState dec = collect_until_complete(out, depth, rng, default_max_runs(depth));
    if (dec.conflict || !dec.complete()) {
        throw std::logic_error("decoding a search output state must not fail");
    }
    const TreePath path = codeword_to_path(encode(reconstruct(dec)));

    OrderedTree::NodeId node = tree.root();
    for (std::uint8_t label : path.labels) {
        const auto next = tree.child(node, label);
        if (!next.has_value()) {
            throw std::logic_error("decoded path leaves the tree");
        }
        node = *next;
    }
    if (node != target) {
        throw std::logic_error("decoded path does not reach the target");
    }
    return QuantumFindResult{path, 1, dec.runs};
}

OrderedTree random_tree(int depth, double child_prob, RandomSource& rng) {
    if (depth < 1) {
        throw std::invalid_argument("random_tree requires depth >= 1");
    }
    if (child_prob < 0.0 || child_prob > 1.0) {
        throw std::invalid_argument("child probability must lie in [0, 1]");
    }
    OrderedTree tree(0);
    OrderedTree::NodeId next_id = 1;
    std::vector<OrderedTree::NodeId> level{0};
    OrderedTree::NodeId chain = 0;  // node guaranteed to reach the full depth
    for (int d = 0; d < depth; ++d) {
        const int chain_label = rng.next_below(4);
        OrderedTree::NodeId next_chain = -1;
        std::vector<OrderedTree::NodeId> next_level;
        for (OrderedTree::NodeId node : level) {
            for (int label = 0; label < 4; ++label) {
                const bool forced = (node == chain && label == chain_label);
                if (!forced && rng.next_unit() >= child_prob) {
                    continue;
                }
                const OrderedTree::NodeId id = next_id++;
                tree.add_edge(node, pair_p(label), pair_q(label), id);
                next_level.push_back(id);
                if (forced) {
                    next_chain = id;
                }
            }
        }
        level = std::move(next_level);
        chain = next_chain;
    }
    return tree;
}

}  // namespace nonortho
