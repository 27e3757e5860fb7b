#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "nonortho/codec.hpp"
#include "nonortho/sampler.hpp"

namespace nonortho {

/// Sequence of edge labels (bit pairs), one per step from the root.
struct TreePath {
    std::vector<std::uint8_t> labels;  // packed (p,q) per step

    int length() const { return static_cast<int>(labels.size()); }
    friend bool operator==(const TreePath&, const TreePath&) = default;
};

/// Rooted ordered tree with at most four children per node, children
/// distinguished by bit-pair edge labels. Construction maintains the tree
/// invariants: a new edge must start at an existing node, use a label that
/// is free on that node, and end at a node not yet in the tree, which rules
/// out duplicate labels, multiple parents and cycles.
class OrderedTree {
public:
    using NodeId = std::int64_t;

    struct Edge {
        NodeId from = 0;
        int p = 0;
        int q = 0;
        NodeId to = 0;
    };

    explicit OrderedTree(NodeId root);

    /// Builds a tree from an edge list in any order; edges that can never
    /// attach to the root component are rejected.
    static OrderedTree from_edges(NodeId root, const std::vector<Edge>& edges);

    void add_edge(NodeId from, int p, int q, NodeId to);

    NodeId root() const { return root_; }
    bool contains(NodeId id) const { return children_.count(id) > 0; }
    std::optional<NodeId> child(NodeId id, int packed_label) const;
    std::optional<int> depth_of(NodeId id) const;
    std::vector<NodeId> nodes_at_depth(int depth) const;  // sorted by id
    std::size_t node_count() const { return children_.size(); }
    int max_depth() const { return max_depth_; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Root-to-node path. Throws std::invalid_argument if the node is absent.
    TreePath path_to(NodeId id) const;

private:
    NodeId root_;
    std::unordered_map<NodeId, std::array<std::optional<NodeId>, 4>> children_;
    std::unordered_map<NodeId, std::pair<NodeId, std::uint8_t>> parent_;
    std::unordered_map<NodeId, int> depth_;
    std::vector<Edge> edges_;
    int max_depth_ = 0;
};

/// A path of length n is a codeword: pairs[alpha] = label at step alpha.
Codeword path_to_codeword(const TreePath& path);
TreePath codeword_to_path(const Codeword& cw);

struct ClassicalFindResult {
    TreePath path;
    std::uint64_t examined = 0;  // depth-n nodes visited, the classical query count
};

/// Exhaustive baseline: enumerates depth-n nodes in depth-first label order
/// until the target is found. Throws std::invalid_argument when the target
/// is absent at that depth.
ClassicalFindResult classical_find(const OrderedTree& tree, OrderedTree::NodeId target, int depth);

struct QuantumFindResult {
    TreePath path;
    int oracle_queries = 0;  // always 1
    int measurement_runs = 0;
};

/// Encodes the root-to-target path, runs one search step on the list,
/// decodes the output by repeated measurement and verifies the decoded path
/// reaches the target. The classical path lookup only parameterizes the
/// oracle and is excluded from the reported query count.
QuantumFindResult quantum_find(const OrderedTree& tree, OrderedTree::NodeId target, int depth,
                               RandomSource& rng);

/// Seeded random tree of exactly the given depth: every node keeps each of
/// the four labels with probability child_prob, and one guaranteed chain of
/// children (random labels) reaches the requested depth. Node ids are
/// assigned sequentially from the root's 0.
OrderedTree random_tree(int depth, double child_prob, RandomSource& rng);

}  // namespace nonortho
