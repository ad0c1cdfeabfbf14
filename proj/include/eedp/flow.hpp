// Small unit-augmenting max-flow used by the Menger primitives.
#pragma once

#include <climits>
#include <vector>

namespace eedp {

// Arcs are explored in insertion order, so callers that insert graph edges by
// ascending id get lowest-edge-id-first augmenting paths.
class FlowNetwork {
public:
    explicit FlowNetwork(int n) : adj_(n) {}

    int add_node() {
        adj_.emplace_back();
        return static_cast<int>(adj_.size()) - 1;
    }
    // Returns the forward arc index; its residual twin is index ^ 1.
    int add_arc(int u, int v, int cap);
    int max_flow(int s, int t, int limit = INT_MAX);
    int flow(int arc) const { return arcs_[arc ^ 1].cap; }
    int residual(int arc) const { return arcs_[arc].cap; }
    int head(int arc) const { return arcs_[arc].to; }
    int node_count() const { return static_cast<int>(adj_.size()); }
    const std::vector<int>& arcs_from(int u) const { return adj_[u]; }
    bool is_forward(int arc) const { return (arc & 1) == 0; }
    // Nodes that can still reach t in the residual network.
    std::vector<char> reaches(int t) const;

private:
    struct Arc {
        int to;
        int cap;
    };
    bool augment(int s, int t);
    std::vector<std::vector<int>> adj_;
    std::vector<Arc> arcs_;
};

}  // namespace eedp
