#include "bcov/trees.hpp"

#include "bcov/errors.hpp"

namespace bcov {

std::vector<std::vector<int>> Tree::adjacency() const {
    std::vector<std::vector<int>> adj(vertex_count());
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

void Tree::assert_valid() const {
    auto adj = adjacency();
    if (static_cast<int>(edges.size()) != vertex_count() - 1)
        throw ShapeMismatch("tree edge count");
    for (int v = 0; v < n_leaves; ++v)
        if (adj[v].size() != 1) throw ShapeMismatch("leaf valence != 1");
    for (int v = n_leaves; v < vertex_count(); ++v)
        if (adj[v].size() < 3) throw ShapeMismatch("internal valence < 3");
}

std::vector<Tree> enumerate_trees(int n_leaves) {
    if (n_leaves < 3) throw TooFewLegs("trees need at least 3 leaves");
    // base: star on leaves 0,1,2 with one internal vertex
    std::vector<Tree> cur;
    {
        Tree t;
        t.n_leaves = 3;
        t.n_internal = 1;
        t.edges = {{0, 3}, {1, 3}, {2, 3}};
        cur.push_back(t);
    }
    for (int n = 4; n <= n_leaves; ++n) {
        std::vector<Tree> next;
        for (const Tree& t : cur) {
            // renumber: leaves 0..n-1, internals shift up by one
            auto lift = [&](int v) { return v < n - 1 ? v : v + 1; };
            // (a) attach the new leaf to each internal vertex
            for (int v = n - 1; v < t.vertex_count(); ++v) {
                Tree s;
                s.n_leaves = n;
                s.n_internal = t.n_internal;
                for (auto [a, b] : t.edges) s.edges.push_back({lift(a), lift(b)});
                s.edges.push_back({n - 1, lift(v)});
                next.push_back(std::move(s));
            }
            // (b) subdivide each edge with a new trivalent vertex
            for (size_t e = 0; e < t.edges.size(); ++e) {
                Tree s;
                s.n_leaves = n;
                s.n_internal = t.n_internal + 1;
                int w = n + t.n_internal;  // the new internal vertex id
                for (size_t f = 0; f < t.edges.size(); ++f) {
                    auto [a, b] = t.edges[f];
                    if (f == e) {
                        s.edges.push_back({lift(a), w});
                        s.edges.push_back({w, lift(b)});
                    } else {
                        s.edges.push_back({lift(a), lift(b)});
                    }
                }
                s.edges.push_back({n - 1, w});
                next.push_back(std::move(s));
            }
        }
        cur = std::move(next);
    }
    for (auto& t : cur) t.assert_valid();
    return cur;
}

}  // namespace bcov
