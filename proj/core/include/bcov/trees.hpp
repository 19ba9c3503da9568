#pragma once

#include <vector>

namespace bcov {

// Isomorphism class of a leaf-labeled tree with internal vertices of valence
// >= 3. Vertices 0..n_leaves-1 are the labeled leaves; internal vertices
// follow. For such trees the automorphism group fixing the leaves is trivial
// (asserted at construction via the valence condition).
struct Tree {
    int n_leaves = 0;
    int n_internal = 0;
    std::vector<std::pair<int, int>> edges;

    int vertex_count() const { return n_leaves + n_internal; }
    std::vector<std::vector<int>> adjacency() const;
    void assert_valid() const;
};

// One representative per leaf-labeled isomorphism class, generated by
// inserting leaves one at a time (attach to an internal vertex or subdivide an
// edge). Counts follow the Schroeder sequence 1, 4, 26, 236, ...
std::vector<Tree> enumerate_trees(int n_leaves);

}  // namespace bcov
