#pragma once

#include <primedist/graphs.hpp>

#include <span>
#include <vector>

namespace primedist {

/// A 2-connected outerplanar block: its Hamiltonian outer cycle plus chords.
struct OuterplanarEmbedding {
    std::vector<int> outer_cycle;
    std::vector<Edge> chords;

    /// Throws std::invalid_argument on repeated vertices, chords between
    /// cycle-adjacent vertices, unknown endpoints or crossing chords.
    void validate() const;
    /// Additionally checks that the block's edges in `g` are exactly the
    /// outer-cycle edges plus the chords.
    void validate_against(const Graph &g) const;
};

/// Inner faces of a block and the tree formed by faces sharing a chord.
struct WeakDual {
    std::vector<std::vector<int>> faces;          ///< cyclic vertex order per face
    std::vector<std::pair<int, int>> adjacencies;  ///< pairs of face indices
    std::vector<Edge> shared_chords;               ///< chord for each adjacency

    int degree(int face) const;
};

/// Faces are ordered lexicographically by their sorted vertex lists.
WeakDual weak_dual(const OuterplanarEmbedding &emb);

/// Embedding of the block spanned by `block_vertices`, taking the cyclic order
/// from `order_hint` (an outer cycle of a block containing them) restricted to
/// those vertices. Chords are the remaining block edges of `g`.
OuterplanarEmbedding restrict_embedding(const Graph &g, std::span<const int> block_vertices,
                                        std::span<const int> order_hint);

struct LeafCycleResult {
    std::vector<int> cycle;       ///< cyclic order, starting at attachment[0]
    std::vector<int> attachment;  ///< {x} or {x, y} with x y adjacent on the cycle
};

/// A cycle C and attachment vertices whose deletion leaves C minus the
/// attachment as its own component. Requires g connected, at least two cycles
/// and minimum degree 2. `embeddings` supply outer-cycle orders for blocks
/// that are not plain cycles (a superset block's order suffices).
LeafCycleResult find_leaf_cycle(const Graph &g, std::span<const OuterplanarEmbedding> embeddings);

/// Postcondition check: after deleting the attachment, the component holding
/// the rest of the cycle is exactly the rest of the cycle.
bool leaf_cycle_detaches(const Graph &g, const LeafCycleResult &r);

}  // namespace primedist
