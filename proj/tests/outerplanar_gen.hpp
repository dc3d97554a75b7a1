#pragma once

// Random outerplanar graphs with a known embedding, built by gluing faces.

#include <primedist/outerplanar.hpp>

#include <random>
#include <vector>

namespace testgen {

struct OuterplanarCase {
    primedist::Graph graph;
    std::vector<primedist::OuterplanarEmbedding> blocks;
    int min_face = 0;
};

/// A block grown from one face by repeatedly replacing an outer edge u-v with
/// a path u, new..., v, turning u-v into a chord. Face lengths are in
/// [min_face, min_face + 3], so the block's girth is at least min_face.
inline primedist::OuterplanarEmbedding grow_block(int &next_vertex, int attach, int faces, int min_face,
                                                  std::mt19937 &rng, std::vector<primedist::Edge> &edges)
{
    std::uniform_int_distribution<int> extra(0, 3);
    primedist::OuterplanarEmbedding emb;
    const int len = min_face + extra(rng);
    emb.outer_cycle.push_back(attach);
    for (int i = 1; i < len; ++i)
        emb.outer_cycle.push_back(next_vertex++);
    for (int f = 1; f < faces; ++f) {
        const int n = static_cast<int>(emb.outer_cycle.size());
        const int i = std::uniform_int_distribution<int>(0, n - 1)(rng);
        const int u = emb.outer_cycle[i], v = emb.outer_cycle[(i + 1) % n];
        emb.chords.push_back(primedist::make_edge(u, v));
        std::vector<int> path;
        const int flen = min_face + extra(rng);
        for (int j = 0; j < flen - 2; ++j)
            path.push_back(next_vertex++);
        emb.outer_cycle.insert(emb.outer_cycle.begin() + i + 1, path.begin(), path.end());
    }
    const int n = static_cast<int>(emb.outer_cycle.size());
    for (int i = 0; i < n; ++i)
        edges.push_back(primedist::make_edge(emb.outer_cycle[i], emb.outer_cycle[(i + 1) % n]));
    for (auto c : emb.chords)
        edges.push_back(c);
    return emb;
}

/// `blocks` blocks glued at cut vertices; roughly one block in five is a
/// bridge, the rest have one to three faces.
inline OuterplanarCase random_outerplanar(int blocks, int min_face, std::mt19937 &rng)
{
    std::vector<primedist::Edge> edges;
    std::vector<primedist::OuterplanarEmbedding> embs;
    int next_vertex = 1;
    for (int b = 0; b < blocks; ++b) {
        const int attach = std::uniform_int_distribution<int>(0, next_vertex - 1)(rng);
        if (b > 0 && std::uniform_int_distribution<int>(0, 4)(rng) == 0) {
            edges.push_back(primedist::make_edge(attach, next_vertex++));
            continue;
        }
        const int faces = std::uniform_int_distribution<int>(1, 3)(rng);
        embs.push_back(grow_block(next_vertex, attach, faces, min_face, rng, edges));
    }
    OuterplanarCase out;
    out.graph = primedist::Graph(next_vertex, edges);
    out.blocks = std::move(embs);
    out.min_face = min_face;
    return out;
}

}  // namespace testgen
