#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pauliray/bigint.hpp"
#include "pauliray/ray.hpp"
#include "pauliray/util.hpp"

namespace pauliray {

// Undirected graph over ray ids, adjacency bit-packed by row.
struct OrthoGraph {
    std::uint32_t n = 0;
    std::uint32_t stride = 0;  // 64-bit words per row
    std::vector<std::uint64_t> bits;

    explicit OrthoGraph(std::uint32_t vertex_count = 0) { reset(vertex_count); }

    void reset(std::uint32_t vertex_count) {
        n = vertex_count;
        stride = (n + 63) / 64;
        bits.assign(std::size_t(n) * stride, 0);
    }
    const std::uint64_t* row(std::uint32_t v) const { return bits.data() + std::size_t(v) * stride; }
    std::uint64_t* row(std::uint32_t v) { return bits.data() + std::size_t(v) * stride; }
    bool adjacent(std::uint32_t u, std::uint32_t v) const {
        return (row(u)[v >> 6] >> (v & 63)) & 1u;
    }
    void add_edge(std::uint32_t u, std::uint32_t v) {
        row(u)[v >> 6] |= 1ull << (v & 63);
        row(v)[u >> 6] |= 1ull << (u & 63);
    }
    std::uint32_t degree(std::uint32_t v) const;
    std::uint64_t edge_count() const;
};

// Vertices are catalog ray ids; u ~ v iff overlap2(u, v) = 0.
OrthoGraph build_graph(const RayCatalog& catalog, unsigned threads = 1);

// A complete orthogonal basis: 2^m pairwise-adjacent ray ids, sorted.
struct OrthogonalBasis {
    std::vector<std::uint32_t> ray_ids;

    friend bool operator==(const OrthogonalBasis& a, const OrthogonalBasis& b) {
        return a.ray_ids == b.ray_ids;
    }
};

// All cliques of exactly clique_size vertices, in lexicographic order.
// (In an orthogonality graph of dimension n no clique exceeds n vertices,
// so every n-clique is a complete basis.)
std::vector<OrthogonalBasis> enumerate_bases(const OrthoGraph& g, std::uint32_t clique_size);

// Automorphism group order by individualization-refinement with
// orbit-stabilizer counting.  Generators are returned for internal
// spot-checks; the supported public surface is the order.
struct AutResult {
    BigUint order;
    std::vector<std::vector<std::uint32_t>> generators;
};

// time_budget_seconds = 0 means no budget; a positive budget aborts the
// search with CapabilityError once exceeded.
AutResult analyze_automorphisms(const OrthoGraph& g, double time_budget_seconds = 0.0);

// Vertex cap 5000.
BigUint automorphism_order(const OrthoGraph& g);

// Canonical certificate: equal iff the graphs (with optional vertex colors)
// are isomorphic color-preservingly.  Vertex cap 200.
std::string graph_certificate(const OrthoGraph& g,
                              const std::vector<std::uint32_t>* vertex_colors = nullptr);

// Certificate for a complete edge-labeling (n x n symmetric label matrix,
// zero diagonal); equal iff label-preservingly isomorphic.  Vertex cap 200.
std::string labeled_certificate(std::uint32_t n, const std::vector<std::uint8_t>& labels);

}  // namespace pauliray
