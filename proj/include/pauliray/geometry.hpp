#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pauliray/bigint.hpp"
#include "pauliray/graph.hpp"
#include "pauliray/rational.hpp"
#include "pauliray/ray.hpp"

namespace pauliray {

// Squared Bengtsson distance between two complete orthonormal bases:
//   D^2 = 1 - (1/(d-1)) * sum_{i,j} (|<a_i|b_j>|^2 - 1/d)^2
// Exact rational; 0 iff the bases coincide as sets, 1 iff mutually unbiased.
Rational bengtsson_d2(const OrthogonalBasis& a, const OrthogonalBasis& b,
                      const RayCatalog& catalog);

// D^2 value -> number of unordered basis pairs at that distance.
using DistanceHistogram = std::map<Rational, std::uint64_t>;

DistanceHistogram distance_histogram(const std::vector<std::uint32_t>& basis_ids,
                                     const std::vector<OrthogonalBasis>& bases,
                                     const RayCatalog& catalog);

// Total histogram count must equal basis_count*(basis_count-1)/2.
bool pair_identity(const DistanceHistogram& hist, std::uint64_t basis_count);

// Diagram verification for the two known critical proof shapes.
//  18-9: the nine bases, joined at D^2 = 7/12, form the 3x3 rook's graph
//  (adjacent bases share exactly one ray, disjoint ones sit at 5/6, every
//  ray lies in exactly two bases).
//  36-11: a unique reference base shares four rays with four bases and none
//  with the other six; every other sharing pair has exactly two rays in
//  common; share counts 4/2/0 pair with D^2 = 3/7, 9/14, 6/7.
struct StructureReport {
    std::string proof_class;  // "18-9" or "36-11"
    bool rook_isomorphic = false;
    BigUint base_graph_aut;
    bool rays_in_two_bases = false;
    bool sharing_matches_distance = false;
    bool reference_base_found = false;
    std::uint32_t reference_base_id = 0;
    bool adjacent_share_two = false;
    bool passed = false;
};

// Precondition: the proof signature is 18-9 (two qubits) or 36-11 (three).
StructureReport structure_signature(const std::vector<std::uint32_t>& basis_ids,
                                    const std::vector<OrthogonalBasis>& bases,
                                    const RayCatalog& catalog);

}  // namespace pauliray
