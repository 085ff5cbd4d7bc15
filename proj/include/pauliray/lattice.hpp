#pragma once

#include <cstdint>
#include <vector>

#include "pauliray/bigint.hpp"
#include "pauliray/rational.hpp"
#include "pauliray/util.hpp"

namespace pauliray {

using RationalMatrix = std::vector<std::vector<Rational>>;

// k(1) = 4, k(m) = (2^m + 2) * k(m-1): 4, 24, 240, 4320, 146880, ...
std::uint64_t kissing_number(std::uint32_t m);

// 2^(m^2+m+1) * (2^m - 1) * prod_{j=1..m-1} (4^j - 1): 8, 1152, 2580480, ...
BigUint clifford_order(std::uint32_t m);

// Rows span the lattice; rows are linearly independent.
struct LatticeBasis {
    std::uint32_t dimension = 0;
    RationalMatrix rows;
};

// Generator matrices in fixed scalings: D4 (n=4, minimal norm 2, Gram
// determinant 4), E8 (n=8, min 2, det 1), the 16-dimensional Barnes-Wall
// lattice (n=16, min 4, det 256).
LatticeBasis bw_generator(std::uint32_t n);

RationalMatrix gram_matrix(const LatticeBasis& basis);
RationalMatrix matrix_product(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix matrix_inverse(const RationalMatrix& m);
Rational matrix_determinant(RationalMatrix m);

struct MinimalVectorReport {
    Rational min_norm;
    std::uint64_t count = 0;
};

// Exact enumeration (LDL^T bounds, center-outward coefficient scan) of all
// minimal-norm nonzero vectors; +v and -v count separately.  Cap n <= 16.
MinimalVectorReport minimal_vectors(const LatticeBasis& basis);

struct OrthogonalTransform {
    RationalMatrix entries;
};

// Validates B * B^T = Identity exactly.
OrthogonalTransform make_orthogonal(RationalMatrix entries);

// U = M * B * M^{-1}; membership iff U is integer with det = +-1.
bool is_lattice_automorphism(const LatticeBasis& basis, const OrthogonalTransform& b);

}  // namespace pauliray
