#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pauliray/util.hpp"

namespace pauliray {

// A signed m-qubit Pauli operator in symplectic form: i^s * X^x * Z^z,
// where X^x and Z^z act tensor-factor-wise.  Qubit 1 is the MOST significant
// bit of x and z (and of computational-basis indices), so letter strings read
// left to right match bit order top to bottom.
struct PauliOperator {
    unsigned m = 0;       // qubit count
    std::uint32_t x = 0;  // X-part exponents
    std::uint32_t z = 0;  // Z-part exponents
    unsigned s = 0;       // phase exponent mod 4

    friend bool operator==(const PauliOperator& a, const PauliOperator& b) {
        return a.m == b.m && a.x == b.x && a.z == b.z && a.s == b.s;
    }
    friend bool operator!=(const PauliOperator& a, const PauliOperator& b) { return !(a == b); }
};

PauliOperator pauli_identity(unsigned m);

// Parses "[+|-][i][IXYZ]{m}", e.g. "XZ", "-YY", "+iZII".  Y contributes a
// factor i (Y = i*XZ), so plain letter strings are Hermitian.
PauliOperator pauli_from_letters(std::string_view text);

// Inverse of pauli_from_letters' format: sign prefix then letters, e.g. "+ZX", "-YY", "-iXI".
std::string to_string(const PauliOperator& op);

// The symplectic key (x << m) | z; identifies an operator up to phase.
inline std::uint32_t pauli_key(const PauliOperator& op) { return (op.x << op.m) | op.z; }

PauliOperator pauli_product(const PauliOperator& a, const PauliOperator& b);
bool commutes(const PauliOperator& a, const PauliOperator& b);
bool is_hermitian(const PauliOperator& a);

// All 2^k subset products of `generators` indexed by subset mask
// (result[0] = identity).  Generators need not commute; products are taken
// in ascending bit order.
std::vector<PauliOperator> subset_products(const std::vector<PauliOperator>& generators);

// A maximal commuting set: a Lagrangian subspace of GF(2)^{2m} with a
// canonical generator chain and the phases of all nontrivial subset products.
struct MaximalCommutingSet {
    unsigned m = 0;
    std::vector<PauliOperator> generators;  // canonical chain, Hermitian, size m
    std::vector<PauliOperator> members;     // the 2^m - 1 nontrivial products, sorted by key
};

// L = prod_{i=1..m} (1 + 2^i).  Supported while the result fits 64 bits.
std::uint64_t mcs_count(unsigned m);

// All maximal commuting sets of the m-qubit Pauli group, canonically ordered
// (lexicographic on sorted member keys).  Supported for 1 <= m <= 5.
std::vector<MaximalCommutingSet> enumerate_mcs(unsigned m);

// Builds the maximal commuting set spanned by the given mutually commuting
// Hermitian operators; their symplectic vectors must span a Lagrangian
// (dimension m) subspace.
MaximalCommutingSet mcs_from_operators(const std::vector<PauliOperator>& ops);

// An ordered set of mutually commuting Hermitian operators whose product is
// expected to be +1 or -1 times the identity.
struct MagicContext {
    std::vector<PauliOperator> operators;
    int expected_sign = +1;
};

struct MerminSquare {
    std::array<std::array<PauliOperator, 3>, 3> grid;  // rows of the square
    std::vector<MagicContext> contexts;                // 3 rows then 3 columns
};

struct MerminPentagram {
    std::vector<PauliOperator> operators;  // Z1 X1 Z2 X2 Z3 X3 ZZZ ZXX XZX XXZ
    std::vector<MagicContext> contexts;    // 4 columns then the bottom row
};

MerminSquare mermin_square();
MerminPentagram mermin_pentagram();

// For each context, the sign w in {+1,-1} with product = w * identity.
// Throws PreconditionError on a non-commuting or non-Hermitian context and
// StructureError if a product is not plus or minus the identity.
std::vector<int> verify_magic(const std::vector<MagicContext>& contexts);

}  // namespace pauliray
