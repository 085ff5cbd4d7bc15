#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pauliray/geometry.hpp"
#include "pauliray/graph.hpp"
#include "pauliray/pauli.hpp"
#include "pauliray/ray.hpp"

namespace pauliray {

// Ray x basis membership over GF(2), bit-packed by column.
struct IncidenceMatrix {
    std::uint32_t ray_count = 0;
    std::uint32_t basis_count = 0;
    std::uint32_t stride = 0;  // 64-bit words per column
    std::vector<std::uint64_t> bits;

    const std::uint64_t* col(std::uint32_t b) const {
        return bits.data() + std::size_t(b) * stride;
    }
    bool test(std::uint32_t r, std::uint32_t b) const {
        return (col(b)[r >> 6] >> (r & 63)) & 1u;
    }
};

// Every basis must have exactly as many rays as the space has dimensions.
IncidenceMatrix incidence(const RayCatalog& catalog, const std::vector<OrthogonalBasis>& bases);

// Basis of the GF(2) null space of the incidence matrix acting on
// column-indicator vectors; each element is a subset mask over columns.
// Supports up to 64 columns.
struct GF2Kernel {
    std::uint32_t dimension = 0;
    std::vector<std::uint64_t> combos;
};

GF2Kernel parity_kernel(const IncidenceMatrix& matrix);

// l bases (l odd) covering v rays, each ray lying in an even number of them.
struct ParityProof {
    std::vector<std::uint32_t> basis_ids;  // sorted
    std::vector<std::uint32_t> ray_ids;    // sorted union

    std::uint32_t v() const { return (std::uint32_t)ray_ids.size(); }
    std::uint32_t l() const { return (std::uint32_t)basis_ids.size(); }
};

enum class SystemKind { MerminSquare, MerminPentagram };

// A ray/basis system: catalog, orthogonality graph, all complete bases
// (cliques of size 2^m), and the ray x basis incidence matrix.
struct ProofSystem {
    std::uint32_t qubit_count = 0;
    RayCatalog catalog;
    OrthoGraph graph;
    std::vector<OrthogonalBasis> bases;
    IncidenceMatrix matrix;
};

// Eigenbases of the named magic configuration's contexts, closed under
// clique search: 24 rays / 24 bases (square), 40 rays / 25 bases (pentagram).
ProofSystem build_system(SystemKind kind, unsigned threads = 1);

// Proofs sharing (v, l) and the exact distance histogram; when several
// classes share (v, l) they get suffixes A, B, ... in ascending histogram
// order.  Classes are listed by descending v; proofs by basis id lists.
struct ProofClass {
    std::string label;
    std::uint32_t v = 0;
    std::uint32_t l = 0;
    DistanceHistogram histogram;
    std::vector<ParityProof> proofs;
};

struct Census {
    std::vector<ProofClass> classes;

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (const auto& c : classes) t += c.proofs.size();
        return t;
    }
};

// All odd-weight kernel vectors, materialized and classified.  The
// histogram partition is cross-checked against the certificate partition of
// each proof's basis-sharing multigraph (StructureError on mismatch).
// Kernel dimension cap 30.
Census enumerate_parity_proofs(const ProofSystem& system, unsigned threads = 1);

// Truth assignments: (i) exactly one true ray per listed basis, (ii) no two
// orthogonal rays among ray_ids both true (all orthogonal pairs, not just
// within-basis ones).  Bases must be complete, ray count cap 64.
std::optional<std::vector<std::uint32_t>> ks_coloring(const std::vector<std::uint32_t>& ray_ids,
                                                      const std::vector<std::uint32_t>& basis_ids,
                                                      const ProofSystem& system);

bool is_ks_colorable(const std::vector<std::uint32_t>& ray_ids,
                     const std::vector<std::uint32_t>& basis_ids, const ProofSystem& system);

// After a single-ray deletion a basis missing that ray either drops its
// exactly-one constraint (Relax) or keeps it over the surviving members
// (Enforce).  Orthogonality pairs always stay in force.
enum class IncompleteBasisPolicy { Relax, Enforce };

struct CriticalityReport {
    bool ray_critical = false;
    bool basis_critical = false;
};

// Precondition: the basis set is non-colorable.  basis_critical iff every
// single-basis deletion is colorable; ray_critical iff every single-ray
// deletion is colorable under the given policy.
CriticalityReport criticality(const std::vector<std::uint32_t>& basis_ids,
                              const ProofSystem& system,
                              IncompleteBasisPolicy policy = IncompleteBasisPolicy::Relax);
CriticalityReport criticality(const ParityProof& proof, const ProofSystem& system,
                              IncompleteBasisPolicy policy = IncompleteBasisPolicy::Relax);

}  // namespace pauliray
