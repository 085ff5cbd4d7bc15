#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "pauliray/census.hpp"
#include "pauliray/geometry.hpp"
#include "pauliray/reference.hpp"

using namespace pauliray;

namespace {

const ProofSystem& square_system() {
    static ProofSystem system = build_system(SystemKind::MerminSquare);
    return system;
}

const Census& square_census() {
    static Census census = enumerate_parity_proofs(square_system());
    return census;
}

const ProofClass* find_class(const Census& census, const std::string& label) {
    for (const ProofClass& cls : census.classes)
        if (cls.label == label) return &cls;
    return nullptr;
}

}  // namespace

TEST_CASE("a basis is at distance zero from itself") {
    const ProofSystem& system = square_system();
    for (std::uint32_t b = 0; b < system.bases.size(); ++b)
        CHECK(bengtsson_d2(system.bases[b], system.bases[b], system.catalog) == Rational(0));
}

TEST_CASE("mutually unbiased single-qubit bases sit at distance one") {
    RayCatalog catalog = all_rays(1);
    OrthoGraph g = build_graph(catalog);
    std::vector<OrthogonalBasis> bases = enumerate_bases(g, 2);
    REQUIRE(bases.size() == 3);  // Z, X, Y eigenbases
    for (std::size_t i = 0; i < bases.size(); ++i)
        for (std::size_t j = i + 1; j < bases.size(); ++j)
            CHECK(bengtsson_d2(bases[i], bases[j], catalog) == Rational(1));
}

TEST_CASE("distances are symmetric and blind to member order") {
    const ProofSystem& system = square_system();
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        std::uint32_t i = (std::uint32_t)(rng() % system.bases.size());
        std::uint32_t j = (std::uint32_t)(rng() % system.bases.size());
        Rational d = bengtsson_d2(system.bases[i], system.bases[j], system.catalog);
        CHECK(d == bengtsson_d2(system.bases[j], system.bases[i], system.catalog));
        OrthogonalBasis shuffled = system.bases[j];
        std::shuffle(shuffled.ray_ids.begin(), shuffled.ray_ids.end(), rng);
        CHECK(bengtsson_d2(system.bases[i], shuffled, system.catalog) == d);
    }
}

TEST_CASE("the square system's distance spectrum is the documented five values") {
    const ProofSystem& system = square_system();
    std::vector<std::uint32_t> all(system.bases.size());
    std::iota(all.begin(), all.end(), 0);
    DistanceHistogram hist = distance_histogram(all, system.bases, system.catalog);
    std::set<Rational> seen;
    std::uint64_t total = 0;
    for (const auto& [d2, count] : hist) {
        seen.insert(d2);
        total += count;
    }
    CHECK(seen == std::set<Rational>(reference::square_distances.begin(),
                                     reference::square_distances.end()));
    CHECK(total == 24 * 23 / 2);
    CHECK(pair_identity(hist, all.size()));
}

TEST_CASE("pair identity accepts matching and rejects padded histograms") {
    DistanceHistogram hist;
    hist[Rational(1, 2)] = 3;  // 3 pairs -> l = 3
    CHECK(pair_identity(hist, 3));
    CHECK_FALSE(pair_identity(hist, 4));
    hist[Rational(1)] = 3;  // 6 pairs -> l = 4
    CHECK(pair_identity(hist, 4));
}

TEST_CASE("mismatched basis sizes are rejected") {
    const ProofSystem& system = square_system();
    OrthogonalBasis trimmed = system.bases[0];
    trimmed.ray_ids.pop_back();
    CHECK_THROWS_AS(bengtsson_d2(system.bases[1], trimmed, system.catalog),
                    DimensionMismatch);
}

TEST_CASE("structure reports for the 18-9 class") {
    const ProofSystem& system = square_system();
    const ProofClass* cls = find_class(square_census(), "18-9");
    REQUIRE(cls != nullptr);
    for (const ParityProof& proof : cls->proofs) {
        StructureReport report =
            structure_signature(proof.basis_ids, system.bases, system.catalog);
        CHECK(report.proof_class == "18-9");
        CHECK(report.rook_isomorphic);
        CHECK(report.base_graph_aut == reference::rook_aut_order);
        CHECK(report.rays_in_two_bases);
        CHECK(report.sharing_matches_distance);
        CHECK(report.passed);
    }
}

TEST_CASE("structure reports for the 36-11 class") {
    static ProofSystem pentagram = build_system(SystemKind::MerminPentagram);
    static Census census = enumerate_parity_proofs(pentagram);
    const ProofClass* cls = find_class(census, "36-11");
    REQUIRE(cls != nullptr);
    REQUIRE(cls->proofs.size() == 320);
    for (std::size_t i = 0; i < 32; ++i) {
        const ParityProof& proof = cls->proofs[i];
        StructureReport report =
            structure_signature(proof.basis_ids, pentagram.bases, pentagram.catalog);
        CHECK(report.proof_class == "36-11");
        CHECK(report.reference_base_found);
        CHECK(report.adjacent_share_two);
        CHECK(report.sharing_matches_distance);
        CHECK(report.passed);
        // the reference base id really is one of the proof's bases
        CHECK(std::binary_search(proof.basis_ids.begin(), proof.basis_ids.end(),
                                 report.reference_base_id));
    }
}

TEST_CASE("structure signatures reject other shapes") {
    const ProofSystem& system = square_system();
    const ProofClass* cls = find_class(square_census(), "24-15");
    REQUIRE(cls != nullptr);
    CHECK_THROWS_AS(
        structure_signature(cls->proofs.front().basis_ids, system.bases, system.catalog),
        PreconditionError);
}
