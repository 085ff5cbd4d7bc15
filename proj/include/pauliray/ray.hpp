#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "pauliray/gaussian.hpp"
#include "pauliray/pauli.hpp"
#include "pauliray/rational.hpp"
#include "pauliray/util.hpp"

namespace pauliray {

// A projective state with 2^m exact amplitudes.  Canonical form: the first
// nonzero amplitude is 1 and every nonzero amplitude is a fourth root of
// unity (stabilizer states never need more).
struct Ray {
    unsigned qubit_count = 0;
    std::vector<GaussianInteger> amplitudes;

    bool is_real() const {
        for (const auto& a : amplitudes)
            if (a.im != 0) return false;
        return true;
    }
};

// Packed amplitude codes (3 bits each, amplitude 0 in the highest position),
// a collision-free identity for canonical rays up to m = 5.
struct RayKey {
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;

    friend bool operator==(const RayKey& a, const RayKey& b) { return a.hi == b.hi && a.lo == b.lo; }
    friend bool operator<(const RayKey& a, const RayKey& b) {
        return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo;
    }
};

struct RayKeyHash {
    std::size_t operator()(const RayKey& k) const noexcept {
        std::uint64_t h = k.hi ^ (k.lo * 0x9e3779b97f4a7c15ull);
        h ^= h >> 30;
        h *= 0xbf58476d1ce4e5b9ull;
        h ^= h >> 27;
        h *= 0x94d049bb133111ebull;
        h ^= h >> 31;
        return static_cast<std::size_t>(h);
    }
};

RayKey ray_key(const Ray& ray);

// Divides by the first nonzero amplitude; throws StructureError if the result
// leaves the {0, +1, -1, +i, -i} alphabet (it never does for stabilizer rays).
Ray canonicalize(Ray ray);

struct RayCatalog {
    unsigned qubit_count = 0;
    std::vector<Ray> rays;  // sorted by RayKey, duplicate-free
    std::unordered_map<RayKey, std::uint32_t, RayKeyHash> index;

    std::uint32_t size() const { return static_cast<std::uint32_t>(rays.size()); }
    const Ray& operator[](std::uint32_t id) const { return rays[id]; }
};

// Canonicalizes, deduplicates, sorts, and indexes arbitrary rays of one qubit count.
RayCatalog catalog_from_rays(std::vector<Ray> rays);

// The joint eigenvector of the set's generators with the given signs,
// obtained by applying the 2^m-scaled projector prod(I + sign_i * g_i) to the
// first computational basis vector with a nonzero image.
Ray eigenbasis(const MaximalCommutingSet& mcs, const std::vector<int>& signs);

// All 2^m joint eigenvectors of one maximal commuting set, indexed by sign
// mask (bit i set = generator i has sign -1).
std::vector<Ray> mcs_eigenrays(const MaximalCommutingSet& mcs);

// Every eigenray of every maximal commuting set of P_m; |rays| = 2^m * L.
// Supported for 1 <= m <= 4 (use ray_counts for m = 5).
RayCatalog all_rays(unsigned m, unsigned threads = 1);

// Sub-catalog of the rays with all-real amplitudes, order preserved.
RayCatalog real_rays(const RayCatalog& catalog);

// Streaming counts (no catalog kept); supports m = 5.
struct RayCounts {
    std::uint64_t mcs = 0;
    std::uint64_t rays = 0;
    std::uint64_t real_rays = 0;
};
RayCounts ray_counts(unsigned m, unsigned threads = 1);

// |<a|b>|^2 / (|a|^2 |b|^2) as an exact rational in [0, 1].
Rational overlap2(const Ray& a, const Ray& b);

}  // namespace pauliray
