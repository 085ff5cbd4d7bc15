#include "pauliray/ray.hpp"

#include <algorithm>
#include <bit>

namespace pauliray {

namespace {

inline unsigned parity(std::uint32_t v) { return (unsigned)std::popcount(v) & 1u; }

// Amplitude code: 0, +1, -1, +i, -i -> 0..4.
inline unsigned amp_code(const GaussianInteger& a) {
    if (a.is_zero()) return 0;
    if (a == GaussianInteger{1, 0}) return 1;
    if (a == GaussianInteger{-1, 0}) return 2;
    if (a == GaussianInteger{0, 1}) return 3;
    if (a == GaussianInteger{0, -1}) return 4;
    throw StructureError("amplitude " + a.to_string() + " is outside the canonical alphabet");
}

}  // namespace

RayKey ray_key(const Ray& ray) {
    RayKey key;
    for (std::size_t i = 0; i < ray.amplitudes.size(); ++i) {
        unsigned code = amp_code(ray.amplitudes[i]);
        if (i < 21)
            key.hi = (key.hi << 3) | code;
        else
            key.lo = (key.lo << 3) | code;
    }
    return key;
}

Ray canonicalize(Ray ray) {
    const GaussianInteger* first = nullptr;
    for (const auto& a : ray.amplitudes) {
        if (!a.is_zero()) {
            first = &a;
            break;
        }
    }
    if (!first) throw StructureError("ray has no nonzero amplitude");
    std::int64_t n0 = first->norm2();
    for (auto& a : ray.amplitudes) {
        if (a.is_zero()) continue;
        if (a.norm2() != n0)
            throw StructureError("ray amplitudes are not all of equal magnitude");
    }
    GaussianInteger pivot = *first;
    for (auto& a : ray.amplitudes) {
        if (a.is_zero()) continue;
        a = a.exact_div(pivot);
        if (a.norm2() != 1)
            throw StructureError("canonical amplitude " + a.to_string() + " is not a unit");
    }
    return ray;
}

RayCatalog catalog_from_rays(std::vector<Ray> rays) {
    if (rays.empty()) throw PreconditionError("catalog needs at least one ray");
    unsigned m = rays[0].qubit_count;
    for (auto& r : rays) {
        if (r.qubit_count != m) throw DimensionMismatch("rays of mixed qubit count");
        r = canonicalize(std::move(r));
    }
    std::sort(rays.begin(), rays.end(),
              [](const Ray& a, const Ray& b) { return ray_key(a) < ray_key(b); });
    RayCatalog catalog;
    catalog.qubit_count = m;
    catalog.rays.reserve(rays.size());
    for (auto& r : rays) {
        RayKey key = ray_key(r);
        if (!catalog.rays.empty() && ray_key(catalog.rays.back()) == key) continue;
        catalog.index.emplace(key, (std::uint32_t)catalog.rays.size());
        catalog.rays.push_back(std::move(r));
    }
    return catalog;
}

namespace {

// Accumulates the image of |k0> under sum_T sign_T * g_T into amps;
// returns false if the image vanishes.
bool projector_image(const std::vector<PauliOperator>& prods, std::uint32_t sigma,
                     std::uint32_t k0, std::vector<GaussianInteger>& amps) {
    std::fill(amps.begin(), amps.end(), GaussianInteger{});
    for (std::uint32_t t = 0; t < prods.size(); ++t) {
        const PauliOperator& g = prods[t];
        unsigned phase = (g.s + 2 * parity(sigma & t) + 2 * parity(g.z & k0)) & 3u;
        amps[k0 ^ g.x] += GaussianInteger::unit(phase);
    }
    for (const auto& a : amps)
        if (!a.is_zero()) return true;
    return false;
}

Ray eigenray_from_products(unsigned m, const std::vector<PauliOperator>& prods,
                           std::uint32_t sigma) {
    std::uint32_t n = 1u << m;
    Ray ray;
    ray.qubit_count = m;
    ray.amplitudes.resize(n);
    for (std::uint32_t k0 = 0; k0 < n; ++k0) {
        if (projector_image(prods, sigma, k0, ray.amplitudes))
            return canonicalize(std::move(ray));
    }
    throw StructureError("projector image vanished for every seed vector");
}

}  // namespace

Ray eigenbasis(const MaximalCommutingSet& mcs, const std::vector<int>& signs) {
    if (signs.size() != mcs.generators.size())
        throw DimensionMismatch("got " + std::to_string(signs.size()) + " signs for " +
                                std::to_string(mcs.generators.size()) + " generators");
    std::uint32_t sigma = 0;
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] == -1)
            sigma |= 1u << i;
        else if (signs[i] != 1)
            throw PreconditionError("signs must be +1 or -1");
    }
    return eigenray_from_products(mcs.m, subset_products(mcs.generators), sigma);
}

std::vector<Ray> mcs_eigenrays(const MaximalCommutingSet& mcs) {
    auto prods = subset_products(mcs.generators);
    std::uint32_t n = 1u << mcs.m;
    std::vector<Ray> rays;
    rays.reserve(n);
    for (std::uint32_t sigma = 0; sigma < n; ++sigma)
        rays.push_back(eigenray_from_products(mcs.m, prods, sigma));
    return rays;
}

RayCatalog all_rays(unsigned m, unsigned threads) {
    if (m < 1 || m > 4)
        throw CapabilityError("full ray catalogs supported for 1 <= m <= 4; "
                              "use ray_counts for m = 5");
    auto sets = enumerate_mcs(m);
    std::uint32_t n = 1u << m;
    std::vector<std::vector<Ray>> slots(sets.size());
    parallel_for(sets.size(), threads,
                 [&](std::size_t i) { slots[i] = mcs_eigenrays(sets[i]); });
    std::vector<Ray> rays;
    rays.reserve(sets.size() * n);
    for (auto& slot : slots)
        for (auto& r : slot) rays.push_back(std::move(r));
    RayCatalog catalog = catalog_from_rays(std::move(rays));
    std::uint64_t expected = std::uint64_t(n) * mcs_count(m);
    if (catalog.rays.size() != expected)
        throw StructureError("ray catalog has " + std::to_string(catalog.rays.size()) +
                             " rays, expected " + std::to_string(expected));
    return catalog;
}

RayCatalog real_rays(const RayCatalog& catalog) {
    RayCatalog out;
    out.qubit_count = catalog.qubit_count;
    for (const auto& r : catalog.rays) {
        if (r.is_real()) {
            out.index.emplace(ray_key(r), (std::uint32_t)out.rays.size());
            out.rays.push_back(r);
        }
    }
    return out;
}

RayCounts ray_counts(unsigned m, unsigned threads) {
    if (m < 1 || m > 5) throw CapabilityError("ray counts supported for 1 <= m <= 5");
    auto sets = enumerate_mcs(m);
    std::uint32_t n = 1u << m;
    struct Slot {
        std::vector<RayKey> keys;
        std::uint64_t real = 0;
    };
    std::vector<Slot> slots(sets.size());
    parallel_for(sets.size(), threads, [&](std::size_t i) {
        auto rays = mcs_eigenrays(sets[i]);
        slots[i].keys.reserve(rays.size());
        for (const auto& r : rays) {
            slots[i].keys.push_back(ray_key(r));
            if (r.is_real()) ++slots[i].real;
        }
    });
    std::vector<RayKey> all;
    all.reserve(sets.size() * n);
    RayCounts counts;
    counts.mcs = sets.size();
    for (const auto& slot : slots) {
        counts.real_rays += slot.real;
        all.insert(all.end(), slot.keys.begin(), slot.keys.end());
    }
    std::sort(all.begin(), all.end());
    counts.rays = (std::uint64_t)(std::unique(all.begin(), all.end()) - all.begin());
    std::uint64_t expected = std::uint64_t(n) * mcs_count(m);
    if (counts.rays != expected)
        throw StructureError("ray census found " + std::to_string(counts.rays) +
                             " distinct rays, expected " + std::to_string(expected));
    return counts;
}

Rational overlap2(const Ray& a, const Ray& b) {
    if (a.qubit_count != b.qubit_count || a.amplitudes.size() != b.amplitudes.size())
        throw DimensionMismatch("rays of different dimension");
    GaussianInteger inner{};
    std::int64_t na = 0, nb = 0;
    for (std::size_t k = 0; k < a.amplitudes.size(); ++k) {
        inner += a.amplitudes[k].conj() * b.amplitudes[k];
        na += a.amplitudes[k].norm2();
        nb += b.amplitudes[k].norm2();
    }
    return Rational(inner.norm2(), na * nb);
}

}  // namespace pauliray
