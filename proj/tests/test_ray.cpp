#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "pauliray/ray.hpp"

using namespace pauliray;

TEST_CASE("canonical form starts at 1 and stays in the unit alphabet") {
    Ray ray;
    ray.qubit_count = 1;
    ray.amplitudes = {{0, 0}, {0, -2}};  // -2i |1>
    Ray canon = canonicalize(ray);
    CHECK(canon.amplitudes[0] == GaussianInteger{0, 0});
    CHECK(canon.amplitudes[1] == GaussianInteger{1, 0});

    ray.amplitudes = {{0, 1}, {1, 0}};  // i|0> + |1>  ->  |0> - i|1>
    canon = canonicalize(ray);
    CHECK(canon.amplitudes[0] == GaussianInteger{1, 0});
    CHECK(canon.amplitudes[1] == GaussianInteger{0, -1});
    CHECK(canonicalize(canon).amplitudes == canon.amplitudes);  // idempotent

    ray.amplitudes = {{2, 0}, {1, 0}};  // mixed magnitudes cannot be canonical
    CHECK_THROWS_AS(canonicalize(ray), StructureError);
    ray.amplitudes = {{0, 0}, {0, 0}};
    CHECK_THROWS_AS(canonicalize(ray), StructureError);
}

TEST_CASE("ray keys identify exactly the canonical amplitude vectors") {
    for (unsigned m = 1; m <= 3; ++m) {
        RayCatalog catalog = all_rays(m);
        std::set<RayKey> keys;
        for (std::uint32_t id = 0; id < catalog.size(); ++id) {
            RayKey key = ray_key(catalog[id]);
            CHECK(keys.insert(key).second);  // collision-free
            auto it = catalog.index.find(key);
            REQUIRE(it != catalog.index.end());
            CHECK(it->second == id);
        }
    }
}

TEST_CASE("eigenbasis vectors are fixed by their generators with the right sign") {
    std::mt19937_64 rng(42);
    for (unsigned m : {1u, 2u}) {
        for (const auto& mcs : enumerate_mcs(m)) {
            for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
                std::vector<int> signs(m);
                for (unsigned i = 0; i < m; ++i) signs[i] = (mask >> i) & 1 ? -1 : +1;
                Ray ray = eigenbasis(mcs, signs);
                for (unsigned i = 0; i < m; ++i) {
                    auto image = oracle::apply(oracle::dense(mcs.generators[i]), ray.amplitudes);
                    for (std::size_t k = 0; k < image.size(); ++k) {
                        GaussianInteger want = ray.amplitudes[k];
                        if (signs[i] < 0) want = GaussianInteger{-1, 0} * want;
                        CHECK(image[k] == want);
                    }
                }
            }
        }
    }
    // spot-check a few three-qubit sets the same way
    std::vector<MaximalCommutingSet> sets = enumerate_mcs(3);
    for (int trial = 0; trial < 10; ++trial) {
        const auto& mcs = sets[rng() % sets.size()];
        std::uint32_t mask = (std::uint32_t)(rng() & 7);
        std::vector<int> signs(3);
        for (unsigned i = 0; i < 3; ++i) signs[i] = (mask >> i) & 1 ? -1 : +1;
        Ray ray = eigenbasis(mcs, signs);
        for (unsigned i = 0; i < 3; ++i) {
            auto image = oracle::apply(oracle::dense(mcs.generators[i]), ray.amplitudes);
            for (std::size_t k = 0; k < image.size(); ++k) {
                GaussianInteger want = ray.amplitudes[k];
                if (signs[i] < 0) want = GaussianInteger{-1, 0} * want;
                CHECK(image[k] == want);
            }
        }
    }
}

TEST_CASE("the eigenrays of one set form an orthonormal basis") {
    for (unsigned m : {1u, 2u, 3u}) {
        std::vector<MaximalCommutingSet> sets = enumerate_mcs(m);
        const auto& mcs = sets[sets.size() / 2];
        std::vector<Ray> rays = mcs_eigenrays(mcs);
        REQUIRE(rays.size() == (1u << m));
        for (std::size_t i = 0; i < rays.size(); ++i)
            for (std::size_t j = i + 1; j < rays.size(); ++j)
                CHECK(overlap2(rays[i], rays[j]) == Rational(0));
    }
}

TEST_CASE("catalog sizes match the closed-form counts") {
    const std::uint64_t rays_expected[] = {6, 60, 1080, 36720};
    const std::uint64_t real_expected[] = {4, 24, 240, 4320};
    for (unsigned m = 1; m <= 3; ++m) {
        RayCatalog catalog = all_rays(m);
        CHECK(catalog.size() == rays_expected[m - 1]);
        CHECK(real_rays(catalog).size() == real_expected[m - 1]);
        RayCounts counts = ray_counts(m);
        CHECK(counts.mcs == mcs_count(m));
        CHECK(counts.rays == rays_expected[m - 1]);
        CHECK(counts.real_rays == real_expected[m - 1]);
    }
}

TEST_CASE("real sub-catalog keeps exactly the all-real rays") {
    RayCatalog catalog = all_rays(2);
    RayCatalog real = real_rays(catalog);
    std::uint32_t real_seen = 0;
    for (std::uint32_t id = 0; id < catalog.size(); ++id)
        if (catalog[id].is_real()) ++real_seen;
    CHECK(real.size() == real_seen);
    for (std::uint32_t id = 0; id < real.size(); ++id) CHECK(real[id].is_real());
}

TEST_CASE("overlap is symmetric, normalized, and exact on known pairs") {
    RayCatalog catalog = all_rays(1);
    REQUIRE(catalog.size() == 6);
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        const Ray& a = catalog[(std::uint32_t)(rng() % 6)];
        const Ray& b = catalog[(std::uint32_t)(rng() % 6)];
        Rational o = overlap2(a, b);
        CHECK(o == overlap2(b, a));
        CHECK(Rational(0) <= o);
        CHECK(o <= Rational(1));
    }
    for (std::uint32_t id = 0; id < 6; ++id)
        CHECK(overlap2(catalog[id], catalog[id]) == Rational(1));
    // |<0|+>|^2 = 1/2
    Ray zero, plus;
    zero.qubit_count = plus.qubit_count = 1;
    zero.amplitudes = {{1, 0}, {0, 0}};
    plus.amplitudes = {{1, 0}, {1, 0}};
    CHECK(overlap2(zero, plus) == Rational(1, 2));
    Ray longer;
    longer.qubit_count = 2;
    longer.amplitudes = {{1, 0}, {0, 0}, {0, 0}, {0, 0}};
    CHECK_THROWS_AS(overlap2(zero, longer), DimensionMismatch);
}

TEST_CASE("catalog construction dedupes scalar multiples") {
    Ray a, b, c;
    a.qubit_count = b.qubit_count = c.qubit_count = 1;
    a.amplitudes = {{1, 0}, {1, 0}};
    b.amplitudes = {{0, 1}, {0, 1}};    // i * a
    c.amplitudes = {{1, 0}, {-1, 0}};   // distinct
    RayCatalog catalog = catalog_from_rays({a, b, c});
    CHECK(catalog.size() == 2);
}
