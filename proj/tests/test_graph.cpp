#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "pauliray/graph.hpp"
#include "pauliray/ray.hpp"

using namespace pauliray;

namespace {

OrthoGraph from_edges(std::uint32_t n, const std::vector<std::pair<int, int>>& edges) {
    OrthoGraph g(n);
    for (auto [u, v] : edges) g.add_edge((std::uint32_t)u, (std::uint32_t)v);
    return g;
}

OrthoGraph random_graph(std::mt19937_64& rng, std::uint32_t n, double p) {
    OrthoGraph g(n);
    std::bernoulli_distribution coin(p);
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

OrthoGraph permuted(const OrthoGraph& g, const std::vector<std::uint32_t>& perm) {
    OrthoGraph h(g.n);
    for (std::uint32_t u = 0; u < g.n; ++u)
        for (std::uint32_t v = u + 1; v < g.n; ++v)
            if (g.adjacent(u, v)) h.add_edge(perm[u], perm[v]);
    return h;
}

OrthoGraph rook_3x3() {
    OrthoGraph g(9);
    for (std::uint32_t u = 0; u < 9; ++u)
        for (std::uint32_t v = u + 1; v < 9; ++v)
            if (u / 3 == v / 3 || u % 3 == v % 3) g.add_edge(u, v);
    return g;
}

OrthoGraph petersen() {
    OrthoGraph g(10);
    for (std::uint32_t i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(i, i + 5);                // spokes
        g.add_edge(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return g;
}

}  // namespace

TEST_CASE("adjacency matches the orthogonality relation of the rays") {
    RayCatalog catalog = all_rays(2);
    OrthoGraph g = build_graph(catalog);
    REQUIRE(g.n == catalog.size());
    std::uint64_t edges = 0;
    for (std::uint32_t u = 0; u < g.n; ++u)
        for (std::uint32_t v = u + 1; v < g.n; ++v) {
            bool ortho = overlap2(catalog[u], catalog[v]) == Rational(0);
            CHECK(g.adjacent(u, v) == ortho);
            if (ortho) ++edges;
        }
    CHECK(g.edge_count() == edges);
}

TEST_CASE("base enumeration agrees with the exhaustive subset scan") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        OrthoGraph g = random_graph(rng, 10 + (std::uint32_t)(rng() % 4), 0.5);
        for (std::uint32_t k : {3u, 4u}) {
            std::vector<OrthogonalBasis> bases = enumerate_bases(g, k);
            CHECK(bases.size() == oracle::count_cliques_subsets(g, k));
            std::set<std::vector<std::uint32_t>> seen;
            for (const auto& basis : bases) {
                REQUIRE(basis.ray_ids.size() == k);
                CHECK(std::is_sorted(basis.ray_ids.begin(), basis.ray_ids.end()));
                CHECK(seen.insert(basis.ray_ids).second);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = i + 1; j < k; ++j)
                        CHECK(g.adjacent(basis.ray_ids[i], basis.ray_ids[j]));
            }
        }
    }
}

TEST_CASE("known symmetry orders") {
    // two disjoint edges: swap within each edge and swap the edges -> 2*2*2
    CHECK(automorphism_order(from_edges(4, {{0, 1}, {2, 3}})) == 8ull);
    CHECK(automorphism_order(from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})) == 10ull);
    CHECK(automorphism_order(from_edges(4, {{0, 1}, {1, 2}, {2, 3}})) == 2ull);  // path
    OrthoGraph k4(4);
    for (std::uint32_t u = 0; u < 4; ++u)
        for (std::uint32_t v = u + 1; v < 4; ++v) k4.add_edge(u, v);
    CHECK(automorphism_order(k4) == 24ull);
    OrthoGraph k33(6);
    for (std::uint32_t u = 0; u < 3; ++u)
        for (std::uint32_t v = 3; v < 6; ++v) k33.add_edge(u, v);
    CHECK(automorphism_order(k33) == 72ull);
    CHECK(automorphism_order(rook_3x3()) == 72ull);
    CHECK(automorphism_order(petersen()) == 120ull);
    CHECK(automorphism_order(OrthoGraph(1)) == 1ull);
    OrthoGraph empty5(5);
    CHECK(automorphism_order(empty5) == 120ull);  // 5!
}

TEST_CASE("symmetry order matches the brute-force count on random graphs") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        std::uint32_t n = 4 + (std::uint32_t)(rng() % 4);  // 4..7
        OrthoGraph g = random_graph(rng, n, 0.2 + 0.1 * (trial % 6));
        CHECK(automorphism_order(g) == oracle::count_automorphisms_brute(g));
    }
}

TEST_CASE("reported generators are automorphisms and reproduce the order") {
    std::mt19937_64 rng(78);
    for (int trial = 0; trial < 10; ++trial) {
        OrthoGraph g = random_graph(rng, 7, 0.4);
        AutResult result = analyze_automorphisms(g);
        CHECK(result.order == oracle::count_automorphisms_brute(g));
        for (const auto& perm : result.generators) {
            REQUIRE(perm.size() == g.n);
            for (std::uint32_t u = 0; u < g.n; ++u)
                for (std::uint32_t v = u + 1; v < g.n; ++v)
                    CHECK(g.adjacent(u, v) == g.adjacent(perm[u], perm[v]));
        }
    }
}

TEST_CASE("certificates are invariant under relabeling") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 30; ++trial) {
        std::uint32_t n = 5 + (std::uint32_t)(rng() % 8);  // 5..12
        OrthoGraph g = random_graph(rng, n, 0.45);
        std::string cert = graph_certificate(g);
        std::vector<std::uint32_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(graph_certificate(permuted(g, perm)) == cert);
    }
}

TEST_CASE("certificate equality decides isomorphism on small graphs") {
    std::mt19937_64 rng(56);
    int equal_seen = 0;
    for (int trial = 0; trial < 60; ++trial) {
        std::uint32_t n = 5 + (std::uint32_t)(rng() % 2);
        OrthoGraph a = random_graph(rng, n, 0.5);
        OrthoGraph b = random_graph(rng, n, 0.5);
        bool same_cert = graph_certificate(a) == graph_certificate(b);
        CHECK(same_cert == oracle::isomorphic_brute(a, b));
        equal_seen += same_cert;
    }
    // the rook's graph and K3,3 x nothing: line graph comparisons
    OrthoGraph k33(6);
    for (std::uint32_t u = 0; u < 3; ++u)
        for (std::uint32_t v = 3; v < 6; ++v) k33.add_edge(u, v);
    CHECK(graph_certificate(rook_3x3()) != graph_certificate(k33));
}

TEST_CASE("vertex colors split certificate classes") {
    OrthoGraph path = from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    std::vector<std::uint32_t> end_marked{1, 0, 0, 0};
    std::vector<std::uint32_t> mid_marked{0, 1, 0, 0};
    std::vector<std::uint32_t> other_end{0, 0, 0, 1};
    CHECK(graph_certificate(path, &end_marked) == graph_certificate(path, &other_end));
    CHECK(graph_certificate(path, &end_marked) != graph_certificate(path, &mid_marked));
    std::vector<std::uint32_t> short_colors{0, 1};
    CHECK_THROWS_AS(graph_certificate(path, &short_colors), DimensionMismatch);
}

TEST_CASE("labeled certificates respect values, not just patterns") {
    // same support pattern, different label alphabets -> different certificates
    std::vector<std::uint8_t> ones{0, 1, 1, 0};
    std::vector<std::uint8_t> twos{0, 2, 2, 0};
    CHECK(labeled_certificate(2, ones) != labeled_certificate(2, twos));
    // relabeling vertices leaves the certificate alone
    std::mt19937_64 rng(57);
    for (int trial = 0; trial < 20; ++trial) {
        std::uint32_t n = 4 + (std::uint32_t)(rng() % 4);
        std::vector<std::uint8_t> labels(n * n, 0);
        for (std::uint32_t u = 0; u < n; ++u)
            for (std::uint32_t v = u + 1; v < n; ++v) {
                std::uint8_t l = (std::uint8_t)(rng() % 4);
                labels[u * n + v] = labels[v * n + u] = l;
            }
        std::vector<std::uint32_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::uint8_t> relabeled(n * n, 0);
        for (std::uint32_t u = 0; u < n; ++u)
            for (std::uint32_t v = 0; v < n; ++v)
                relabeled[perm[u] * n + perm[v]] = labels[u * n + v];
        CHECK(labeled_certificate(n, labels) == labeled_certificate(n, relabeled));
    }
}

TEST_CASE("size caps throw capability errors") {
    OrthoGraph big(5001);
    CHECK_THROWS_AS(automorphism_order(big), CapabilityError);
    OrthoGraph wide(201);
    CHECK_THROWS_AS(graph_certificate(wide), CapabilityError);
    std::vector<std::uint8_t> many_labels(20 * 20, 0);
    for (std::uint32_t k = 0; k < 17; ++k) many_labels[k] = (std::uint8_t)k;
    for (std::uint32_t k = 0; k < 17; ++k) many_labels[k * 20] = (std::uint8_t)k;
    CHECK_THROWS_AS(labeled_certificate(20, many_labels), CapabilityError);
}

TEST_CASE("the real two-qubit ray graph has the documented symmetry order") {
    RayCatalog real = real_rays(all_rays(2));
    REQUIRE(real.size() == 24);
    CHECK(automorphism_order(build_graph(real)) == 1152ull);
}
