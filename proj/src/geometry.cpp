#include "pauliray/geometry.hpp"

#include <algorithm>

namespace pauliray {

Rational bengtsson_d2(const OrthogonalBasis& a, const OrthogonalBasis& b,
                      const RayCatalog& catalog) {
    if (a.ray_ids.size() != b.ray_ids.size())
        throw DimensionMismatch("bases have different sizes");
    const std::int64_t d = (std::int64_t)a.ray_ids.size();
    if (d < 2) throw PreconditionError("basis must contain at least two rays");
    const Rational inv_d(1, d);
    Rational sum(0);
    for (std::uint32_t i : a.ray_ids) {
        for (std::uint32_t j : b.ray_ids) {
            Rational dev = overlap2(catalog[i], catalog[j]) - inv_d;
            sum = sum + dev * dev;
        }
    }
    return Rational(1) - sum / Rational(d - 1);
}

DistanceHistogram distance_histogram(const std::vector<std::uint32_t>& basis_ids,
                                     const std::vector<OrthogonalBasis>& bases,
                                     const RayCatalog& catalog) {
    DistanceHistogram hist;
    for (std::size_t i = 0; i < basis_ids.size(); ++i)
        for (std::size_t j = i + 1; j < basis_ids.size(); ++j)
            ++hist[bengtsson_d2(bases.at(basis_ids[i]), bases.at(basis_ids[j]), catalog)];
    return hist;
}

bool pair_identity(const DistanceHistogram& hist, std::uint64_t basis_count) {
    std::uint64_t total = 0;
    for (const auto& [d2, count] : hist) total += count;
    return 2 * total == basis_count * (basis_count - 1);
}

namespace {

std::uint32_t shared_rays(const OrthogonalBasis& a, const OrthogonalBasis& b) {
    std::uint32_t shared = 0;
    for (std::uint32_t r : a.ray_ids)
        if (std::binary_search(b.ray_ids.begin(), b.ray_ids.end(), r)) ++shared;
    return shared;
}

OrthoGraph rook_3x3() {
    OrthoGraph g(9);
    for (std::uint32_t u = 0; u < 9; ++u)
        for (std::uint32_t v = u + 1; v < 9; ++v)
            if (u / 3 == v / 3 || u % 3 == v % 3) g.add_edge(u, v);
    return g;
}

StructureReport signature_18_9(const std::vector<std::uint32_t>& basis_ids,
                               const std::vector<OrthogonalBasis>& bases,
                               const RayCatalog& catalog) {
    StructureReport report;
    report.proof_class = "18-9";

    const Rational adjacent_d2(7, 12), disjoint_d2(5, 6);
    OrthoGraph base_graph((std::uint32_t)basis_ids.size());
    bool sharing_ok = true;
    for (std::uint32_t i = 0; i < basis_ids.size(); ++i) {
        for (std::uint32_t j = i + 1; j < basis_ids.size(); ++j) {
            const auto& a = bases.at(basis_ids[i]);
            const auto& b = bases.at(basis_ids[j]);
            Rational d2 = bengtsson_d2(a, b, catalog);
            std::uint32_t shared = shared_rays(a, b);
            if (d2 == adjacent_d2) {
                base_graph.add_edge(i, j);
                if (shared != 1) sharing_ok = false;
            } else if (d2 == disjoint_d2) {
                if (shared != 0) sharing_ok = false;
            } else {
                sharing_ok = false;
            }
        }
    }
    report.sharing_matches_distance = sharing_ok;
    report.rook_isomorphic = graph_certificate(base_graph) == graph_certificate(rook_3x3());
    report.base_graph_aut = automorphism_order(base_graph);

    std::map<std::uint32_t, std::uint32_t> occurrences;
    for (std::uint32_t bi : basis_ids)
        for (std::uint32_t r : bases.at(bi).ray_ids) ++occurrences[r];
    report.rays_in_two_bases = occurrences.size() == 18 &&
                               std::all_of(occurrences.begin(), occurrences.end(),
                                           [](const auto& kv) { return kv.second == 2; });

    report.passed = report.rook_isomorphic && report.base_graph_aut == 72 &&
                    report.rays_in_two_bases && report.sharing_matches_distance;
    return report;
}

StructureReport signature_36_11(const std::vector<std::uint32_t>& basis_ids,
                                const std::vector<OrthogonalBasis>& bases,
                                const RayCatalog& catalog) {
    StructureReport report;
    report.proof_class = "36-11";
    const std::uint32_t l = (std::uint32_t)basis_ids.size();

    std::vector<std::vector<std::uint32_t>> share(l, std::vector<std::uint32_t>(l, 0));
    const Rational d2_share4(3, 7), d2_share2(9, 14), d2_share0(6, 7);
    bool sharing_ok = true;
    for (std::uint32_t i = 0; i < l; ++i) {
        for (std::uint32_t j = i + 1; j < l; ++j) {
            const auto& a = bases.at(basis_ids[i]);
            const auto& b = bases.at(basis_ids[j]);
            std::uint32_t s = shared_rays(a, b);
            share[i][j] = share[j][i] = s;
            Rational d2 = bengtsson_d2(a, b, catalog);
            if (!((s == 4 && d2 == d2_share4) || (s == 2 && d2 == d2_share2) ||
                  (s == 0 && d2 == d2_share0)))
                sharing_ok = false;
        }
    }
    report.sharing_matches_distance = sharing_ok;

    // the reference base: exactly 4 partners at 4 shared rays, 6 disjoint
    std::uint32_t reference_count = 0;
    std::uint32_t reference_index = 0;
    for (std::uint32_t i = 0; i < l; ++i) {
        std::uint32_t four = 0, zero = 0, other = 0;
        for (std::uint32_t j = 0; j < l; ++j) {
            if (j == i) continue;
            if (share[i][j] == 4)
                ++four;
            else if (share[i][j] == 0)
                ++zero;
            else
                ++other;
        }
        if (four == 4 && zero == 6 && other == 0) {
            ++reference_count;
            reference_index = i;
        }
    }
    report.reference_base_found = reference_count == 1;
    if (report.reference_base_found) report.reference_base_id = basis_ids[reference_index];

    // every sharing pair not involving the reference has exactly two rays
    bool adjacent_two = report.reference_base_found;
    for (std::uint32_t i = 0; i < l && adjacent_two; ++i) {
        for (std::uint32_t j = i + 1; j < l; ++j) {
            if (i == reference_index || j == reference_index) continue;
            if (share[i][j] != 0 && share[i][j] != 2) {
                adjacent_two = false;
                break;
            }
        }
    }
    report.adjacent_share_two = adjacent_two;

    report.passed = report.reference_base_found && report.adjacent_share_two &&
                    report.sharing_matches_distance;
    return report;
}

}  // namespace

StructureReport structure_signature(const std::vector<std::uint32_t>& basis_ids,
                                    const std::vector<OrthogonalBasis>& bases,
                                    const RayCatalog& catalog) {
    std::vector<std::uint32_t> union_rays;
    for (std::uint32_t bi : basis_ids)
        union_rays.insert(union_rays.end(), bases.at(bi).ray_ids.begin(),
                          bases.at(bi).ray_ids.end());
    std::sort(union_rays.begin(), union_rays.end());
    union_rays.erase(std::unique(union_rays.begin(), union_rays.end()), union_rays.end());
    const std::size_t v = union_rays.size();
    const std::size_t l = basis_ids.size();

    if (v == 18 && l == 9) return signature_18_9(basis_ids, bases, catalog);
    if (v == 36 && l == 11) return signature_36_11(basis_ids, bases, catalog);
    throw PreconditionError("structure signature is defined for 18-9 and 36-11 proofs only");
}

}  // namespace pauliray
