#include "pauliray/census.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace pauliray {

IncidenceMatrix incidence(const RayCatalog& catalog, const std::vector<OrthogonalBasis>& bases) {
    IncidenceMatrix m;
    m.ray_count = catalog.size();
    m.basis_count = (std::uint32_t)bases.size();
    m.stride = (m.ray_count + 63) / 64;
    m.bits.assign(std::size_t(m.basis_count) * m.stride, 0);
    const std::size_t dim = catalog.rays.empty() ? 0 : catalog.rays[0].amplitudes.size();
    for (std::uint32_t b = 0; b < m.basis_count; ++b) {
        if (bases[b].ray_ids.size() != dim)
            throw DimensionMismatch("basis size must equal the space dimension");
        std::uint64_t* column = m.bits.data() + std::size_t(b) * m.stride;
        for (std::uint32_t r : bases[b].ray_ids) {
            if (r >= m.ray_count) throw PreconditionError("ray id out of range");
            column[r >> 6] |= 1ull << (r & 63);
        }
    }
    return m;
}

GF2Kernel parity_kernel(const IncidenceMatrix& matrix) {
    if (matrix.basis_count > 64) throw CapabilityError("kernel extraction supports up to 64 columns");
    GF2Kernel kernel;
    // eliminate columns in order, tracking which original columns combine
    // into each reduced one; a reduced column that vanishes is a kernel vector
    struct Pivot {
        std::uint32_t ray;
        std::vector<std::uint64_t> column;
        std::uint64_t combo;
    };
    std::vector<Pivot> pivots;
    std::vector<std::uint64_t> cur(matrix.stride);
    for (std::uint32_t j = 0; j < matrix.basis_count; ++j) {
        std::copy(matrix.col(j), matrix.col(j) + matrix.stride, cur.begin());
        std::uint64_t combo = 1ull << j;
        for (const Pivot& p : pivots) {
            if ((cur[p.ray >> 6] >> (p.ray & 63)) & 1u) {
                for (std::uint32_t w = 0; w < matrix.stride; ++w) cur[w] ^= p.column[w];
                combo ^= p.combo;
            }
        }
        std::uint32_t lead = matrix.ray_count;
        for (std::uint32_t w = 0; w < matrix.stride && lead == matrix.ray_count; ++w)
            if (cur[w]) lead = w * 64 + (std::uint32_t)std::countr_zero(cur[w]);
        if (lead == matrix.ray_count)
            kernel.combos.push_back(combo);
        else
            pivots.push_back({lead, cur, combo});
    }
    kernel.dimension = (std::uint32_t)kernel.combos.size();
    return kernel;
}

ProofSystem build_system(SystemKind kind, unsigned threads) {
    std::vector<MagicContext> contexts;
    std::uint32_t m = 0;
    if (kind == SystemKind::MerminSquare) {
        contexts = mermin_square().contexts;
        m = 2;
    } else {
        contexts = mermin_pentagram().contexts;
        m = 3;
    }
    std::vector<Ray> rays;
    for (const MagicContext& ctx : contexts) {
        MaximalCommutingSet mcs = mcs_from_operators(ctx.operators);
        std::vector<Ray> eigen = mcs_eigenrays(mcs);
        rays.insert(rays.end(), eigen.begin(), eigen.end());
    }
    ProofSystem system;
    system.qubit_count = m;
    system.catalog = catalog_from_rays(rays);
    system.graph = build_graph(system.catalog, threads);
    system.bases = enumerate_bases(system.graph, 1u << m);
    system.matrix = incidence(system.catalog, system.bases);
    return system;
}

namespace {

// ascending-count comparison over the union of keys (missing key = 0)
bool histogram_less(const DistanceHistogram& a, const DistanceHistogram& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end()) return false;       // b ran out: b has 0 where a > 0
        if (ia == a.end()) return true;        // a has 0 where b > 0
        if (ia->first < ib->first) return false;  // a counts a key b lacks (b = 0)
        if (ib->first < ia->first) return true;
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    return false;
}

std::string sharing_certificate(const ParityProof& proof,
                                const std::vector<OrthogonalBasis>& bases) {
    const std::uint32_t l = proof.l();
    std::vector<std::uint8_t> labels(std::size_t(l) * l, 0);
    for (std::uint32_t i = 0; i < l; ++i) {
        const auto& a = bases[proof.basis_ids[i]].ray_ids;
        for (std::uint32_t j = i + 1; j < l; ++j) {
            const auto& b = bases[proof.basis_ids[j]].ray_ids;
            std::uint8_t shared = 0;
            for (std::uint32_t r : a)
                if (std::binary_search(b.begin(), b.end(), r)) ++shared;
            labels[std::size_t(i) * l + j] = shared;
            labels[std::size_t(j) * l + i] = shared;
        }
    }
    return labeled_certificate(l, labels);
}

}  // namespace

Census enumerate_parity_proofs(const ProofSystem& system, unsigned threads) {
    GF2Kernel kernel = parity_kernel(system.matrix);
    if (kernel.dimension > 30)
        throw CapabilityError("parity proof enumeration supports kernel dimension up to 30");

    // walk all kernel vectors in Gray-code order, keep odd-weight ones
    std::vector<ParityProof> proofs;
    std::uint64_t combo = 0;
    const std::uint64_t limit = 1ull << kernel.dimension;
    std::vector<std::uint64_t> union_words(system.matrix.stride);
    for (std::uint64_t g = 1; g < limit; ++g) {
        combo ^= kernel.combos[std::countr_zero(g)];
        if (std::popcount(combo) % 2 == 0) continue;
        ParityProof proof;
        std::fill(union_words.begin(), union_words.end(), 0);
        std::uint64_t rest = combo;
        while (rest) {
            std::uint32_t b = (std::uint32_t)std::countr_zero(rest);
            rest &= rest - 1;
            proof.basis_ids.push_back(b);
            const std::uint64_t* column = system.matrix.col(b);
            for (std::uint32_t w = 0; w < system.matrix.stride; ++w) union_words[w] |= column[w];
        }
        for (std::uint32_t w = 0; w < system.matrix.stride; ++w) {
            std::uint64_t word = union_words[w];
            while (word) {
                proof.ray_ids.push_back(w * 64 + (std::uint32_t)std::countr_zero(word));
                word &= word - 1;
            }
        }
        proofs.push_back(std::move(proof));
    }
    std::sort(proofs.begin(), proofs.end(),
              [](const ParityProof& a, const ParityProof& b) { return a.basis_ids < b.basis_ids; });

    // pairwise basis distances once, then histogram + sharing certificate per proof
    const std::uint32_t nb = system.matrix.basis_count;
    std::vector<Rational> d2(std::size_t(nb) * nb, Rational(0));
    parallel_for(nb, threads, [&](std::size_t i) {
        for (std::uint32_t j = 0; j < nb; ++j)
            if (j != i)
                d2[i * nb + j] = bengtsson_d2(system.bases[i], system.bases[j], system.catalog);
    });
    std::vector<DistanceHistogram> histograms(proofs.size());
    std::vector<std::string> certificates(proofs.size());
    parallel_for(proofs.size(), threads, [&](std::size_t p) {
        const auto& ids = proofs[p].basis_ids;
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j)
                ++histograms[p][d2[std::size_t(ids[i]) * nb + ids[j]]];
        certificates[p] = sharing_certificate(proofs[p], system.bases);
    });

    // group by (v, l, histogram)
    struct ClassKey {
        std::uint32_t v, l;
        DistanceHistogram hist;
        bool operator<(const ClassKey& o) const {
            if (v != o.v) return v > o.v;  // descending v
            if (l != o.l) return l < o.l;
            if (histogram_less(hist, o.hist)) return true;
            if (histogram_less(o.hist, hist)) return false;
            return false;
        }
    };
    std::map<ClassKey, std::vector<std::size_t>> groups;
    for (std::size_t p = 0; p < proofs.size(); ++p)
        groups[ClassKey{proofs[p].v(), proofs[p].l(), histograms[p]}].push_back(p);

    Census census;
    for (const auto& [key, members] : groups) {
        ProofClass cls;
        cls.v = key.v;
        cls.l = key.l;
        cls.histogram = key.hist;
        cls.label = std::to_string(key.v) + "-" + std::to_string(key.l);
        for (std::size_t p : members) cls.proofs.push_back(proofs[p]);
        census.classes.push_back(std::move(cls));
    }
    // suffix classes sharing (v, l) in their listed (ascending histogram) order
    for (std::size_t i = 0; i < census.classes.size();) {
        std::size_t j = i;
        while (j < census.classes.size() && census.classes[j].v == census.classes[i].v &&
               census.classes[j].l == census.classes[i].l)
            ++j;
        if (j - i > 1)
            for (std::size_t k = i; k < j; ++k)
                census.classes[k].label.push_back((char)('A' + (k - i)));
        i = j;
    }

    // the histogram partition must coincide with the sharing-multigraph
    // certificate partition within each (v, l) group
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::map<std::string, std::string>> seen;
    for (const auto& [key, members] : groups) {
        const std::string& first_cert = certificates[members.front()];
        for (std::size_t p : members)
            if (certificates[p] != first_cert)
                throw StructureError("proofs with equal histograms have non-isomorphic "
                                     "sharing multigraphs");
        auto& by_cert = seen[{key.v, key.l}];
        std::string hist_id;
        for (const auto& [dist, count] : key.hist)
            hist_id += dist.to_string() + ":" + std::to_string(count) + ";";
        auto [it, inserted] = by_cert.emplace(first_cert, hist_id);
        if (!inserted && it->second != hist_id)
            throw StructureError("proofs with different histograms share a "
                                 "sharing-multigraph certificate");
    }
    return census;
}

namespace {

struct ColoringInstance {
    std::vector<std::uint32_t> rays;                     // global ids, sorted
    std::vector<std::uint64_t> member_masks;             // one per basis, local bits
    std::vector<std::uint64_t> ortho;                    // one per local ray
};

ColoringInstance make_instance(const std::vector<std::uint32_t>& ray_ids,
                               const std::vector<std::vector<std::uint32_t>>& basis_members,
                               const ProofSystem& system) {
    ColoringInstance inst;
    inst.rays = ray_ids;
    std::sort(inst.rays.begin(), inst.rays.end());
    inst.rays.erase(std::unique(inst.rays.begin(), inst.rays.end()), inst.rays.end());
    if (inst.rays.size() > 64)
        throw CapabilityError("colorability search supports up to 64 rays");
    auto local = [&](std::uint32_t global) {
        auto it = std::lower_bound(inst.rays.begin(), inst.rays.end(), global);
        if (it == inst.rays.end() || *it != global)
            throw PreconditionError("basis ray missing from the ray set");
        return (std::uint32_t)(it - inst.rays.begin());
    };
    for (const auto& members : basis_members) {
        std::uint64_t mask = 0;
        for (std::uint32_t r : members) mask |= 1ull << local(r);
        inst.member_masks.push_back(mask);
    }
    inst.ortho.assign(inst.rays.size(), 0);
    for (std::size_t i = 0; i < inst.rays.size(); ++i)
        for (std::size_t j = 0; j < inst.rays.size(); ++j)
            if (i != j && system.graph.adjacent(inst.rays[i], inst.rays[j]))
                inst.ortho[i] |= 1ull << j;
    return inst;
}

// exactly one true ray per basis, no two orthogonal rays both true
bool solve_coloring(const ColoringInstance& inst, std::uint64_t true_mask,
                    std::uint64_t false_mask, std::vector<std::uint32_t>& chosen) {
    int best = -1;
    std::uint64_t best_cand = 0;
    int best_count = 65;
    for (std::size_t b = 0; b < inst.member_masks.size(); ++b) {
        std::uint64_t members = inst.member_masks[b];
        if (members & true_mask) continue;
        std::uint64_t cand = members & ~false_mask;
        int count = std::popcount(cand);
        if (count == 0) return false;
        if (count < best_count) {
            best_count = count;
            best = (int)b;
            best_cand = cand;
        }
    }
    if (best < 0) return true;
    while (best_cand) {
        std::uint32_t r = (std::uint32_t)std::countr_zero(best_cand);
        best_cand &= best_cand - 1;
        chosen.push_back(r);
        if (solve_coloring(inst, true_mask | (1ull << r), false_mask | inst.ortho[r], chosen))
            return true;
        chosen.pop_back();
    }
    return false;
}

std::optional<std::vector<std::uint32_t>> color_instance(const ColoringInstance& inst) {
    std::vector<std::uint32_t> chosen;
    if (!solve_coloring(inst, 0, 0, chosen)) return std::nullopt;
    std::vector<std::uint32_t> witness;
    for (std::uint32_t r : chosen) witness.push_back(inst.rays[r]);
    std::sort(witness.begin(), witness.end());
    return witness;
}

std::vector<std::vector<std::uint32_t>> members_of(const std::vector<std::uint32_t>& basis_ids,
                                                   const ProofSystem& system) {
    std::vector<std::vector<std::uint32_t>> members;
    for (std::uint32_t b : basis_ids) members.push_back(system.bases.at(b).ray_ids);
    return members;
}

std::vector<std::uint32_t> union_of(const std::vector<std::vector<std::uint32_t>>& members) {
    std::vector<std::uint32_t> rays;
    for (const auto& m : members) rays.insert(rays.end(), m.begin(), m.end());
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    return rays;
}

}  // namespace

std::optional<std::vector<std::uint32_t>> ks_coloring(const std::vector<std::uint32_t>& ray_ids,
                                                      const std::vector<std::uint32_t>& basis_ids,
                                                      const ProofSystem& system) {
    return color_instance(make_instance(ray_ids, members_of(basis_ids, system), system));
}

bool is_ks_colorable(const std::vector<std::uint32_t>& ray_ids,
                     const std::vector<std::uint32_t>& basis_ids, const ProofSystem& system) {
    return ks_coloring(ray_ids, basis_ids, system).has_value();
}

CriticalityReport criticality(const std::vector<std::uint32_t>& basis_ids,
                              const ProofSystem& system, IncompleteBasisPolicy policy) {
    const auto members = members_of(basis_ids, system);
    const auto rays = union_of(members);
    if (color_instance(make_instance(rays, members, system)).has_value())
        throw PreconditionError("criticality requires a non-colorable system");

    CriticalityReport report;
    report.basis_critical = true;
    for (std::size_t skip = 0; skip < basis_ids.size(); ++skip) {
        std::vector<std::vector<std::uint32_t>> remaining;
        for (std::size_t b = 0; b < members.size(); ++b)
            if (b != skip) remaining.push_back(members[b]);
        auto sub_rays = union_of(remaining);
        if (!color_instance(make_instance(sub_rays, remaining, system)).has_value()) {
            report.basis_critical = false;
            break;
        }
    }

    report.ray_critical = true;
    for (std::uint32_t deleted : rays) {
        std::vector<std::vector<std::uint32_t>> surviving;
        for (const auto& m : members) {
            if (std::binary_search(m.begin(), m.end(), deleted)) {
                if (policy == IncompleteBasisPolicy::Enforce) {
                    std::vector<std::uint32_t> trimmed;
                    for (std::uint32_t r : m)
                        if (r != deleted) trimmed.push_back(r);
                    surviving.push_back(std::move(trimmed));
                }
                // Relax: the incomplete basis imposes no exactly-one constraint
            } else {
                surviving.push_back(m);
            }
        }
        std::vector<std::uint32_t> sub_rays;
        for (std::uint32_t r : rays)
            if (r != deleted) sub_rays.push_back(r);
        if (!color_instance(make_instance(sub_rays, surviving, system)).has_value()) {
            report.ray_critical = false;
            break;
        }
    }
    return report;
}

CriticalityReport criticality(const ParityProof& proof, const ProofSystem& system,
                              IncompleteBasisPolicy policy) {
    return criticality(proof.basis_ids, system, policy);
}

}  // namespace pauliray
