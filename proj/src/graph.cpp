#include "pauliray/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <deque>
#include <numeric>

namespace pauliray {

std::uint32_t OrthoGraph::degree(std::uint32_t v) const {
    const std::uint64_t* r = row(v);
    std::uint32_t d = 0;
    for (std::uint32_t w = 0; w < stride; ++w) d += (std::uint32_t)std::popcount(r[w]);
    return d;
}

std::uint64_t OrthoGraph::edge_count() const {
    std::uint64_t total = 0;
    for (std::uint32_t v = 0; v < n; ++v) total += degree(v);
    return total / 2;
}

namespace {

bool rays_orthogonal(const Ray& a, const Ray& b) {
    GaussianInteger inner{};
    for (std::size_t k = 0; k < a.amplitudes.size(); ++k)
        inner += a.amplitudes[k].conj() * b.amplitudes[k];
    return inner.is_zero();
}

}  // namespace

OrthoGraph build_graph(const RayCatalog& catalog, unsigned threads) {
    if (catalog.rays.empty()) throw PreconditionError("catalog is empty");
    OrthoGraph g(catalog.size());
    parallel_for(g.n, threads, [&](std::size_t i) {
        std::uint64_t* r = g.row((std::uint32_t)i);
        for (std::uint32_t j = 0; j < g.n; ++j) {
            if (j == i) continue;
            if (rays_orthogonal(catalog.rays[i], catalog.rays[j])) r[j >> 6] |= 1ull << (j & 63);
        }
    });
    return g;
}

namespace {

void clique_rec(const OrthoGraph& g, std::uint32_t k, std::vector<std::uint32_t>& members,
                std::vector<std::vector<std::uint64_t>>& cand_stack, std::uint32_t depth,
                std::vector<OrthogonalBasis>& out) {
    if (members.size() == k) {
        out.push_back(OrthogonalBasis{members});
        return;
    }
    const auto& cand = cand_stack[depth];
    std::uint32_t remaining = 0;
    for (std::uint64_t w : cand) remaining += (std::uint32_t)std::popcount(w);
    if (members.size() + remaining < k) return;

    auto& next = cand_stack[depth + 1];
    for (std::uint32_t wi = 0; wi < g.stride; ++wi) {
        std::uint64_t word = cand[wi];
        while (word) {
            std::uint32_t v = wi * 64 + (std::uint32_t)std::countr_zero(word);
            word &= word - 1;
            // candidates after v: cand & N(v) & {ids > v}
            const std::uint64_t* nv = g.row(v);
            for (std::uint32_t wj = 0; wj < g.stride; ++wj) {
                std::uint64_t m = cand[wj] & nv[wj];
                if (wj == v >> 6)
                    m &= ~((v & 63) == 63 ? ~0ull : ((1ull << ((v & 63) + 1)) - 1));
                else if (wj < v >> 6)
                    m = 0;
                next[wj] = m;
            }
            members.push_back(v);
            clique_rec(g, k, members, cand_stack, depth + 1, out);
            members.pop_back();
        }
    }
}

}  // namespace

std::vector<OrthogonalBasis> enumerate_bases(const OrthoGraph& g, std::uint32_t clique_size) {
    if (clique_size == 0 || clique_size > g.n) return {};
    std::vector<OrthogonalBasis> out;
    std::vector<std::uint32_t> members;
    std::vector<std::vector<std::uint64_t>> cand_stack(clique_size + 1,
                                                       std::vector<std::uint64_t>(g.stride, 0));
    for (std::uint32_t v = 0; v < g.n; ++v) cand_stack[0][v >> 6] |= 1ull << (v & 63);
    clique_rec(g, clique_size, members, cand_stack, 0, out);
    return out;
}

// ---------------------------------------------------------------------------
// Automorphism search: individualization-refinement with orbit-stabilizer
// counting.  The first root-to-leaf path fixes a branch vertex per level; for
// every other vertex of each target cell an exhaustive (trace-pruned) subtree
// search either produces an automorphism moving the branch vertex there or
// proves none exists.  The group order is the product of the per-level orbit
// sizes.
// ---------------------------------------------------------------------------

namespace {

inline std::uint64_t mix_hash(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 12) + (h >> 4);
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 33;
    return h;
}

struct PartitionState {
    std::vector<std::uint32_t> lab, pos, cstart, clen;
    std::uint64_t trace = 0;
};

class AutSearch {
  public:
    AutSearch(const OrthoGraph& g, double budget_seconds) : g_(g), n_(g.n) {
        if (budget_seconds > 0) {
            has_deadline_ = true;
            deadline_ = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(budget_seconds));
        }
    }

    AutResult run() {
        if (n_ == 0) throw PreconditionError("graph is empty");
        AutResult result;
        result.order = BigUint(1);
        if (n_ == 1) return result;

        init_partition();
        // First path: individualize the front vertex of the first
        // non-singleton cell until the partition is discrete.
        while (true) {
            std::int64_t c = first_nonsingleton();
            if (c < 0) break;
            Level lv;
            lv.snapshot = save();
            lv.target_start = (std::uint32_t)c;
            lv.branch_vertex = lab_[(std::uint32_t)c];
            individualize(lv.branch_vertex);
            lv.trace_after = trace_;
            levels_.push_back(std::move(lv));
        }
        first_leaf_ = lab_;

        for (std::size_t ii = levels_.size(); ii-- > 0;) {
            Level& lv = levels_[ii];
            restore(lv.snapshot);
            std::uint32_t c = lv.target_start;
            std::vector<std::uint32_t> cell(lab_.begin() + c, lab_.begin() + c + clen_[c]);
            std::sort(cell.begin(), cell.end());
            std::vector<std::uint32_t> orbit = orbit_of(lv.branch_vertex);
            for (std::uint32_t w : cell) {
                if (w == lv.branch_vertex) continue;
                if (std::find(orbit.begin(), orbit.end(), w) != orbit.end()) continue;
                restore(lv.snapshot);
                individualize(w);
                if (trace_ == lv.trace_after && match_descend(ii + 1))
                    orbit = orbit_of(lv.branch_vertex);
            }
            result.order.mul(orbit.size());
        }
        result.generators = std::move(generators_);
        return result;
    }

  private:
    struct Level {
        PartitionState snapshot;
        std::uint32_t target_start = 0;
        std::uint32_t branch_vertex = 0;
        std::uint64_t trace_after = 0;
    };

    void check_deadline() {
        if (has_deadline_ && std::chrono::steady_clock::now() > deadline_)
            throw CapabilityError("automorphism search exceeded its time budget");
    }

    void init_partition() {
        lab_.resize(n_);
        pos_.resize(n_);
        cstart_.assign(n_, 0);
        clen_.assign(n_, 0);
        std::iota(lab_.begin(), lab_.end(), 0);
        std::iota(pos_.begin(), pos_.end(), 0);
        clen_[0] = n_;
        trace_ = 0x9e3779b97f4a7c15ull;
        in_queue_.assign(n_, 0);
        queue_.clear();
        queue_.push_back(0);
        in_queue_[0] = 1;
        counts_.resize(n_);
        splitter_mask_.resize(g_.stride);
        refine();
    }

    PartitionState save() const { return PartitionState{lab_, pos_, cstart_, clen_, trace_}; }

    void restore(const PartitionState& s) {
        lab_ = s.lab;
        pos_ = s.pos;
        cstart_ = s.cstart;
        clen_ = s.clen;
        trace_ = s.trace;
        queue_.clear();
        std::fill(in_queue_.begin(), in_queue_.end(), 0);
    }

    std::int64_t first_nonsingleton() const {
        for (std::uint32_t c = 0; c < n_; c += clen_[c])
            if (clen_[c] > 1) return c;
        return -1;
    }

    void individualize(std::uint32_t v) {
        std::uint32_t p = pos_[v];
        std::uint32_t c = cstart_[p];
        std::uint32_t len = clen_[c];
        // move v to the front of its cell
        std::uint32_t other = lab_[c];
        lab_[c] = v;
        lab_[p] = other;
        pos_[v] = c;
        pos_[other] = p;
        clen_[c] = 1;
        clen_[c + 1] = len - 1;
        for (std::uint32_t q = c + 1; q < c + len; ++q) cstart_[q] = c + 1;
        trace_ = mix_hash(trace_, 0xAD00 + c);
        queue_.push_back(c);
        in_queue_[c] = 1;
        refine();
    }

    // Refine to the coarsest equitable partition respecting the queue of
    // pending splitter cells.  Every recorded trace event is a function of
    // positions, counts, and sizes only, never vertex names.
    void refine() {
        while (!queue_.empty()) {
            std::uint32_t s = queue_.front();
            queue_.pop_front();
            in_queue_[s] = 0;
            std::uint32_t slen = clen_[s];
            std::fill(splitter_mask_.begin(), splitter_mask_.end(), 0);
            for (std::uint32_t q = s; q < s + slen; ++q) {
                std::uint32_t v = lab_[q];
                splitter_mask_[v >> 6] |= 1ull << (v & 63);
            }
            trace_ = mix_hash(trace_, 0x5100 + s);
            trace_ = mix_hash(trace_, slen);

            for (std::uint32_t c = 0; c < n_;) {
                std::uint32_t len = clen_[c];
                if (len <= 1) {
                    c += len;
                    continue;
                }
                bool uniform = true;
                std::uint32_t first_count = count_against_splitter(lab_[c]);
                counts_[lab_[c]] = first_count;
                for (std::uint32_t q = c + 1; q < c + len; ++q) {
                    std::uint32_t cnt = count_against_splitter(lab_[q]);
                    counts_[lab_[q]] = cnt;
                    if (cnt != first_count) uniform = false;
                }
                if (uniform) {
                    trace_ = mix_hash(trace_, 0xEE00 + c);
                    trace_ = mix_hash(trace_, first_count);
                    c += len;
                    continue;
                }
                split_cell(c, len);
                c += len;
            }
        }
    }

    std::uint32_t count_against_splitter(std::uint32_t v) const {
        const std::uint64_t* r = g_.row(v);
        std::uint32_t cnt = 0;
        for (std::uint32_t w = 0; w < g_.stride; ++w)
            cnt += (std::uint32_t)std::popcount(r[w] & splitter_mask_[w]);
        return cnt;
    }

    void split_cell(std::uint32_t c, std::uint32_t len) {
        // stable sort the cell by count, carve fragments, queue per the
        // standard rule (all fragments, or all but one largest).
        scratch_.assign(lab_.begin() + c, lab_.begin() + c + len);
        std::stable_sort(scratch_.begin(), scratch_.end(),
                         [&](std::uint32_t a, std::uint32_t b) { return counts_[a] < counts_[b]; });
        bool was_queued = in_queue_[c];
        std::copy(scratch_.begin(), scratch_.end(), lab_.begin() + c);
        trace_ = mix_hash(trace_, 0xF500 + c);

        struct Fragment {
            std::uint32_t start, len, count;
        };
        std::vector<Fragment> fragments;
        std::uint32_t q = c;
        while (q < c + len) {
            std::uint32_t r = q;
            std::uint32_t cnt = counts_[lab_[q]];
            while (r < c + len && counts_[lab_[r]] == cnt) ++r;
            fragments.push_back({q, r - q, cnt});
            trace_ = mix_hash(trace_, cnt);
            trace_ = mix_hash(trace_, r - q);
            q = r;
        }
        for (const auto& f : fragments) {
            clen_[f.start] = f.len;
            for (std::uint32_t p = f.start; p < f.start + f.len; ++p) {
                cstart_[p] = f.start;
                pos_[lab_[p]] = p;
            }
        }
        // queue rule
        std::size_t skip = fragments.size();  // index of the fragment not queued
        if (!was_queued) {
            std::uint32_t best_len = 0;
            for (std::size_t i = 0; i < fragments.size(); ++i) {
                if (fragments[i].len > best_len) {
                    best_len = fragments[i].len;
                    skip = i;
                }
            }
        }
        for (std::size_t i = 0; i < fragments.size(); ++i) {
            std::uint32_t fs = fragments[i].start;
            if (i == skip || in_queue_[fs]) continue;
            queue_.push_back(fs);
            in_queue_[fs] = 1;
        }
    }

    bool match_descend(std::size_t level) {
        check_deadline();
        if (level == levels_.size()) {
            std::vector<std::uint32_t> gamma(n_);
            for (std::uint32_t p = 0; p < n_; ++p) gamma[first_leaf_[p]] = lab_[p];
            if (!is_automorphism(gamma)) return false;
            generators_.push_back(std::move(gamma));
            return true;
        }
        std::int64_t c = first_nonsingleton();
        if (c < 0 || (std::uint32_t)c != levels_[level].target_start) return false;
        PartitionState snap = save();
        std::vector<std::uint32_t> cand(lab_.begin() + c, lab_.begin() + c + clen_[(std::uint32_t)c]);
        std::sort(cand.begin(), cand.end());
        for (std::uint32_t u : cand) {
            individualize(u);
            if (trace_ == levels_[level].trace_after && match_descend(level + 1)) return true;
            restore(snap);
        }
        return false;
    }

    bool is_automorphism(const std::vector<std::uint32_t>& gamma) const {
        for (std::uint32_t u = 0; u < n_; ++u) {
            const std::uint64_t* r = g_.row(u);
            for (std::uint32_t w = 0; w < g_.stride; ++w) {
                std::uint64_t word = r[w];
                while (word) {
                    std::uint32_t v = w * 64 + (std::uint32_t)std::countr_zero(word);
                    word &= word - 1;
                    if (!g_.adjacent(gamma[u], gamma[v])) return false;
                }
            }
        }
        return true;
    }

    std::vector<std::uint32_t> orbit_of(std::uint32_t v) const {
        std::vector<std::uint8_t> seen(n_, 0);
        std::vector<std::uint32_t> orbit{v};
        seen[v] = 1;
        for (std::size_t head = 0; head < orbit.size(); ++head) {
            for (const auto& gen : generators_) {
                std::uint32_t img = gen[orbit[head]];
                if (!seen[img]) {
                    seen[img] = 1;
                    orbit.push_back(img);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        return orbit;
    }

    const OrthoGraph& g_;
    std::uint32_t n_;
    bool has_deadline_ = false;
    std::chrono::steady_clock::time_point deadline_;

    std::vector<std::uint32_t> lab_, pos_, cstart_, clen_;
    std::uint64_t trace_ = 0;
    std::deque<std::uint32_t> queue_;
    std::vector<std::uint8_t> in_queue_;
    std::vector<std::uint32_t> counts_;
    std::vector<std::uint64_t> splitter_mask_;
    std::vector<std::uint32_t> scratch_;

    std::vector<Level> levels_;
    std::vector<std::uint32_t> first_leaf_;
    std::vector<std::vector<std::uint32_t>> generators_;
};

}  // namespace

AutResult analyze_automorphisms(const OrthoGraph& g, double time_budget_seconds) {
    return AutSearch(g, time_budget_seconds).run();
}

BigUint automorphism_order(const OrthoGraph& g) {
    if (g.n > 5000) throw CapabilityError("automorphism order supported up to 5000 vertices");
    return analyze_automorphisms(g).order;
}

// ---------------------------------------------------------------------------
// Canonical certificates for small (optionally edge-labeled, vertex-colored)
// graphs: the lexicographically least leaf serialization over an
// individualization-refinement search tree, with orbit pruning at the root.
// ---------------------------------------------------------------------------

namespace {

void append_u32(std::string& s, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) s.push_back((char)((v >> (8 * i)) & 0xFF));
}

class CertSearch {
  public:
    CertSearch(std::uint32_t n, const std::vector<std::uint8_t>& labels,
               const std::vector<std::uint32_t>& colors)
        : n_(n), labels_(labels), colors_(colors) {}

    std::string run() {
        if (n_ == 0) return std::string("\x00", 1);
        if (n_ > 200) throw CapabilityError("certificates supported up to 200 vertices");
        if (labels_.size() != std::size_t(n_) * n_)
            throw DimensionMismatch("label matrix size mismatch");
        for (std::uint32_t u = 0; u < n_; ++u) {
            if (labels_[std::size_t(u) * n_ + u] != 0)
                throw PreconditionError("label matrix diagonal must be zero");
            for (std::uint32_t v = 0; v < u; ++v)
                if (labels_[std::size_t(u) * n_ + v] != labels_[std::size_t(v) * n_ + u])
                    throw PreconditionError("label matrix must be symmetric");
        }

        build_header_and_remap();
        init_partition();
        uf_parent_.resize(n_);
        std::iota(uf_parent_.begin(), uf_parent_.end(), 0);
        dfs(0);
        return header_ + best_;
    }

  private:
    // Distinct original label/color values go into the header; bodies use
    // dense remapped values so serialization stays byte-compact.
    void build_header_and_remap() {
        std::vector<std::uint8_t> label_values(labels_.begin(), labels_.end());
        std::sort(label_values.begin(), label_values.end());
        label_values.erase(std::unique(label_values.begin(), label_values.end()),
                           label_values.end());
        if (label_values.size() > 16) throw CapabilityError("at most 16 distinct edge labels");
        std::array<std::uint8_t, 256> label_map{};
        for (std::size_t i = 0; i < label_values.size(); ++i) label_map[label_values[i]] = (std::uint8_t)i;
        dense_labels_.resize(labels_.size());
        for (std::size_t i = 0; i < labels_.size(); ++i) dense_labels_[i] = label_map[labels_[i]];
        num_labels_ = (std::uint32_t)label_values.size();

        std::vector<std::uint32_t> color_values(colors_.begin(), colors_.end());
        std::sort(color_values.begin(), color_values.end());
        color_values.erase(std::unique(color_values.begin(), color_values.end()),
                           color_values.end());
        dense_colors_.resize(n_);
        for (std::uint32_t v = 0; v < n_; ++v)
            dense_colors_[v] = (std::uint32_t)(std::lower_bound(color_values.begin(),
                                                                color_values.end(), colors_[v]) -
                                               color_values.begin());

        header_.clear();
        append_u32(header_, n_);
        append_u32(header_, (std::uint32_t)label_values.size());
        for (std::uint8_t lv : label_values) header_.push_back((char)lv);
        append_u32(header_, (std::uint32_t)color_values.size());
        for (std::uint32_t cv : color_values) append_u32(header_, cv);

        pow_.resize(num_labels_);
        pow_[0] = 1;
        for (std::uint32_t i = 1; i < num_labels_; ++i) pow_[i] = pow_[i - 1] * 211u;
    }

    void init_partition() {
        lab_.resize(n_);
        std::iota(lab_.begin(), lab_.end(), 0);
        std::stable_sort(lab_.begin(), lab_.end(), [&](std::uint32_t a, std::uint32_t b) {
            return dense_colors_[a] < dense_colors_[b];
        });
        pos_.resize(n_);
        cstart_.resize(n_);
        clen_.assign(n_, 0);
        std::uint32_t c = 0;
        for (std::uint32_t p = 0; p < n_; ++p) {
            pos_[lab_[p]] = p;
            if (p > 0 && dense_colors_[lab_[p]] != dense_colors_[lab_[p - 1]]) c = p;
            cstart_[p] = c;
        }
        for (std::uint32_t p = 0; p < n_; ++p) ++clen_[cstart_[p]];
        counts_.resize(n_);
        queue_.clear();
        in_queue_.assign(n_, 0);
        for (std::uint32_t p = 0; p < n_; p += clen_[p]) {
            queue_.push_back(p);
            in_queue_[p] = 1;
        }
        refine();
    }

    PartitionState save() const { return PartitionState{lab_, pos_, cstart_, clen_, 0}; }

    void restore(const PartitionState& s) {
        lab_ = s.lab;
        pos_ = s.pos;
        cstart_ = s.cstart;
        clen_ = s.clen;
        queue_.clear();
        std::fill(in_queue_.begin(), in_queue_.end(), 0);
    }

    std::int64_t first_nonsingleton() const {
        for (std::uint32_t c = 0; c < n_; c += clen_[c])
            if (clen_[c] > 1) return c;
        return -1;
    }

    void individualize(std::uint32_t v) {
        std::uint32_t p = pos_[v];
        std::uint32_t c = cstart_[p];
        std::uint32_t len = clen_[c];
        std::uint32_t other = lab_[c];
        lab_[c] = v;
        lab_[p] = other;
        pos_[v] = c;
        pos_[other] = p;
        clen_[c] = 1;
        clen_[c + 1] = len - 1;
        for (std::uint32_t q = c + 1; q < c + len; ++q) cstart_[q] = c + 1;
        queue_.push_back(c);
        in_queue_[c] = 1;
        refine();
    }

    void refine() {
        while (!queue_.empty()) {
            std::uint32_t s = queue_.front();
            queue_.pop_front();
            in_queue_[s] = 0;
            std::uint32_t slen = clen_[s];

            for (std::uint32_t c = 0; c < n_;) {
                std::uint32_t len = clen_[c];
                if (len <= 1) {
                    c += len;
                    continue;
                }
                bool uniform = true;
                unsigned __int128 first_count = weighted_count(lab_[c], s, slen);
                counts_[lab_[c]] = first_count;
                for (std::uint32_t q = c + 1; q < c + len; ++q) {
                    unsigned __int128 cnt = weighted_count(lab_[q], s, slen);
                    counts_[lab_[q]] = cnt;
                    if (cnt != first_count) uniform = false;
                }
                if (!uniform) split_cell(c, len);
                c += len;
            }
        }
    }

    unsigned __int128 weighted_count(std::uint32_t v, std::uint32_t s, std::uint32_t slen) const {
        unsigned __int128 total = 0;
        const std::uint8_t* lrow = dense_labels_.data() + std::size_t(v) * n_;
        for (std::uint32_t q = s; q < s + slen; ++q) {
            std::uint32_t u = lab_[q];
            if (u != v) total += pow_[lrow[u]];
        }
        return total;
    }

    void split_cell(std::uint32_t c, std::uint32_t len) {
        std::vector<std::uint32_t> cellv(lab_.begin() + c, lab_.begin() + c + len);
        std::stable_sort(cellv.begin(), cellv.end(),
                         [&](std::uint32_t a, std::uint32_t b) { return counts_[a] < counts_[b]; });
        bool was_queued = in_queue_[c];
        std::copy(cellv.begin(), cellv.end(), lab_.begin() + c);

        struct Fragment {
            std::uint32_t start, len;
        };
        std::vector<Fragment> fragments;
        std::uint32_t q = c;
        while (q < c + len) {
            std::uint32_t r = q;
            unsigned __int128 cnt = counts_[lab_[q]];
            while (r < c + len && counts_[lab_[r]] == cnt) ++r;
            fragments.push_back({q, r - q});
            q = r;
        }
        for (const auto& f : fragments) {
            clen_[f.start] = f.len;
            for (std::uint32_t p = f.start; p < f.start + f.len; ++p) {
                cstart_[p] = f.start;
                pos_[lab_[p]] = p;
            }
        }
        std::size_t skip = fragments.size();
        if (!was_queued) {
            std::uint32_t best_len = 0;
            for (std::size_t i = 0; i < fragments.size(); ++i) {
                if (fragments[i].len > best_len) {
                    best_len = fragments[i].len;
                    skip = i;
                }
            }
        }
        for (std::size_t i = 0; i < fragments.size(); ++i) {
            std::uint32_t fs = fragments[i].start;
            if (i == skip || in_queue_[fs]) continue;
            queue_.push_back(fs);
            in_queue_[fs] = 1;
        }
    }

    void dfs(std::uint32_t depth) {
        std::int64_t c = first_nonsingleton();
        if (c < 0) {
            process_leaf();
            return;
        }
        PartitionState snap = save();
        std::vector<std::uint32_t> cand(lab_.begin() + c, lab_.begin() + c + clen_[(std::uint32_t)c]);
        std::sort(cand.begin(), cand.end());
        std::vector<std::uint32_t> tried_roots;
        for (std::uint32_t u : cand) {
            if (depth == 0) {
                bool pruned = false;
                for (std::uint32_t t : tried_roots)
                    if (uf_find(t) == uf_find(u)) {
                        pruned = true;
                        break;
                    }
                if (pruned) continue;
                tried_roots.push_back(u);
            }
            individualize(u);
            dfs(depth + 1);
            restore(snap);
        }
    }

    void process_leaf() {
        std::string body;
        body.reserve(n_ + std::size_t(n_) * (n_ - 1) / 2);
        for (std::uint32_t p = 0; p < n_; ++p) body.push_back((char)dense_colors_[lab_[p]]);
        for (std::uint32_t p = 0; p < n_; ++p)
            for (std::uint32_t q = p + 1; q < n_; ++q)
                body.push_back((char)dense_labels_[std::size_t(lab_[p]) * n_ + lab_[q]]);
        if (best_.empty() || body < best_) {
            best_ = std::move(body);
            best_leaf_ = lab_;
        } else if (body == best_) {
            // two leaves with equal serializations induce an automorphism
            std::vector<std::uint32_t> gamma(n_);
            for (std::uint32_t p = 0; p < n_; ++p) gamma[best_leaf_[p]] = lab_[p];
            if (preserves_labels(gamma))
                for (std::uint32_t v = 0; v < n_; ++v) uf_union(v, gamma[v]);
        }
    }

    bool preserves_labels(const std::vector<std::uint32_t>& gamma) const {
        for (std::uint32_t u = 0; u < n_; ++u) {
            if (dense_colors_[gamma[u]] != dense_colors_[u]) return false;
            for (std::uint32_t v = u + 1; v < n_; ++v)
                if (dense_labels_[std::size_t(gamma[u]) * n_ + gamma[v]] !=
                    dense_labels_[std::size_t(u) * n_ + v])
                    return false;
        }
        return true;
    }

    std::uint32_t uf_find(std::uint32_t v) {
        while (uf_parent_[v] != v) {
            uf_parent_[v] = uf_parent_[uf_parent_[v]];
            v = uf_parent_[v];
        }
        return v;
    }
    void uf_union(std::uint32_t a, std::uint32_t b) {
        a = uf_find(a);
        b = uf_find(b);
        if (a != b) uf_parent_[a] = b;
    }

    std::uint32_t n_;
    const std::vector<std::uint8_t>& labels_;
    const std::vector<std::uint32_t>& colors_;
    std::vector<std::uint8_t> dense_labels_;
    std::vector<std::uint32_t> dense_colors_;
    std::uint32_t num_labels_ = 0;
    std::vector<unsigned __int128> pow_;
    std::string header_;

    std::vector<std::uint32_t> lab_, pos_, cstart_, clen_;
    std::vector<unsigned __int128> counts_;
    std::deque<std::uint32_t> queue_;
    std::vector<std::uint8_t> in_queue_;

    std::string best_;
    std::vector<std::uint32_t> best_leaf_;
    std::vector<std::uint32_t> uf_parent_;
};

}  // namespace

std::string graph_certificate(const OrthoGraph& g, const std::vector<std::uint32_t>* vertex_colors) {
    if (g.n > 200) throw CapabilityError("certificates supported up to 200 vertices");
    std::vector<std::uint8_t> labels(std::size_t(g.n) * g.n, 0);
    for (std::uint32_t u = 0; u < g.n; ++u)
        for (std::uint32_t v = 0; v < g.n; ++v)
            if (u != v && g.adjacent(u, v)) labels[std::size_t(u) * g.n + v] = 1;
    std::vector<std::uint32_t> colors;
    if (vertex_colors) {
        if (vertex_colors->size() != g.n) throw DimensionMismatch("one color per vertex required");
        colors = *vertex_colors;
    } else {
        colors.assign(g.n, 0);
    }
    return CertSearch(g.n, labels, colors).run();
}

std::string labeled_certificate(std::uint32_t n, const std::vector<std::uint8_t>& labels) {
    std::vector<std::uint32_t> colors(n, 0);
    return CertSearch(n, labels, colors).run();
}

}  // namespace pauliray
