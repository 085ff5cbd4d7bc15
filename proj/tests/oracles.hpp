#pragma once

// Independent reference implementations the tests compare the library
// against.  Everything here is deliberately naive: dense matrix semantics
// for Pauli operators, exhaustive subset / permutation searches, dense GF(2)
// elimination, and a box-bounded lattice point scan.  Slow is fine; these
// only ever run on small inputs.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "pauliray/graph.hpp"
#include "pauliray/lattice.hpp"
#include "pauliray/pauli.hpp"
#include "pauliray/ray.hpp"

namespace oracle {

using pauliray::GaussianInteger;
using Mat = std::vector<std::vector<GaussianInteger>>;

// Dense matrix of i^s * X^x * Z^z straight from the definition:
// Z^z |c> = (-1)^popcount(c & z) |c>, then X^x |c> = |c xor x>.
inline Mat dense(const pauliray::PauliOperator& op) {
    std::uint32_t d = 1u << op.m;
    Mat mat(d, std::vector<GaussianInteger>(d));
    for (std::uint32_t c = 0; c < d; ++c) {
        unsigned flips = std::popcount(c & op.z);
        mat[c ^ op.x][c] = GaussianInteger::unit(op.s + 2 * flips);
    }
    return mat;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    std::size_t n = a.size();
    Mat out(n, std::vector<GaussianInteger>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

inline std::vector<GaussianInteger> apply(const Mat& a, const std::vector<GaussianInteger>& v) {
    std::vector<GaussianInteger> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

inline bool is_scaled_identity(const Mat& a, GaussianInteger scale) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[i][j] != (i == j ? scale : GaussianInteger{})) return false;
    return true;
}

inline Mat conj_transpose(const Mat& a) {
    Mat out(a.size(), std::vector<GaussianInteger>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) out[j][i] = a[i][j].conj();
    return out;
}

// Number of k-cliques by testing every k-subset.  Feasible up to C(24, 4).
inline std::uint64_t count_cliques_subsets(const pauliray::OrthoGraph& g, unsigned k) {
    std::vector<std::uint32_t> pick(k);
    std::uint64_t found = 0;
    auto rec = [&](auto&& self, unsigned depth, std::uint32_t from) -> void {
        if (depth == k) {
            ++found;
            return;
        }
        for (std::uint32_t v = from; v < g.n; ++v) {
            bool ok = true;
            for (unsigned i = 0; i < depth && ok; ++i) ok = g.adjacent(pick[i], v);
            if (!ok) continue;
            pick[depth] = v;
            self(self, depth + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
    return found;
}

// Automorphism count by testing all n! vertex permutations.
inline std::uint64_t count_automorphisms_brute(const pauliray::OrthoGraph& g) {
    std::vector<std::uint32_t> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t found = 0;
    do {
        bool ok = true;
        for (std::uint32_t u = 0; u < g.n && ok; ++u)
            for (std::uint32_t v = u + 1; v < g.n && ok; ++v)
                ok = g.adjacent(u, v) == g.adjacent(perm[u], perm[v]);
        if (ok) ++found;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return found;
}

// Isomorphism test by trying all n! bijections.
inline bool isomorphic_brute(const pauliray::OrthoGraph& a, const pauliray::OrthoGraph& b) {
    if (a.n != b.n) return false;
    std::vector<std::uint32_t> perm(a.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::uint32_t u = 0; u < a.n && ok; ++u)
            for (std::uint32_t v = u + 1; v < a.n && ok; ++v)
                ok = a.adjacent(u, v) == b.adjacent(perm[u], perm[v]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Nullspace dimension of a 0/1 matrix (rows x cols) by dense elimination.
inline std::uint32_t kernel_dimension_dense(std::vector<std::vector<int>> rows) {
    if (rows.empty()) return 0;
    std::size_t cols = rows[0].size();
    std::uint32_t rank = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r][c] != 0)
                for (std::size_t k = 0; k < cols; ++k) rows[r][k] ^= rows[rank][k];
        ++rank;
    }
    return static_cast<std::uint32_t>(cols) - rank;
}

// Minimal nonzero norm and vector count by scanning the full coordinate box
// |z_i|^2 <= C * (G^{-1})_ii with C = min diag(G).  The bound follows from
// Cauchy-Schwarz in the G inner product, so the scan is provably complete.
struct BoxReport {
    pauliray::Rational min_norm;
    std::uint64_t count = 0;
};

inline std::vector<std::int64_t> box_radii(const pauliray::LatticeBasis& basis) {
    using pauliray::Rational;
    pauliray::RationalMatrix gram = pauliray::gram_matrix(basis);
    pauliray::RationalMatrix inv = pauliray::matrix_inverse(gram);
    std::uint32_t n = basis.dimension;
    Rational cap = gram[0][0];
    for (std::uint32_t i = 1; i < n; ++i)
        if (gram[i][i] < cap) cap = gram[i][i];
    std::vector<std::int64_t> radius(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        Rational limit = cap * inv[i][i];
        std::int64_t r = 0;
        while (Rational(r) * Rational(r) < limit) ++r;
        radius[i] = r;
    }
    return radius;
}

inline std::uint64_t box_volume(const pauliray::LatticeBasis& basis) {
    std::uint64_t points = 1;
    for (std::int64_t r : box_radii(basis)) {
        std::uint64_t width = 2 * (std::uint64_t)r + 1;
        if (points > UINT64_MAX / width) return UINT64_MAX;
        points *= width;
    }
    return points;
}

inline BoxReport minimal_vectors_box(const pauliray::LatticeBasis& basis) {
    using pauliray::Rational;
    pauliray::RationalMatrix gram = pauliray::gram_matrix(basis);
    std::vector<std::int64_t> radius = box_radii(basis);
    std::uint32_t n = basis.dimension;
    std::vector<std::int64_t> z(n, 0);
    BoxReport report;
    auto rec = [&](auto&& self, std::uint32_t level) -> void {
        if (level == n) {
            bool zero = std::all_of(z.begin(), z.end(), [](std::int64_t v) { return v == 0; });
            if (zero) return;
            Rational norm(0);
            for (std::uint32_t i = 0; i < n; ++i)
                for (std::uint32_t j = 0; j < n; ++j)
                    norm = norm + Rational(z[i]) * gram[i][j] * Rational(z[j]);
            if (report.count == 0 || norm < report.min_norm) {
                report.min_norm = norm;
                report.count = 1;
            } else if (norm == report.min_norm) {
                ++report.count;
            }
            return;
        }
        for (std::int64_t v = -radius[level]; v <= radius[level]; ++v) {
            z[level] = v;
            self(self, level + 1);
        }
    };
    rec(rec, 0);
    return report;
}

}  // namespace oracle
