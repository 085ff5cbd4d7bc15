#include "pauliray/lattice.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>

namespace pauliray {

std::uint64_t kissing_number(std::uint32_t m) {
    if (m < 1) throw PreconditionError("kissing number needs m >= 1");
    std::uint64_t k = 4;
    for (std::uint32_t i = 2; i <= m; ++i) {
        if (i >= 63) throw CapabilityError("kissing number overflows 64 bits");
        std::uint64_t factor = (1ull << i) + 2;
        if (k > UINT64_MAX / factor) throw CapabilityError("kissing number overflows 64 bits");
        k *= factor;
    }
    return k;
}

BigUint clifford_order(std::uint32_t m) {
    if (m < 1) throw PreconditionError("Clifford order needs m >= 1");
    BigUint order(1);
    order.shl(m * m + m + 1);
    order.mul((1ull << m) - 1);
    for (std::uint32_t j = 1; j < m; ++j) order.mul((1ull << (2 * j)) - 1);
    return order;
}

RationalMatrix gram_matrix(const LatticeBasis& basis) {
    const std::uint32_t n = basis.dimension;
    RationalMatrix g(n, std::vector<Rational>(n, Rational(0)));
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i; j < n; ++j) {
            Rational dot(0);
            for (std::uint32_t k = 0; k < n; ++k) dot += basis.rows[i][k] * basis.rows[j][k];
            g[i][j] = dot;
            g[j][i] = dot;
        }
    return g;
}

RationalMatrix matrix_product(const RationalMatrix& a, const RationalMatrix& b) {
    const std::size_t n = a.size(), p = b.size(), q = p ? b[0].size() : 0;
    for (const auto& row : a)
        if (row.size() != p) throw DimensionMismatch("matrix product shape mismatch");
    RationalMatrix c(n, std::vector<Rational>(q, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < p; ++k) {
            if (a[i][k] == Rational(0)) continue;
            for (std::size_t j = 0; j < q; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

RationalMatrix matrix_inverse(const RationalMatrix& m) {
    const std::size_t n = m.size();
    RationalMatrix a = m;
    RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw DimensionMismatch("matrix inverse needs a square matrix");
        inv[i][i] = Rational(1);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == Rational(0)) ++pivot;
        if (pivot == n) throw PreconditionError("matrix is singular");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        Rational lead = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= lead;
            inv[col][j] /= lead;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == Rational(0)) continue;
            Rational f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

Rational matrix_determinant(RationalMatrix m) {
    const std::size_t n = m.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        if (m[col].size() != n) throw DimensionMismatch("determinant needs a square matrix");
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == Rational(0)) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == Rational(0)) continue;
            Rational f = m[r][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
        }
    }
    return det;
}

namespace {

// --- integer construction of the 16-dimensional Barnes-Wall lattice ---
// Integer model: x in Z^16 with x mod 2 in the first-order length-16
// Reed-Muller code and coordinate sum divisible by 4 (min norm 8,
// determinant 2^24).  The published scaling (min 4, det 256) is reached by
// the exact rational similarity K = blockdiag([[1/2,1/2],[1/2,-1/2]] x 8),
// K K^T = I/2.

using IntRow = std::array<std::int64_t, 16>;

std::int64_t dot16(const IntRow& a, const IntRow& b) {
    std::int64_t s = 0;
    for (int k = 0; k < 16; ++k) s += a[k] * b[k];
    return s;
}

std::vector<IntRow> bw16_spanning_rows() {
    std::vector<IntRow> rows;
    // weight-8 codeword rows: the four hyperplane indicators and the
    // complement of the first one (together they span the code)
    for (int j = 0; j < 4; ++j) {
        IntRow r{};
        for (int i = 0; i < 16; ++i) r[i] = (i >> j) & 1;
        rows.push_back(r);
    }
    {
        IntRow r{};
        for (int i = 0; i < 16; ++i) r[i] = 1 - (i & 1);
        rows.push_back(r);
    }
    // doubled even-sum sublattice: 2(e_i - e_{i+1}) and 2(e_0 + e_1)
    for (int i = 0; i < 15; ++i) {
        IntRow r{};
        r[i] = 2;
        r[i + 1] = -2;
        rows.push_back(r);
    }
    {
        IntRow r{};
        r[0] = 2;
        r[1] = 2;
        rows.push_back(r);
    }
    return rows;
}

// Reduce a spanning set to a triangular basis by column-wise gcd steps.
std::vector<IntRow> triangular_basis(std::vector<IntRow> rows) {
    std::vector<IntRow> basis;
    std::size_t start = 0;
    for (int col = 0; col < 16; ++col) {
        while (true) {
            std::size_t nonzero = rows.size();
            for (std::size_t r = start; r < rows.size(); ++r)
                if (rows[r][col] != 0 && (nonzero == rows.size() ||
                                          std::llabs(rows[r][col]) < std::llabs(rows[nonzero][col])))
                    nonzero = r;
            if (nonzero == rows.size()) break;  // column exhausted below start
            std::swap(rows[start], rows[nonzero]);
            bool reduced_all = true;
            for (std::size_t r = start + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                std::int64_t q = rows[r][col] / rows[start][col];
                for (int k = 0; k < 16; ++k) rows[r][k] -= q * rows[start][k];
                if (rows[r][col] != 0) reduced_all = false;
            }
            if (reduced_all) {
                basis.push_back(rows[start]);
                ++start;
                break;
            }
        }
    }
    if (basis.size() != 16) throw StructureError("spanning rows failed to triangularize");
    return basis;
}

// Pairwise norm reduction: replace b_i by b_i - q b_j whenever that is
// strictly shorter.  Terminates because the total norm strictly decreases.
void reduce_rows(std::vector<IntRow>& rows) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t j = 0; j < rows.size(); ++j) {
                if (i == j) continue;
                std::int64_t num = dot16(rows[i], rows[j]);
                std::int64_t den = dot16(rows[j], rows[j]);
                std::int64_t q = (2 * num + (num >= 0 ? den : -den)) / (2 * den);
                if (q == 0) continue;
                IntRow candidate = rows[i];
                for (int k = 0; k < 16; ++k) candidate[k] -= q * rows[j][k];
                if (dot16(candidate, candidate) < dot16(rows[i], rows[i])) {
                    rows[i] = candidate;
                    changed = true;
                }
            }
        }
    }
}

LatticeBasis bw16_basis() {
    std::vector<IntRow> rows = triangular_basis(bw16_spanning_rows());
    std::int64_t det = 1;
    for (int i = 0; i < 16; ++i) det *= rows[i][i];
    if (std::llabs(det) != (1ll << 12))
        throw StructureError("unexpected index for the Barnes-Wall integer model");
    reduce_rows(rows);

    LatticeBasis basis;
    basis.dimension = 16;
    basis.rows.assign(16, std::vector<Rational>(16, Rational(0)));
    for (int i = 0; i < 16; ++i)
        for (int k = 0; k < 8; ++k) {
            basis.rows[i][2 * k] = Rational(rows[i][2 * k] + rows[i][2 * k + 1], 2);
            basis.rows[i][2 * k + 1] = Rational(rows[i][2 * k] - rows[i][2 * k + 1], 2);
        }
    return basis;
}

}  // namespace

LatticeBasis bw_generator(std::uint32_t n) {
    LatticeBasis basis;
    basis.dimension = n;
    if (n == 4) {
        const std::int64_t rows[4][4] = {
            {1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}};
        for (auto& row : rows) {
            std::vector<Rational> r;
            for (std::int64_t x : row) r.emplace_back(x);
            basis.rows.push_back(std::move(r));
        }
        return basis;
    }
    if (n == 8) {
        basis.rows.assign(8, std::vector<Rational>(8, Rational(0)));
        basis.rows[0][0] = Rational(2);
        for (int i = 1; i < 7; ++i) {
            basis.rows[i][i - 1] = Rational(-1);
            basis.rows[i][i] = Rational(1);
        }
        for (int k = 0; k < 8; ++k) basis.rows[7][k] = Rational(1, 2);
        return basis;
    }
    if (n == 16) return bw16_basis();
    throw PreconditionError("generator matrices available for n in {4, 8, 16}");
}

namespace {

std::int64_t nearest_int(const Rational& r) {
    __int128 num = r.num();
    __int128 den = r.den();
    __int128 twice = 2 * num + den;  // floor((num + den/2) / den) = floor(twice / (2 den))
    __int128 q = twice / (2 * den);
    if (twice < 0 && twice % (2 * den) != 0) --q;
    return (std::int64_t)q;
}

struct MinimalSearch {
    std::uint32_t n;
    std::vector<Rational> diag;                // D_i
    std::vector<std::vector<Rational>> lower;  // L[j][i], j > i
    Rational bound;
    Rational best;
    std::uint64_t count = 0;
    std::vector<std::int64_t> z;
    bool nonzero = false;

    void descend(std::int64_t level, const Rational& partial) {
        if (level < 0) {
            if (!nonzero) return;  // skip the zero vector
            if (count == 0 || partial < best) {
                best = partial;
                count = 1;
            } else if (partial == best) {
                ++count;
            }
            return;
        }
        Rational center(0);
        for (std::uint32_t j = level + 1; j < n; ++j)
            if (z[j] != 0) center += lower[j][level] * Rational(z[j]);
        const std::int64_t zc = nearest_int(-center);
        for (std::int64_t zi = zc;; ++zi) {
            Rational off = center + Rational(zi);
            Rational term = diag[level] * off * off;
            if (partial + term > bound) break;
            step(level, zi, partial + term);
        }
        for (std::int64_t zi = zc - 1;; --zi) {
            Rational off = center + Rational(zi);
            Rational term = diag[level] * off * off;
            if (partial + term > bound) break;
            step(level, zi, partial + term);
        }
    }

    void step(std::int64_t level, std::int64_t zi, const Rational& partial) {
        bool was_nonzero = nonzero;
        z[level] = zi;
        if (zi != 0) nonzero = true;
        descend(level - 1, partial);
        z[level] = 0;
        nonzero = was_nonzero;
    }
};

}  // namespace

MinimalVectorReport minimal_vectors(const LatticeBasis& basis) {
    const std::uint32_t n = basis.dimension;
    if (n == 0) throw PreconditionError("empty lattice basis");
    if (n > 16) throw CapabilityError("minimal vector enumeration supports n <= 16");

    RationalMatrix g = gram_matrix(basis);

    // LDL^T factorization: G = L D L^T with unit lower-triangular L
    MinimalSearch search;
    search.n = n;
    search.diag.assign(n, Rational(0));
    search.lower.assign(n, std::vector<Rational>(n, Rational(0)));
    for (std::uint32_t i = 0; i < n; ++i) {
        Rational d = g[i][i];
        for (std::uint32_t k = 0; k < i; ++k)
            d -= search.lower[i][k] * search.lower[i][k] * search.diag[k];
        if (!(Rational(0) < d)) throw PreconditionError("basis rows are not linearly independent");
        search.diag[i] = d;
        for (std::uint32_t j = i + 1; j < n; ++j) {
            Rational v = g[j][i];
            for (std::uint32_t k = 0; k < i; ++k)
                v -= search.lower[j][k] * search.lower[i][k] * search.diag[k];
            search.lower[j][i] = v / d;
        }
    }

    // every norm <= min_i G_ii is enumerated; the shortest rows witness the bound
    search.bound = g[0][0];
    for (std::uint32_t i = 1; i < n; ++i) search.bound = std::min(search.bound, g[i][i]);
    search.z.assign(n, 0);
    search.descend((std::int64_t)n - 1, Rational(0));

    return MinimalVectorReport{search.best, search.count};
}

OrthogonalTransform make_orthogonal(RationalMatrix entries) {
    const std::size_t n = entries.size();
    for (const auto& row : entries)
        if (row.size() != n) throw DimensionMismatch("orthogonal matrix must be square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational dot(0);
            for (std::size_t k = 0; k < n; ++k) dot += entries[i][k] * entries[j][k];
            if (dot != Rational(i == j ? 1 : 0))
                throw PreconditionError("matrix is not orthogonal");
        }
    return OrthogonalTransform{std::move(entries)};
}

bool is_lattice_automorphism(const LatticeBasis& basis, const OrthogonalTransform& b) {
    if (b.entries.size() != basis.dimension)
        throw DimensionMismatch("transform dimension mismatch");
    RationalMatrix u = matrix_product(matrix_product(basis.rows, b.entries),
                                      matrix_inverse(basis.rows));
    for (const auto& row : u)
        for (const Rational& entry : row)
            if (entry.den() != 1) return false;
    Rational det = matrix_determinant(u);
    return det == Rational(1) || det == Rational(-1);
}

}  // namespace pauliray
