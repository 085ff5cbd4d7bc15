#include "pauliray/pauli.hpp"

#include <algorithm>
#include <bit>

namespace pauliray {

namespace {

void check_same_m(const PauliOperator& a, const PauliOperator& b) {
    if (a.m != b.m)
        throw DimensionMismatch("qubit counts differ: " + std::to_string(a.m) + " vs " +
                                std::to_string(b.m));
}

// Symplectic form on keys w = (x << m) | z.
inline unsigned symplectic(std::uint32_t wa, std::uint32_t wb, unsigned m) {
    std::uint32_t mask = (1u << m) - 1;
    std::uint32_t xa = wa >> m, za = wa & mask;
    std::uint32_t xb = wb >> m, zb = wb & mask;
    return (unsigned)(std::popcount(xa & zb) + std::popcount(xb & za)) & 1u;
}

// Hermitian representative of the symplectic class of key w.
PauliOperator hermitian_lift(std::uint32_t w, unsigned m) {
    std::uint32_t mask = (1u << m) - 1;
    PauliOperator op;
    op.m = m;
    op.x = w >> m;
    op.z = w & mask;
    op.s = (unsigned)std::popcount(op.x & op.z) & 1u;
    return op;
}

}  // namespace

PauliOperator pauli_identity(unsigned m) {
    if (m == 0) throw PreconditionError("qubit count must be at least 1");
    return PauliOperator{m, 0, 0, 0};
}

PauliOperator pauli_from_letters(std::string_view text) {
    std::size_t pos = 0;
    unsigned s = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') s += 2;
        ++pos;
    }
    if (pos < text.size() && text[pos] == 'i') {
        s += 1;
        ++pos;
    }
    std::string_view letters = text.substr(pos);
    if (letters.empty() || letters.size() > 16)
        throw PreconditionError("bad operator spelling: '" + std::string(text) + "'");
    unsigned m = (unsigned)letters.size();
    PauliOperator op;
    op.m = m;
    for (unsigned i = 0; i < m; ++i) {
        std::uint32_t bit = 1u << (m - 1 - i);  // leftmost letter = qubit 1 = high bit
        switch (letters[i]) {
            case 'I': break;
            case 'X': op.x |= bit; break;
            case 'Z': op.z |= bit; break;
            case 'Y':
                op.x |= bit;
                op.z |= bit;
                s += 1;  // Y = i * XZ
                break;
            default:
                throw PreconditionError("bad operator spelling: '" + std::string(text) + "'");
        }
    }
    op.s = s & 3u;
    return op;
}

std::string to_string(const PauliOperator& op) {
    unsigned y_count = (unsigned)std::popcount(op.x & op.z);
    unsigned prefix = (op.s + 4 - (y_count & 3u)) & 3u;
    static const char* kPrefix[4] = {"+", "+i", "-", "-i"};
    std::string out = kPrefix[prefix];
    for (unsigned i = 0; i < op.m; ++i) {
        std::uint32_t bit = 1u << (op.m - 1 - i);
        bool xb = op.x & bit, zb = op.z & bit;
        out += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
    }
    return out;
}

PauliOperator pauli_product(const PauliOperator& a, const PauliOperator& b) {
    check_same_m(a, b);
    PauliOperator r;
    r.m = a.m;
    r.x = a.x ^ b.x;
    r.z = a.z ^ b.z;
    r.s = (a.s + b.s + 2u * (unsigned)std::popcount(a.z & b.x)) & 3u;
    return r;
}

bool commutes(const PauliOperator& a, const PauliOperator& b) {
    check_same_m(a, b);
    return ((std::popcount(a.x & b.z) + std::popcount(b.x & a.z)) & 1) == 0;
}

bool is_hermitian(const PauliOperator& a) {
    return ((a.s + (unsigned)std::popcount(a.x & a.z)) & 1u) == 0;
}

std::vector<PauliOperator> subset_products(const std::vector<PauliOperator>& generators) {
    if (generators.empty()) throw PreconditionError("need at least one generator");
    unsigned k = (unsigned)generators.size();
    if (k > 20) throw CapabilityError("too many generators");
    std::vector<PauliOperator> prod(std::size_t(1) << k);
    prod[0] = pauli_identity(generators[0].m);
    for (std::uint32_t mask = 1; mask < prod.size(); ++mask) {
        unsigned low = (unsigned)std::countr_zero(mask);
        prod[mask] = pauli_product(prod[mask & (mask - 1)], generators[low]);
    }
    return prod;
}

std::uint64_t mcs_count(unsigned m) {
    if (m == 0) throw PreconditionError("qubit count must be at least 1");
    if (m > 10) throw CapabilityError("mcs_count overflows 64 bits beyond m = 10");
    std::uint64_t count = 1;
    for (unsigned i = 1; i <= m; ++i) count *= (1ull << i) + 1;
    return count;
}

namespace {

// Builds the canonical set record from a canonical generator chain.
MaximalCommutingSet make_mcs(unsigned m, const std::vector<PauliOperator>& chain) {
    MaximalCommutingSet mcs;
    mcs.m = m;
    mcs.generators = chain;
    auto prods = subset_products(chain);
    mcs.members.assign(prods.begin() + 1, prods.end());
    std::sort(mcs.members.begin(), mcs.members.end(),
              [](const PauliOperator& a, const PauliOperator& b) {
                  return pauli_key(a) < pauli_key(b);
              });
    return mcs;
}

// The canonical chain of a subspace picks, at each step, the smallest key not
// yet spanned.  Enumeration searches over keys with three local conditions
// that characterize exactly those chains: each new key commutes with the
// chain, exceeds its predecessor, and is the minimum of its coset.
void enumerate_mcs_rec(unsigned m, std::vector<std::uint32_t>& chain_keys,
                       std::vector<std::uint32_t>& span,  // all 2^k subset XORs, span[0] = 0
                       std::vector<std::vector<PauliOperator>>& out_chains) {
    if (chain_keys.size() == m) {
        std::vector<PauliOperator> chain;
        chain.reserve(m);
        for (std::uint32_t w : chain_keys) chain.push_back(hermitian_lift(w, m));
        out_chains.push_back(std::move(chain));
        return;
    }
    std::uint32_t limit = 1u << (2 * m);
    std::uint32_t start = chain_keys.empty() ? 1 : chain_keys.back() + 1;
    for (std::uint32_t w = start; w < limit; ++w) {
        bool ok = true;
        for (std::uint32_t g : chain_keys) {
            if (symplectic(w, g, m)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        for (std::size_t i = 1; i < span.size(); ++i) {
            if ((w ^ span[i]) < w) {  // not the least element of its coset
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        std::size_t old_size = span.size();
        for (std::size_t i = 0; i < old_size; ++i) span.push_back(span[i] ^ w);
        chain_keys.push_back(w);
        enumerate_mcs_rec(m, chain_keys, span, out_chains);
        chain_keys.pop_back();
        span.resize(old_size);
    }
}

}  // namespace

std::vector<MaximalCommutingSet> enumerate_mcs(unsigned m) {
    if (m < 1 || m > 5)
        throw CapabilityError("maximal commuting sets supported for 1 <= m <= 5");
    std::vector<std::vector<PauliOperator>> chains;
    std::vector<std::uint32_t> chain_keys;
    std::vector<std::uint32_t> span{0};
    enumerate_mcs_rec(m, chain_keys, span, chains);

    std::vector<MaximalCommutingSet> result;
    result.reserve(chains.size());
    for (const auto& chain : chains) result.push_back(make_mcs(m, chain));
    std::sort(result.begin(), result.end(),
              [](const MaximalCommutingSet& a, const MaximalCommutingSet& b) {
                  for (std::size_t i = 0; i < a.members.size(); ++i) {
                      std::uint32_t ka = pauli_key(a.members[i]), kb = pauli_key(b.members[i]);
                      if (ka != kb) return ka < kb;
                  }
                  return false;
              });
    if (result.size() != mcs_count(m))
        throw StructureError("maximal commuting set enumeration produced " +
                             std::to_string(result.size()) + " sets, expected " +
                             std::to_string(mcs_count(m)));
    return result;
}

MaximalCommutingSet mcs_from_operators(const std::vector<PauliOperator>& ops) {
    if (ops.empty()) throw PreconditionError("need at least one operator");
    unsigned m = ops[0].m;
    for (const auto& op : ops) {
        check_same_m(ops[0], op);
        if (!is_hermitian(op)) throw PreconditionError("operator " + to_string(op) + " is not Hermitian");
    }
    for (std::size_t i = 0; i < ops.size(); ++i)
        for (std::size_t j = i + 1; j < ops.size(); ++j)
            if (!commutes(ops[i], ops[j]))
                throw PreconditionError("operators " + to_string(ops[i]) + " and " +
                                        to_string(ops[j]) + " do not commute");

    // Span of the symplectic keys.
    std::vector<std::uint32_t> span{0};
    for (const auto& op : ops) {
        std::uint32_t w = pauli_key(op);
        if (std::find(span.begin(), span.end(), w) != span.end()) continue;
        std::size_t old_size = span.size();
        for (std::size_t i = 0; i < old_size; ++i) span.push_back(span[i] ^ w);
    }
    if (span.size() != (std::size_t(1) << m))
        throw PreconditionError("operators span a subspace of dimension " +
                                std::to_string(std::countr_zero(span.size())) + ", expected " +
                                std::to_string(m));

    // Greedy canonical chain: smallest key outside the running span.
    std::sort(span.begin(), span.end());
    std::vector<PauliOperator> chain;
    std::vector<std::uint32_t> sub{0};
    while (chain.size() < m) {
        std::uint32_t next = 0;
        for (std::uint32_t w : span) {
            if (w != 0 && std::find(sub.begin(), sub.end(), w) == sub.end()) {
                next = w;
                break;
            }
        }
        std::size_t old_size = sub.size();
        for (std::size_t i = 0; i < old_size; ++i) sub.push_back(sub[i] ^ next);
        chain.push_back(hermitian_lift(next, m));
    }
    return make_mcs(m, chain);
}

MerminSquare mermin_square() {
    MerminSquare sq;
    const char* names[3][3] = {{"ZI", "IZ", "ZZ"}, {"IX", "XI", "XX"}, {"ZX", "XZ", "YY"}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) sq.grid[r][c] = pauli_from_letters(names[r][c]);
    for (int r = 0; r < 3; ++r)
        sq.contexts.push_back({{sq.grid[r][0], sq.grid[r][1], sq.grid[r][2]}, +1});
    for (int c = 0; c < 3; ++c)
        sq.contexts.push_back({{sq.grid[0][c], sq.grid[1][c], sq.grid[2][c]}, c == 2 ? -1 : +1});
    return sq;
}

MerminPentagram mermin_pentagram() {
    MerminPentagram pg;
    for (const char* name : {"ZII", "XII", "IZI", "IXI", "IIZ", "IIX", "ZZZ", "ZXX", "XZX", "XXZ"})
        pg.operators.push_back(pauli_from_letters(name));
    const auto& o = pg.operators;
    const PauliOperator &Z1 = o[0], &X1 = o[1], &Z2 = o[2], &X2 = o[3], &Z3 = o[4], &X3 = o[5];
    const PauliOperator &ZZZ = o[6], &ZXX = o[7], &XZX = o[8], &XXZ = o[9];
    pg.contexts.push_back({{Z1, Z2, Z3, ZZZ}, +1});
    pg.contexts.push_back({{Z1, X2, X3, ZXX}, +1});
    pg.contexts.push_back({{X1, Z2, X3, XZX}, +1});
    pg.contexts.push_back({{X1, X2, Z3, XXZ}, +1});
    pg.contexts.push_back({{ZZZ, ZXX, XZX, XXZ}, -1});
    return pg;
}

std::vector<int> verify_magic(const std::vector<MagicContext>& contexts) {
    std::vector<int> signs;
    signs.reserve(contexts.size());
    for (const auto& ctx : contexts) {
        if (ctx.operators.empty()) throw PreconditionError("empty context");
        for (const auto& op : ctx.operators)
            if (!is_hermitian(op))
                throw PreconditionError("context operator " + to_string(op) + " is not Hermitian");
        for (std::size_t i = 0; i < ctx.operators.size(); ++i)
            for (std::size_t j = i + 1; j < ctx.operators.size(); ++j)
                if (!commutes(ctx.operators[i], ctx.operators[j]))
                    throw PreconditionError("context operators " + to_string(ctx.operators[i]) +
                                            " and " + to_string(ctx.operators[j]) +
                                            " do not commute");
        PauliOperator prod = pauli_identity(ctx.operators[0].m);
        for (const auto& op : ctx.operators) prod = pauli_product(prod, op);
        if (prod.x != 0 || prod.z != 0 || (prod.s & 1u) != 0)
            throw StructureError("context product " + to_string(prod) +
                                 " is not plus or minus the identity");
        signs.push_back(prod.s == 0 ? +1 : -1);
    }
    return signs;
}

}  // namespace pauliray
