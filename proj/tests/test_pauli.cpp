#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "pauliray/pauli.hpp"

using namespace pauliray;

namespace {

PauliOperator random_pauli(std::mt19937_64& rng, unsigned m) {
    std::uniform_int_distribution<std::uint32_t> bits(0, (1u << m) - 1);
    std::uniform_int_distribution<unsigned> phase(0, 3);
    PauliOperator op;
    op.m = m;
    op.x = bits(rng);
    op.z = bits(rng);
    op.s = phase(rng);
    return op;
}

}  // namespace

TEST_CASE("letter strings round-trip") {
    for (const char* text : {"+X", "-Z", "+iY", "-iI", "+XZ", "-YY", "+iZII", "+XYZX"}) {
        PauliOperator op = pauli_from_letters(text);
        CHECK(to_string(op) == text);
    }
    CHECK(to_string(pauli_from_letters("XZ")) == "+XZ");
    CHECK(pauli_from_letters("Y") == PauliOperator{1, 1, 1, 1});  // Y = i * X * Z
    CHECK_THROWS_AS(pauli_from_letters("XQ"), PreconditionError);
    CHECK_THROWS_AS(pauli_from_letters(""), PreconditionError);
}

TEST_CASE("letters are Hermitian and map to the right symplectic bits") {
    PauliOperator zx = pauli_from_letters("ZX");
    // qubit 1 is the most significant bit
    CHECK(zx.x == 0b01);
    CHECK(zx.z == 0b10);
    CHECK(is_hermitian(zx));
    CHECK(is_hermitian(pauli_from_letters("-YY")));
    CHECK_FALSE(is_hermitian(pauli_from_letters("+iX")));
}

TEST_CASE("products, commutation, and Hermiticity match dense matrices") {
    std::mt19937_64 rng(101);
    for (unsigned m = 1; m <= 3; ++m) {
        for (int trial = 0; trial < 60; ++trial) {
            PauliOperator a = random_pauli(rng, m), b = random_pauli(rng, m);
            oracle::Mat da = oracle::dense(a), db = oracle::dense(b);
            CHECK(oracle::dense(pauli_product(a, b)) == oracle::mat_mul(da, db));
            CHECK(commutes(a, b) == (oracle::mat_mul(da, db) == oracle::mat_mul(db, da)));
            CHECK(is_hermitian(a) == (da == oracle::conj_transpose(da)));
        }
    }
}

TEST_CASE("subset products index by bit mask") {
    std::vector<PauliOperator> gens{pauli_from_letters("XI"), pauli_from_letters("IZ"),
                                    pauli_from_letters("ZX")};
    std::vector<PauliOperator> prods = subset_products(gens);
    REQUIRE(prods.size() == 8);
    CHECK(prods[0] == pauli_identity(2));
    CHECK(prods[1] == gens[0]);
    CHECK(prods[2] == gens[1]);
    CHECK(prods[4] == gens[2]);
    CHECK(prods[3] == pauli_product(gens[0], gens[1]));
    CHECK(prods[7] == pauli_product(pauli_product(gens[0], gens[1]), gens[2]));
}

TEST_CASE("maximal commuting set counts follow the closed form") {
    CHECK(mcs_count(1) == 3);
    CHECK(mcs_count(2) == 15);
    CHECK(mcs_count(3) == 135);
    CHECK(mcs_count(4) == 2295);
    CHECK(mcs_count(5) == 75735);
}

TEST_CASE("enumerated sets are distinct, Hermitian, commuting, and closed") {
    for (unsigned m = 1; m <= 3; ++m) {
        std::vector<MaximalCommutingSet> sets = enumerate_mcs(m);
        CHECK(sets.size() == mcs_count(m));
        std::set<std::vector<std::uint32_t>> seen;
        for (const auto& mcs : sets) {
            REQUIRE(mcs.generators.size() == m);
            REQUIRE(mcs.members.size() == (1u << m) - 1);
            std::vector<std::uint32_t> keys;
            for (const auto& op : mcs.members) {
                CHECK(is_hermitian(op));
                CHECK(op.x + op.z != 0);  // nontrivial
                keys.push_back(pauli_key(op));
            }
            CHECK(seen.insert(keys).second);  // no duplicate set
            for (std::size_t i = 0; i < mcs.members.size(); ++i)
                for (std::size_t j = i + 1; j < mcs.members.size(); ++j)
                    CHECK(commutes(mcs.members[i], mcs.members[j]));
            // closure: any product of two members is +- another member (or identity)
            const auto& a = mcs.members[0];
            for (const auto& b : mcs.members) {
                PauliOperator p = pauli_product(a, b);
                if (p.x == 0 && p.z == 0) continue;
                bool found = false;
                for (const auto& c : mcs.members) found = found || pauli_key(c) == pauli_key(p);
                CHECK(found);
            }
        }
    }
}

TEST_CASE("mcs_from_operators rebuilds an enumerated set") {
    std::vector<MaximalCommutingSet> sets = enumerate_mcs(2);
    for (const auto& mcs : sets) {
        MaximalCommutingSet rebuilt = mcs_from_operators(mcs.generators);
        REQUIRE(rebuilt.members.size() == mcs.members.size());
        for (std::size_t i = 0; i < mcs.members.size(); ++i)
            CHECK(rebuilt.members[i] == mcs.members[i]);
    }
    // operators that do not span a Lagrangian subspace are rejected
    CHECK_THROWS_AS(
        mcs_from_operators({pauli_from_letters("XI"), pauli_from_letters("XI")}),
        PreconditionError);
    CHECK_THROWS_AS(
        mcs_from_operators({pauli_from_letters("XI"), pauli_from_letters("ZI")}),
        PreconditionError);
}

TEST_CASE("magic configuration signs match the dense product") {
    MerminSquare square = mermin_square();
    REQUIRE(square.contexts.size() == 6);
    std::vector<int> square_signs = verify_magic(square.contexts);
    MerminPentagram pentagram = mermin_pentagram();
    REQUIRE(pentagram.contexts.size() == 5);
    std::vector<int> pentagram_signs = verify_magic(pentagram.contexts);

    // five +1 and one -1 for the square; four +1 and one -1 for the pentagram
    CHECK(square_signs == std::vector<int>{1, 1, 1, 1, 1, -1});
    CHECK(pentagram_signs == std::vector<int>{1, 1, 1, 1, -1});

    auto check_context = [](const MagicContext& ctx, int sign) {
        oracle::Mat prod = oracle::dense(ctx.operators[0]);
        for (std::size_t i = 1; i < ctx.operators.size(); ++i)
            prod = oracle::mat_mul(prod, oracle::dense(ctx.operators[i]));
        CHECK(oracle::is_scaled_identity(prod, {sign, 0}));
        CHECK(ctx.expected_sign == sign);
    };
    for (std::size_t i = 0; i < square.contexts.size(); ++i)
        check_context(square.contexts[i], square_signs[i]);
    for (std::size_t i = 0; i < pentagram.contexts.size(); ++i)
        check_context(pentagram.contexts[i], pentagram_signs[i]);
}

TEST_CASE("square rows and columns read off the stored grid") {
    MerminSquare square = mermin_square();
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            CHECK(square.contexts[r].operators[c] == square.grid[r][c]);      // row contexts
            CHECK(square.contexts[3 + c].operators[r] == square.grid[r][c]);  // column contexts
        }
}

TEST_CASE("verify_magic rejects malformed contexts") {
    MagicContext bad;
    bad.operators = {pauli_from_letters("XI"), pauli_from_letters("ZI")};  // anticommute
    CHECK_THROWS_AS(verify_magic({bad}), PreconditionError);
    MagicContext skew;
    skew.operators = {pauli_from_letters("+iXI"), pauli_from_letters("XI")};  // non-Hermitian
    CHECK_THROWS_AS(verify_magic({skew}), PreconditionError);
    MagicContext partial;
    partial.operators = {pauli_from_letters("XX"), pauli_from_letters("YY")};  // product not +-I
    CHECK_THROWS_AS(verify_magic({partial}), StructureError);
}
