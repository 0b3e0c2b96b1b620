#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nlg/behavior.hpp"
#include "nlg/game.hpp"

using namespace nlg;

namespace {

// Brute-force truth evaluation of the XOR condition, independent of
// predicate()'s internals.
bool xor_condition(const std::vector<int>& c, const std::vector<int>& x,
                   const std::vector<int>& X) {
    int n = static_cast<int>(x.size());
    int lhs = c[0];
    for (int v : x) lhs ^= v;
    int rhs = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) rhs ^= X[i] & X[j];
    for (int i = 0; i < n; ++i) rhs ^= c[i + 1] & X[i];
    return lhs == rhs;
}

SvetlichnyGame s2() { return SvetlichnyGame(2, {0, 0, 0}); }
SvetlichnyGame s3() { return SvetlichnyGame(3, {0, 0, 0, 0}); }

}  // namespace

TEST_CASE("predicate matches direct substitution") {
    CHECK(predicate(s2(), pack_bits({0, 1}), pack_bits({1, 1})));
    CHECK_FALSE(predicate(s2(), pack_bits({0, 0}), pack_bits({1, 1})));
    CHECK(predicate(s3(), pack_bits({1, 1, 1}), pack_bits({1, 1, 1})));
}

TEST_CASE("predicate agrees with brute-force truth table for n<=4") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& game : enumerate_games(n))
            for (Bits in = 0; in < (Bits{1} << n); ++in)
                for (Bits out = 0; out < (Bits{1} << n); ++out)
                    CHECK(predicate(game, out, in) ==
                          xor_condition(game.c, unpack_bits(out, n), unpack_bits(in, n)));
}

TEST_CASE("predicate rejects tuple length mismatch") {
    CHECK_THROWS_AS(predicate(s2(), 0b100, 0), std::invalid_argument);
}

TEST_CASE("to_functional term structure") {
    BellFunctional f3 = to_functional(s3());
    // 8 inputs x 4 winning output tuples, all at 1/8.
    CHECK(f3.nonzero_terms() == 32);
    for (const Rat& c : f3.coeff) CHECK((c == 0 || c == rat(1, 8)));
    CHECK(value(f3, uniform_box(3)) == rat(1, 2));
    CHECK(value(to_functional(s2()), uniform_box(2)) == rat(1, 2));
}

TEST_CASE("xor games have 2^(2n-1) nonzero terms") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& game : enumerate_games(n))
            CHECK(to_functional(game).nonzero_terms() == (std::size_t{1} << (2 * n - 1)));
}

TEST_CASE("trivial complement flips c0 and is an involution") {
    SvetlichnyGame g = s2();
    SvetlichnyGame gc = trivial_complement(g);
    CHECK(gc.c == std::vector<int>{1, 0, 0});
    CHECK(trivial_complement(gc).c == g.c);
}

TEST_CASE("complement predicates are mutually exclusive and exhaustive") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& game : enumerate_games(n)) {
            SvetlichnyGame comp = trivial_complement(game);
            for (Bits in = 0; in < (Bits{1} << n); ++in)
                for (Bits out = 0; out < (Bits{1} << n); ++out)
                    CHECK(predicate(game, out, in) != predicate(comp, out, in));
        }
}

TEST_CASE("relation classifies by coefficient string") {
    SvetlichnyGame a(2, {0, 0, 0}), b(2, {1, 0, 0}), c(2, {0, 1, 0});
    CHECK(relation(a, a) == GameRelation::Equivalent);
    CHECK(relation(a, b) == GameRelation::TriviallyComplementary);
    CHECK(relation(a, c) == GameRelation::Distinct);
    CHECK_THROWS_AS(relation(a, s3()), std::invalid_argument);
}

TEST_CASE("relation is symmetric over all n<=4 pairs") {
    for (int n = 1; n <= 4; ++n) {
        auto games = enumerate_games(n);
        for (const auto& g1 : games)
            for (const auto& g2 : games) CHECK(relation(g1, g2) == relation(g2, g1));
    }
}

TEST_CASE("enumerate_games sizes") {
    CHECK(enumerate_games(1).size() == 4);
    CHECK(enumerate_games(2).size() == 8);
    CHECK(enumerate_games(3).size() == 16);
    CHECK_THROWS_AS(enumerate_games(0), std::domain_error);
    auto games = enumerate_games(3);
    for (std::size_t i = 0; i < games.size(); ++i)
        for (std::size_t j = i + 1; j < games.size(); ++j) CHECK(games[i].c != games[j].c);
}

TEST_CASE("auxiliary values") {
    CHECK(auxiliary_values(s3(), 2, 0, 0).a == 0);
    CHECK(auxiliary_values(s3(), 2, 0, 0).b == 0);
    AuxiliaryValues av = auxiliary_values(s3(), 2, pack_bits({1}), pack_bits({1}));
    CHECK(av.a == 1);
    CHECK(av.b == 1);
    // S4 with c=(0,1,1,1,1), k=2, tail (x3=1,x4=0, X3=1,X4=1):
    // a = x-parity ^ c3*X3 ^ c4*X4 ^ X3*X4 = 1^1^1^1 = 0, b = X3^X4 = 0.
    SvetlichnyGame s4(4, {0, 1, 1, 1, 1});
    AuxiliaryValues av4 = auxiliary_values(s4, 2, pack_bits({1, 0}), pack_bits({1, 1}));
    CHECK(av4.a == 0);
    CHECK(av4.b == 0);
    CHECK_THROWS_AS(auxiliary_values(s3(), 3, 0, 0), std::domain_error);
}

TEST_CASE("conditioned game per the decomposition rule") {
    SvetlichnyGame g = conditioned_game(s3(), 2, AuxiliaryValues{0, 0, 2});
    CHECK(g.n == 2);
    CHECK(g.c == std::vector<int>{0, 0, 0});
    SvetlichnyGame gflip = conditioned_game(s3(), 2, AuxiliaryValues{1, 0, 2});
    CHECK(relation(g, gflip) == GameRelation::TriviallyComplementary);
}

TEST_CASE("conditioned games across b differ by the full-parity input term") {
    for (const auto& game : enumerate_games(3))
        for (int k = 1; k <= 2; ++k)
            for (int a = 0; a < 2; ++a) {
                SvetlichnyGame g0 = conditioned_game(game, k, AuxiliaryValues{a, 0, k});
                SvetlichnyGame g1 = conditioned_game(game, k, AuxiliaryValues{a, 1, k});
                CHECK(relation(g0, g1) == GameRelation::Distinct);
                for (Bits in = 0; in < (Bits{1} << k); ++in)
                    for (Bits out = 0; out < (Bits{1} << k); ++out)
                        CHECK(predicate(g0, out, in) ==
                              (predicate(g1, out, in) ^ (parity(in) != 0)));
            }
}

TEST_CASE("conditioning agrees with substituting the tail into the big game") {
    for (const auto& game : enumerate_games(3))
        for (int k = 1; k <= 2; ++k) {
            Bits tmask = (Bits{1} << (3 - k)) - 1;
            for (Bits ti = 0; ti <= tmask; ++ti)
                for (Bits to = 0; to <= tmask; ++to) {
                    SvetlichnyGame small =
                        conditioned_game(game, k, auxiliary_values(game, k, to, ti));
                    for (Bits in = 0; in < (Bits{1} << k); ++in)
                        for (Bits out = 0; out < (Bits{1} << k); ++out)
                            CHECK(predicate(small, out, in) ==
                                  predicate(game, out | (to << k), in | (ti << k)));
                }
        }
}

TEST_CASE("catalog functionals") {
    BellFunctional gyni = catalog_gyni3();
    CHECK(gyni.nonzero_terms() == 4);
    Behavior zeros = deterministic_box(strategy_from_index(3, 0));
    CHECK(value(gyni, zeros) == rat(1, 4));

    BellFunctional mf = catalog_mermin_facet();
    CHECK(value(mf, uniform_box(3)) == 0);
    CHECK(mf.nonzero_terms() == 32);

    BellFunctional mi = catalog_mermin1();
    CHECK(mi.nonzero_terms() == 32);
    CHECK(value(mi, uniform_box(3)) == rat(1, 2));

    BellFunctional mii = catalog_mermin2();
    CHECK(value(mii, uniform_box(3)) == rat(1, 2));

}

TEST_CASE("ip3 value on uniform noise recomputed by hand") {
    // -2*(1/4)*3 - 3*(1/8) + 2*(1/8)*4 = -3/2 - 3/8 + 1 = -7/8
    BellFunctional ip = catalog_ip3();
    CHECK(value(ip, uniform_box(3)) == rat(-7, 8));
}
