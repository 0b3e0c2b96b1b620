#include "nlg/game.hpp"

#include <stdexcept>

namespace nlg {

SvetlichnyGame::SvetlichnyGame(int n_, std::vector<int> c_) : n(n_), c(std::move(c_)) {
    if (n < 1) throw std::domain_error("SvetlichnyGame: n must be >= 1");
    if (c.size() != static_cast<std::size_t>(n + 1))
        throw std::invalid_argument("SvetlichnyGame: coefficient string must have n+1 bits");
    for (int bit : c)
        if (bit != 0 && bit != 1)
            throw std::invalid_argument("SvetlichnyGame: coefficients must be 0/1");
}

SvetlichnyGame::SvetlichnyGame(int n_) : SvetlichnyGame(n_, std::vector<int>(n_ + 1, 0)) {}

std::string SvetlichnyGame::label() const {
    std::string s = "S" + std::to_string(n) + "|";
    for (int bit : c) s += static_cast<char>('0' + bit);
    return s;
}

BellFunctional::BellFunctional(int n_, std::string label_)
    : n(n_), coeff(std::size_t{1} << (2 * n_)), offset(0), label(std::move(label_)) {
    if (n_ < 1 || n_ > 15) throw std::domain_error("BellFunctional: bad party count");
}

std::size_t BellFunctional::nonzero_terms() const {
    std::size_t count = 0;
    for (const Rat& r : coeff)
        if (r != 0) ++count;
    return count;
}

BellFunctional BellFunctional::scaled(const Rat& s) const {
    BellFunctional g(n, label);
    for (std::size_t i = 0; i < coeff.size(); ++i) g.coeff[i] = coeff[i] * s;
    g.offset = offset * s;
    return g;
}

bool predicate(const SvetlichnyGame& game, Bits outputs, Bits inputs) {
    Bits mask = (Bits{1} << game.n) - 1;
    if ((outputs & ~mask) != 0 || (inputs & ~mask) != 0)
        throw std::invalid_argument("predicate: tuple length mismatch");
    int lhs = parity(outputs) ^ game.c[0];
    int rhs = pair_parity(inputs);
    for (int i = 1; i <= game.n; ++i) rhs ^= game.c[i] & bit_of(inputs, i);
    return lhs == rhs;
}

BellFunctional to_functional(const SvetlichnyGame& game) {
    BellFunctional f(game.n, game.label());
    Rat w(1, 1 << game.n);
    Bits lim = Bits{1} << game.n;
    for (Bits in = 0; in < lim; ++in)
        for (Bits out = 0; out < lim; ++out)
            if (predicate(game, out, in)) f.at(out, in) = w;
    return f;
}

SvetlichnyGame trivial_complement(const SvetlichnyGame& game) {
    std::vector<int> c = game.c;
    c[0] ^= 1;
    return SvetlichnyGame(game.n, c);
}

GameRelation relation(const SvetlichnyGame& g1, const SvetlichnyGame& g2) {
    if (g1.n != g2.n) throw std::invalid_argument("relation: party counts differ");
    if (g1.c == g2.c) return GameRelation::Equivalent;
    bool tail_equal = true;
    for (int i = 1; i <= g1.n; ++i)
        if (g1.c[i] != g2.c[i]) tail_equal = false;
    if (tail_equal) return GameRelation::TriviallyComplementary;
    return GameRelation::Distinct;
}

std::vector<SvetlichnyGame> enumerate_games(int n) {
    if (n < 1) throw std::domain_error("enumerate_games: n must be >= 1");
    std::vector<SvetlichnyGame> games;
    games.reserve(std::size_t{1} << (n + 1));
    for (Bits w = 0; w < (Bits{1} << (n + 1)); ++w) {
        std::vector<int> c(n + 1);
        for (int i = 0; i <= n; ++i) c[i] = static_cast<int>((w >> i) & 1u);
        games.emplace_back(n, c);
    }
    return games;
}

AuxiliaryValues auxiliary_values(const SvetlichnyGame& game, int k, Bits tail_outputs,
                                 Bits tail_inputs) {
    if (k < 1 || k >= game.n) throw std::domain_error("auxiliary_values: k out of range");
    Bits mask = (Bits{1} << (game.n - k)) - 1;
    if ((tail_outputs & ~mask) != 0 || (tail_inputs & ~mask) != 0)
        throw std::invalid_argument("auxiliary_values: tail length mismatch");
    // a also absorbs the pairwise term among the tail inputs, so that the
    // conditioned game is exactly the big game with the tail substituted.
    int a = parity(tail_outputs) ^ pair_parity(tail_inputs);
    for (int i = k + 1; i <= game.n; ++i) a ^= game.c[i] & bit_of(tail_inputs, i - k);
    int b = parity(tail_inputs);
    return AuxiliaryValues{a, b, k};
}

SvetlichnyGame conditioned_game(const SvetlichnyGame& game, int k, const AuxiliaryValues& aux) {
    if (k < 1 || k >= game.n) throw std::domain_error("conditioned_game: k out of range");
    std::vector<int> c(k + 1);
    c[0] = game.c[0] ^ aux.a;
    for (int i = 1; i <= k; ++i) c[i] = game.c[i] ^ aux.b;
    return SvetlichnyGame(k, c);
}

BellFunctional xor_game_functional(int n, const std::vector<int>& rhs_by_input, int c0,
                                   const std::string& label) {
    if (rhs_by_input.size() != (std::size_t{1} << n))
        throw std::invalid_argument("xor_game_functional: rhs table size mismatch");
    BellFunctional f(n, label);
    Rat w(1, 1 << n);
    Bits lim = Bits{1} << n;
    for (Bits in = 0; in < lim; ++in)
        for (Bits out = 0; out < lim; ++out)
            if ((parity(out) ^ c0) == rhs_by_input[in]) f.at(out, in) = w;
    return f;
}

namespace {

// Inputs and outputs below are written in party order (party 1 first), then
// packed with party 1 in the least-significant position.
Bits tup(int b1, int b2, int b3) { return pack_bits({b1, b2, b3}); }

}  // namespace

BellFunctional catalog_gyni3() {
    BellFunctional f(3, "gyni3");
    Rat w(1, 4);
    f.at(tup(0, 0, 0), tup(0, 0, 0)) = w;
    f.at(tup(0, 1, 1), tup(1, 1, 0)) = w;
    f.at(tup(1, 0, 1), tup(0, 1, 1)) = w;
    f.at(tup(1, 1, 0), tup(1, 0, 1)) = w;
    return f;
}

BellFunctional catalog_ip3() {
    BellFunctional f(3, "ip3");
    // Two-party marginals at input 11 are lowered by summing the third party's
    // outputs at input 0 for that party (immaterial on no-signaling behaviors).
    for (int x = 0; x < 2; ++x) {
        f.at(tup(0, 0, x), tup(1, 1, 0)) += rat(-2);  // P_AB(00|11)
        f.at(tup(x, 0, 0), tup(0, 1, 1)) += rat(-2);  // P_BC(00|11)
        f.at(tup(0, x, 0), tup(1, 0, 1)) += rat(-2);  // P_CA(00|11)
    }
    f.at(tup(0, 0, 0), tup(0, 0, 1)) += rat(-1);
    f.at(tup(0, 0, 0), tup(0, 1, 0)) += rat(-1);
    f.at(tup(0, 0, 0), tup(1, 0, 0)) += rat(-1);
    f.at(tup(0, 0, 0), tup(1, 1, 0)) += rat(2);
    f.at(tup(0, 0, 0), tup(1, 0, 1)) += rat(2);
    f.at(tup(0, 0, 0), tup(0, 1, 1)) += rat(2);
    f.at(tup(0, 0, 0), tup(1, 1, 1)) += rat(2);
    return f;
}

BellFunctional catalog_mermin1() {
    std::vector<int> rhs(8);
    for (Bits in = 0; in < 8; ++in) rhs[in] = (in == 7) ? 1 : 0;  // X1*X2*X3
    return xor_game_functional(3, rhs, 0, "mi3");
}

BellFunctional catalog_mermin2() {
    std::vector<int> rhs(8);
    for (Bits in = 0; in < 8; ++in)
        rhs[in] = (bit_of(in, 1) & bit_of(in, 2)) ^ (bit_of(in, 2) & bit_of(in, 3));
    return xor_game_functional(3, rhs, 0, "mii3");
}

BellFunctional catalog_mermin_facet() {
    BellFunctional f(3, "mf3");
    // <X1 X2 X3> with outputs mapped x -> (-1)^x.
    auto add_correlator = [&f](Bits in, int sign) {
        for (Bits out = 0; out < 8; ++out)
            f.at(out, in) += rat(sign * (parity(out) ? -1 : 1));
    };
    add_correlator(tup(1, 0, 0), +1);
    add_correlator(tup(0, 1, 0), +1);
    add_correlator(tup(0, 0, 1), +1);
    add_correlator(tup(1, 1, 1), -1);
    return f;
}

}  // namespace nlg
