#pragma once

#include <string>
#include <vector>

#include "nlg/bits.hpp"
#include "nlg/rational.hpp"

namespace nlg {

// n-party binary XOR game from the Svetlichny family, identified by the
// coefficient string c0 c1 ... cn:
//   x1 ^ ... ^ xn ^ c0  ==  XOR_{i<j} Xi*Xj ^ XOR_i ci*Xi
struct SvetlichnyGame {
    int n;
    std::vector<int> c;  // length n+1, entries in {0,1}

    SvetlichnyGame(int n_, std::vector<int> c_);
    explicit SvetlichnyGame(int n_);  // all-zero coefficient string

    std::string label() const;
};

enum class GameRelation { Equivalent, TriviallyComplementary, Distinct };

// Values of the auxiliary games A_n^k, B_n^k on a fixed tail assignment.
struct AuxiliaryValues {
    int a;
    int b;
    int k;
};

// Rational linear functional on behavior space plus offset: the common
// representation every game and inequality is lowered to. Coefficients are
// stored densely, indexed by out_index * 2^n + in_index.
struct BellFunctional {
    int n;
    std::vector<Rat> coeff;  // size 4^n
    Rat offset;
    std::string label;

    BellFunctional(int n_, std::string label_ = "");

    Rat& at(Bits out, Bits in) { return coeff[(static_cast<std::size_t>(out) << n) | in]; }
    const Rat& at(Bits out, Bits in) const {
        return coeff[(static_cast<std::size_t>(out) << n) | in];
    }
    std::size_t nonzero_terms() const;

    BellFunctional scaled(const Rat& s) const;
};

bool predicate(const SvetlichnyGame& game, Bits outputs, Bits inputs);

// Winning-probability functional under the uniform input prior: 1/2^n on every
// satisfying (outputs, inputs) assignment.
BellFunctional to_functional(const SvetlichnyGame& game);

SvetlichnyGame trivial_complement(const SvetlichnyGame& game);

GameRelation relation(const SvetlichnyGame& g1, const SvetlichnyGame& g2);

// All 2^(n+1) games of a given party count, in c-string order.
std::vector<SvetlichnyGame> enumerate_games(int n);

AuxiliaryValues auxiliary_values(const SvetlichnyGame& game, int k, Bits tail_outputs,
                                 Bits tail_inputs);

// The k-party game S_k|(A_n^k=a, B_n^k=b): output offset c0^a, per-party
// coefficients ci^b for i <= k.
SvetlichnyGame conditioned_game(const SvetlichnyGame& game, int k, const AuxiliaryValues& aux);

// Generic XOR-game functional: wins when parity(outputs) ^ c0 == rhs(inputs).
BellFunctional xor_game_functional(int n, const std::vector<int>& rhs_by_input, int c0,
                                   const std::string& label);

// The section-III catalog.
BellFunctional catalog_gyni3();
BellFunctional catalog_ip3();
BellFunctional catalog_mermin1();
BellFunctional catalog_mermin2();
BellFunctional catalog_mermin_facet();

}  // namespace nlg
