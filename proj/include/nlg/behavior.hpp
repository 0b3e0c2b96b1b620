#pragma once

#include <array>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "nlg/game.hpp"

namespace nlg {

// Joint conditional distribution P(x|X) for n parties, exact rational entries,
// indexed like BellFunctional coefficients (out_index major, in_index minor).
struct Behavior {
    int n;
    std::vector<Rat> p;  // size 4^n

    explicit Behavior(int n_) : n(n_), p(std::size_t{1} << (2 * n_)) {}

    Rat& at(Bits out, Bits in) { return p[(static_cast<std::size_t>(out) << n) | in]; }
    const Rat& at(Bits out, Bits in) const {
        return p[(static_cast<std::size_t>(out) << n) | in];
    }
};

// Per-party response function X -> x; there are 4^n strategies for n parties.
struct DeterministicStrategy {
    std::vector<std::array<int, 2>> response;  // response[i][X] for party i+1

    int n() const { return static_cast<int>(response.size()); }
};

bool is_normalized(const Behavior& b);
bool is_nonnegative(const Behavior& b);

// Per-party no-signaling: for every party and every fixed assignment of the
// other parties' outputs and inputs, the summed-out marginal is input
// independent. For binary settings this implies all subset no-signaling; the
// subset form is still exposed for witness re-verification.
bool is_no_signaling(const Behavior& b);
bool is_no_signaling_all_subsets(const Behavior& b);

Rat value(const BellFunctional& f, const Behavior& b);

// Extremal box winning the game with probability 1: mass 1/2^(n-1) on every
// winning output tuple of each input.
Behavior svetlichny_box(const SvetlichnyGame& game);

Behavior deterministic_box(const DeterministicStrategy& s);

DeterministicStrategy strategy_from_index(int n, std::size_t index);

Behavior mix(const std::vector<Behavior>& boxes, const std::vector<Rat>& weights);

Behavior uniform_box(int n);

// Product of two behaviors on disjoint party blocks (a's parties first).
Behavior product(const Behavior& a, const Behavior& b);

// Marginal behavior on a subset of parties (1-based, ascending). Requires a
// no-signaling input so summing out the complement is input independent.
Behavior marginal(const Behavior& b, const std::vector<int>& parties);

struct Conditioned {
    Rat probability;
    std::optional<Behavior> behavior;  // absent when probability is 0
};

// Head behavior of parties 1..k given the tail event (tail_outputs,
// tail_inputs) on parties k+1..n, along with the tail event probability.
Conditioned condition(const Behavior& b, int k, Bits tail_outputs, Bits tail_inputs);

// Head behavior given the auxiliary-game event (A_n^k=a, B_n^k=bbit), with
// P(A=a|B=bbit) averaged uniformly over tail inputs of parity bbit.
Conditioned condition_aux(const Behavior& b, const SvetlichnyGame& game, int k, int a, int bbit);

struct LhvOptimum {
    Rat value;
    DeterministicStrategy strategy;
};

// Exact LHV maximum by enumerating all 4^n deterministic strategies (n <= 5).
LhvOptimum lhv_max(const BellFunctional& f);

// Random interior point of the NS polytope: mixture of random deterministic
// boxes and extremal Svetlichny boxes with random rational weights.
Behavior random_ns_behavior(int n, std::mt19937& rng, int components = 6);

}  // namespace nlg
