#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nlg/behavior.hpp"
#include "nlg/simplex.hpp"

namespace nlg {

enum class LpStatus { Optimal, Infeasible };

struct LpSolution {
    LpStatus status;
    Rat value;                        // meaningful when Optimal
    std::optional<Behavior> witness;  // present when Optimal, re-validated
};

struct LpProblem {
    int n;
    BellFunctional objective;
    std::vector<std::pair<BellFunctional, Rat>> equality_constraints;
};

// Built-in constraint rows of the n-party no-signaling polytope:
// per-input normalization plus per-party no-signaling equalities.
// Returns {A, b}; variables are behavior entries in canonical index order.
std::pair<std::vector<std::vector<Rat>>, std::vector<Rat>> ns_constraint_rows(int n);

// One constraint system, many objectives: phase 1 runs once, each maximize()
// re-optimizes from the previous vertex.
class NsPolytopeLp {
  public:
    explicit NsPolytopeLp(int n,
                          std::vector<std::pair<BellFunctional, Rat>> equality_constraints = {});

    bool feasible();
    LpSolution maximize(const BellFunctional& objective);

  private:
    int n_;
    std::vector<std::pair<BellFunctional, Rat>> eqs_;
    Simplex splx_;
};

LpSolution solve(const LpProblem& p);

std::pair<Rat, Rat> feasible_range(int n, const BellFunctional& f);

LpSolution constrained_max(int n, const BellFunctional& objective,
                           const BellFunctional& constraint, const Rat& x);

struct CurvePoint {
    Rat x;
    std::optional<Rat> y;  // absent when infeasible
};

struct ComplementarityCurve {
    std::string constraint_label;
    std::string objective_label;
    std::vector<CurvePoint> points;  // sorted by x
    Rat x_min, x_max;
};

// Evenly spaced rational grid over [lo, hi] (defaults to the constraint's
// feasible range), one constrained maximization per point.
ComplementarityCurve trace_curve(int n, const BellFunctional& objective,
                                 const BellFunctional& constraint, int grid_points,
                                 std::optional<std::pair<Rat, Rat>> range = std::nullopt);

std::string curve_csv(const ComplementarityCurve& curve);

// n_target-party functional agreeing with f on the marginal of the chosen
// parties (1-based, ascending) for every no-signaling behavior.
BellFunctional lift(const BellFunctional& f, int n_target, const std::vector<int>& parties);

// Marginal-probability functional P(x_party = out | X_party = in), lowered at
// canonical input 0 for the other parties.
BellFunctional marginal_prob_functional(int n, int party, int out, int in);

// Auxiliary-game probability functional P(A_n^k = a | B_n^k = b), averaged
// uniformly over the 2^(n-k-1) tail inputs of parity b.
BellFunctional aux_prob_functional(const SvetlichnyGame& game, int k, int a, int b);

// Euclidean projection onto the affine subspace cut out by normalization and
// no-signaling equalities (entries may leave [0,1] slightly).
Behavior project_to_ns(const Behavior& b);

// Worker count for grid fan-out: NLG_THREADS, else 1.
int worker_count();

}  // namespace nlg
