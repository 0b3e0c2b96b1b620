#pragma once

#include <string>

#include "nlg/analytic.hpp"
#include "nlg/ns_lp.hpp"

namespace nlg {

// Closed-form-vs-LP comparison report; every comparison is an exact rational
// equality check.
struct VerifyReport {
    long pass = 0;
    long fail = 0;
    std::string first_failure;

    bool ok() const { return fail == 0; }
    void record(bool good, const std::string& what);
};

// S_n^i vs S_n^j over all ordered game pairs, grid over [0,1].
VerifyReport verify_sn_vs_sn(int n, int grid_points);

// max over lifted S_k games given the canonical S_n at x, grid over [1/2,1].
VerifyReport verify_sn_vs_sk(int n, int k, int grid_points);

// Canonical S_n at pinned single-party marginal p, grid over [0,1].
VerifyReport verify_sn_vs_marginal(int n, int grid_points);

// Canonical S_n at pinned auxiliary-game probability p, grid over [0,1].
VerifyReport verify_sn_vs_aux(int n, int k, int grid_points);

// y concave over the feasible points of a traced curve.
bool curve_is_concave(const ComplementarityCurve& curve);

}  // namespace nlg
