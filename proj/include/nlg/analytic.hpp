#pragma once

#include <vector>

#include "nlg/game.hpp"

namespace nlg {

enum class ClosedFormKind { MarginalVsMarginal, SnVsSn, SnVsMarginal, SnVsSk };

// Piecewise-linear complementarity bound with explicit interior breakpoints.
struct ClosedForm {
    ClosedFormKind kind;
    GameRelation relation;  // used by the vs-Sn / vs-marginal-game kinds
    Rat domain_lo, domain_hi;

    Rat operator()(const Rat& x) const;
    std::vector<Rat> breakpoints() const;
};

ClosedForm closed_form_sn_vs_sn(GameRelation rel);
ClosedForm closed_form_marginal_vs_marginal(GameRelation rel);
ClosedForm closed_form_sn_vs_marginal();
ClosedForm closed_form_sn_vs_sk();

// Equivalent -> x; TriviallyComplementary -> 1-x;
// Distinct -> x+1/2 on [0,1/2], 3/2-x on [1/2,1].
Rat theorem1(const Rat& x, GameRelation rel);

// 1 on [1/2,3/4], (5-4x)/2 on [3/4,1]; extended below 1/2 by the
// complement symmetry theorem2(x) = theorem2(1-x).
Rat theorem2(const Rat& x);
Rat theorem2_extended(const Rat& x);

// The n=1 specialization of the same branch structure.
Rat marginal_vs_marginal(const Rat& x, GameRelation rel);

// Maximal S_n value at pinned marginal (or auxiliary-game) probability p:
// (3+2p)/4 on [0,1/2], (5-2p)/4 on [1/2,1].
Rat sn_vs_marginal(const Rat& p);

}  // namespace nlg
