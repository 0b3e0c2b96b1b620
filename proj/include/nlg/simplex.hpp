#pragma once

#include <vector>

#include "nlg/rational.hpp"

namespace nlg {

// Exact-rational primal simplex for equality-form problems:
//   maximize c.x  subject to  A x = b,  x >= 0.
//
// Phase 1 (artificial variables) is run once per constraint system; the
// resulting feasible tableau can then be re-optimized for any number of
// objectives, which the constrained-maximization loops rely on. Pivot
// selection is Dantzig's rule with a switch to Bland's rule after a streak of
// degenerate pivots, so cycling cannot occur.
class Simplex {
  public:
    Simplex(std::vector<std::vector<Rat>> A, std::vector<Rat> b);

    // Runs phase 1 if not already done. False means the system is infeasible.
    bool feasible();

    // Maximizes c.x from the current basic feasible solution. Requires
    // feasible(); throws std::runtime_error on an unbounded ray (cannot occur
    // for behavior polytopes).
    Rat maximize(const std::vector<Rat>& c);

    // Current basic solution over the original variables.
    std::vector<Rat> solution() const;

    int rows() const { return m_; }
    int cols() const { return n_; }

  private:
    int pick_entering(bool bland) const;
    int pick_leaving(int col) const;
    void pivot(int row, int col);
    void price_objective(const std::vector<Rat>& cost);

    int m_;            // constraint rows (may shrink if redundant)
    int n_;            // original variables
    int width_;        // columns currently in the tableau (vars + artificials)
    int art_base_;     // first artificial column, or n_ when none remain
    std::vector<std::vector<Rat>> tab_;  // m_ rows, width_ cols
    std::vector<Rat> rhs_;
    std::vector<Rat> obj_;   // reduced-cost row
    Rat obj_value_;
    std::vector<int> basis_;
    int phase1_state_ = 0;  // 0 pending, 1 feasible, -1 infeasible
};

}  // namespace nlg
