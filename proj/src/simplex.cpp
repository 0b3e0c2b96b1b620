#include "nlg/simplex.hpp"

#include <stdexcept>

namespace nlg {

namespace {
constexpr long kPivotLimit = 500000;
}

Simplex::Simplex(std::vector<std::vector<Rat>> A, std::vector<Rat> b)
    : m_(static_cast<int>(A.size())), n_(m_ ? static_cast<int>(A[0].size()) : 0) {
    if (A.size() != b.size()) throw std::invalid_argument("Simplex: A/b size mismatch");
    width_ = n_ + m_;
    art_base_ = n_;
    tab_ = std::move(A);
    rhs_ = std::move(b);
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) {
        if (rhs_[i] < 0) {
            for (Rat& v : tab_[i]) v = -v;
            rhs_[i] = -rhs_[i];
        }
        tab_[i].resize(width_);
        tab_[i][n_ + i] = 1;
        basis_[i] = n_ + i;
    }
}

void Simplex::price_objective(const std::vector<Rat>& cost) {
    obj_ = cost;
    obj_.resize(width_);
    obj_value_ = 0;
    Rat t;
    // obj_[j] := cost[j] - sum_i cost[basis_i] * tab[i][j]
    std::vector<Rat> cb(m_);
    for (int i = 0; i < m_; ++i)
        cb[i] = static_cast<std::size_t>(basis_[i]) < cost.size() ? cost[basis_[i]] : Rat(0);
    for (int i = 0; i < m_; ++i) {
        if (cb[i] == 0) continue;
        const std::vector<Rat>& row = tab_[i];
        for (int j = 0; j < width_; ++j) {
            if (row[j] != 0) {
                t = cb[i] * row[j];
                obj_[j] -= t;
            }
        }
        obj_value_ += cb[i] * rhs_[i];
    }
}

int Simplex::pick_entering(bool bland) const {
    int best = -1;
    for (int j = 0; j < width_; ++j) {
        if (sgn(obj_[j]) > 0) {
            if (bland) return j;
            if (best < 0 || obj_[j] > obj_[best]) best = j;
        }
    }
    return best;
}

int Simplex::pick_leaving(int col) const {
    int best = -1;
    Rat best_ratio;
    for (int i = 0; i < m_; ++i) {
        if (sgn(tab_[i][col]) <= 0) continue;
        Rat ratio = rhs_[i] / tab_[i][col];
        if (best < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[best])) {
            best = i;
            best_ratio = ratio;
        }
    }
    return best;
}

void Simplex::pivot(int row, int col) {
    std::vector<Rat>& prow = tab_[row];
    Rat inv = 1 / prow[col];
    if (inv != 1) {
        for (Rat& v : prow)
            if (v != 0) v *= inv;
        rhs_[row] *= inv;
    }
    prow[col] = 1;
    Rat t;
    for (int i = 0; i < m_; ++i) {
        if (i == row) continue;
        Rat f = tab_[i][col];
        if (f == 0) continue;
        std::vector<Rat>& ri = tab_[i];
        for (int j = 0; j < width_; ++j) {
            if (prow[j] != 0) {
                t = f * prow[j];
                ri[j] -= t;
            }
        }
        ri[col] = 0;
        if (rhs_[row] != 0) {
            t = f * rhs_[row];
            rhs_[i] -= t;
        }
    }
    Rat f = obj_[col];
    if (f != 0) {
        for (int j = 0; j < width_; ++j) {
            if (prow[j] != 0) {
                t = f * prow[j];
                obj_[j] -= t;
            }
        }
        obj_[col] = 0;
        if (rhs_[row] != 0) obj_value_ += f * rhs_[row];
    }
    basis_[row] = col;
}

bool Simplex::feasible() {
    if (phase1_state_ != 0) return phase1_state_ > 0;
    std::vector<Rat> cost(width_);
    for (int j = n_; j < width_; ++j) cost[j] = -1;
    price_objective(cost);
    long pivots = 0, degenerate = 0;
    while (true) {
        bool bland = degenerate > m_ + 8;
        int col = pick_entering(bland);
        if (col < 0) break;
        int row = pick_leaving(col);
        if (row < 0) throw std::runtime_error("Simplex: phase-1 unbounded");
        bool was_degenerate = rhs_[row] == 0;
        pivot(row, col);
        degenerate = was_degenerate ? degenerate + 1 : 0;
        if (++pivots > kPivotLimit) throw std::runtime_error("Simplex: pivot limit");
    }
    if (obj_value_ < 0) {
        phase1_state_ = -1;
        return false;
    }
    // Drive artificials out of the basis; rows where no original column is
    // available are redundant and get dropped.
    for (int i = m_ - 1; i >= 0; --i) {
        if (basis_[i] < n_) continue;
        int col = -1;
        for (int j = 0; j < n_; ++j)
            if (tab_[i][j] != 0) {
                col = j;
                break;
            }
        if (col >= 0) {
            pivot(i, col);
        } else {
            tab_.erase(tab_.begin() + i);
            rhs_.erase(rhs_.begin() + i);
            basis_.erase(basis_.begin() + i);
            --m_;
        }
    }
    for (auto& row : tab_) row.resize(n_);
    width_ = n_;
    phase1_state_ = 1;
    return true;
}

Rat Simplex::maximize(const std::vector<Rat>& c) {
    if (!feasible()) throw std::logic_error("Simplex: maximize on infeasible system");
    if (c.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("Simplex: objective size mismatch");
    price_objective(c);
    long pivots = 0, degenerate = 0;
    while (true) {
        bool bland = degenerate > m_ + 8;
        int col = pick_entering(bland);
        if (col < 0) break;
        int row = pick_leaving(col);
        if (row < 0) throw std::runtime_error("Simplex: unbounded objective");
        bool was_degenerate = rhs_[row] == 0;
        pivot(row, col);
        degenerate = was_degenerate ? degenerate + 1 : 0;
        if (++pivots > kPivotLimit) throw std::runtime_error("Simplex: pivot limit");
    }
    return obj_value_;
}

std::vector<Rat> Simplex::solution() const {
    std::vector<Rat> x(n_);
    for (int i = 0; i < m_; ++i)
        if (basis_[i] < n_) x[basis_[i]] = rhs_[i];
    return x;
}

}  // namespace nlg
