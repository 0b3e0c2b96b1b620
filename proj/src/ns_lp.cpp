#include "nlg/ns_lp.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace nlg {

namespace {

void check_capacity(int n) {
    if (n < 1 || n > 5) throw std::length_error("ns_lp: party count capped at n <= 5");
}

}  // namespace

std::pair<std::vector<std::vector<Rat>>, std::vector<Rat>> ns_constraint_rows(int n) {
    check_capacity(n);
    std::size_t vars = std::size_t{1} << (2 * n);
    Bits lim = Bits{1} << n;
    std::vector<std::vector<Rat>> A;
    std::vector<Rat> b;
    // Normalization: sum_x P(x|X) = 1 for every input.
    for (Bits in = 0; in < lim; ++in) {
        std::vector<Rat> row(vars);
        for (Bits out = 0; out < lim; ++out) row[(std::size_t{out} << n) | in] = 1;
        A.push_back(std::move(row));
        b.push_back(1);
    }
    // Per-party no-signaling: marginal of the others is independent of X_i.
    for (int i = 1; i <= n; ++i) {
        Bits ibit = Bits{1} << (i - 1);
        for (Bits out = 0; out < lim; ++out) {
            if (out & ibit) continue;
            for (Bits in = 0; in < lim; ++in) {
                if (in & ibit) continue;
                std::vector<Rat> row(vars);
                row[(std::size_t{out} << n) | in] += 1;
                row[(std::size_t{out | ibit} << n) | in] += 1;
                row[(std::size_t{out} << n) | (in | ibit)] -= 1;
                row[(std::size_t{out | ibit} << n) | (in | ibit)] -= 1;
                A.push_back(std::move(row));
                b.push_back(0);
            }
        }
    }
    return {std::move(A), std::move(b)};
}

NsPolytopeLp::NsPolytopeLp(int n, std::vector<std::pair<BellFunctional, Rat>> equality_constraints)
    : n_(n), eqs_(std::move(equality_constraints)), splx_([&] {
          auto [A, b] = ns_constraint_rows(n);
          for (const auto& [f, target] : eqs_) {
              if (f.n != n) throw std::invalid_argument("NsPolytopeLp: constraint dimension");
              A.push_back(f.coeff);
              b.push_back(target - f.offset);
          }
          return Simplex(std::move(A), std::move(b));
      }()) {}

bool NsPolytopeLp::feasible() { return splx_.feasible(); }

LpSolution NsPolytopeLp::maximize(const BellFunctional& objective) {
    if (objective.n != n_) throw std::invalid_argument("NsPolytopeLp: objective dimension");
    if (!splx_.feasible()) return LpSolution{LpStatus::Infeasible, Rat(0), std::nullopt};
    Rat v = splx_.maximize(objective.coeff) + objective.offset;
    Behavior witness(n_);
    witness.p = splx_.solution();
    // Independent re-validation of the witness.
    if (!is_nonnegative(witness) || !is_normalized(witness) ||
        !is_no_signaling_all_subsets(witness))
        throw std::logic_error("NsPolytopeLp: witness failed no-signaling re-validation");
    for (const auto& [f, target] : eqs_)
        if (value(f, witness) != target)
            throw std::logic_error("NsPolytopeLp: witness failed constraint re-validation");
    if (value(objective, witness) != v)
        throw std::logic_error("NsPolytopeLp: witness objective mismatch");
    return LpSolution{LpStatus::Optimal, std::move(v), std::move(witness)};
}

LpSolution solve(const LpProblem& p) {
    NsPolytopeLp lp(p.n, p.equality_constraints);
    return lp.maximize(p.objective);
}

std::pair<Rat, Rat> feasible_range(int n, const BellFunctional& f) {
    NsPolytopeLp lp(n);
    Rat hi = lp.maximize(f).value;
    Rat lo = -lp.maximize(f.scaled(-1)).value;
    return {std::move(lo), std::move(hi)};
}

LpSolution constrained_max(int n, const BellFunctional& objective,
                           const BellFunctional& constraint, const Rat& x) {
    return solve(LpProblem{n, objective, {{constraint, x}}});
}

int worker_count() {
    if (const char* env = std::getenv("NLG_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

ComplementarityCurve trace_curve(int n, const BellFunctional& objective,
                                 const BellFunctional& constraint, int grid_points,
                                 std::optional<std::pair<Rat, Rat>> range) {
    if (grid_points < 2) throw std::domain_error("trace_curve: need at least 2 grid points");
    auto [lo, hi] = range ? *range : feasible_range(n, constraint);
    ComplementarityCurve curve;
    curve.constraint_label = constraint.label;
    curve.objective_label = objective.label;
    curve.x_min = lo;
    curve.x_max = hi;
    curve.points.resize(grid_points);
    Rat span = hi - lo;
    auto solve_point = [&](int k) {
        Rat x = lo + span * rat(k, grid_points - 1);
        LpSolution sol = constrained_max(n, objective, constraint, x);
        curve.points[k].x = std::move(x);
        if (sol.status == LpStatus::Optimal) curve.points[k].y = std::move(sol.value);
    };
    int workers = worker_count();
    if (workers <= 1) {
        for (int k = 0; k < grid_points; ++k) solve_point(k);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (int k = w; k < grid_points; k += workers) solve_point(k);
            });
        for (auto& th : pool) th.join();
    }
    return curve;
}

std::string curve_csv(const ComplementarityCurve& curve) {
    std::ostringstream os;
    os << "x,x_decimal,y,y_decimal,status\n";
    for (const CurvePoint& pt : curve.points) {
        os << rat_str(pt.x) << ',' << rat_decimal(pt.x) << ',';
        if (pt.y)
            os << rat_str(*pt.y) << ',' << rat_decimal(*pt.y) << ",optimal\n";
        else
            os << ",,infeasible\n";
    }
    return os.str();
}

BellFunctional lift(const BellFunctional& f, int n_target, const std::vector<int>& parties) {
    if (parties.size() != static_cast<std::size_t>(f.n))
        throw std::invalid_argument("lift: subset size must match functional arity");
    if (f.n > n_target) throw std::invalid_argument("lift: target party count too small");
    Bits keep = 0;
    for (int p : parties) {
        if (p < 1 || p > n_target) throw std::invalid_argument("lift: party out of range");
        keep |= Bits{1} << (p - 1);
    }
    BellFunctional out(n_target, f.label);
    out.offset = f.offset;
    Bits all = (Bits{1} << n_target) - 1;
    Bits slim = Bits{1} << f.n;
    for (Bits in_s = 0; in_s < slim; ++in_s)
        for (Bits out_s = 0; out_s < slim; ++out_s) {
            const Rat& cf = f.at(out_s, in_s);
            if (cf == 0) continue;
            Bits out_full = 0, in_full = 0;
            for (int j = 0; j < f.n; ++j) {
                Bits pb = Bits{1} << (parties[j] - 1);
                if (out_s & (Bits{1} << j)) out_full |= pb;
                if (in_s & (Bits{1} << j)) in_full |= pb;
            }
            // Complement outputs summed, complement inputs fixed at 0.
            for (Bits out_c = 0; out_c <= all; ++out_c) {
                if (out_c & keep) continue;
                out.at(out_full | out_c, in_full) += cf;
            }
        }
    return out;
}

BellFunctional marginal_prob_functional(int n, int party, int outbit, int inbit) {
    if (party < 1 || party > n) throw std::invalid_argument("marginal_prob_functional: party");
    BellFunctional f(n, "P(x" + std::to_string(party) + "=" + std::to_string(outbit) + "|X" +
                            std::to_string(party) + "=" + std::to_string(inbit) + ")");
    Bits pb = Bits{1} << (party - 1);
    Bits all = (Bits{1} << n) - 1;
    Bits in_full = inbit ? pb : 0;
    for (Bits out = 0; out <= all; ++out)
        if (((out & pb) != 0) == (outbit != 0)) f.at(out, in_full) += 1;
    return f;
}

BellFunctional aux_prob_functional(const SvetlichnyGame& game, int k, int a, int b) {
    int n = game.n;
    if (k < 1 || k >= n) throw std::domain_error("aux_prob_functional: k out of range");
    BellFunctional f(n, "P(A=" + std::to_string(a) + "|B=" + std::to_string(b) + ")");
    Bits tmask = (Bits{1} << (n - k)) - 1;
    Bits hmask = (Bits{1} << k) - 1;
    int inputs_of_parity = (n - k == 1) ? 1 : 1 << (n - k - 1);
    Rat w(1, inputs_of_parity);
    for (Bits ti = 0; ti <= tmask; ++ti) {
        if (parity(ti) != b) continue;
        for (Bits to = 0; to <= tmask; ++to) {
            if (auxiliary_values(game, k, to, ti).a != a) continue;
            for (Bits oh = 0; oh <= hmask; ++oh)
                f.at(oh | (to << k), (ti << k)) += w;  // head input fixed at 0
        }
    }
    return f;
}

Behavior project_to_ns(const Behavior& b) {
    auto [A, rhs] = ns_constraint_rows(b.n);
    int m = static_cast<int>(A.size());
    std::size_t vars = b.p.size();
    // residual r = A p - b
    std::vector<Rat> r(m);
    for (int i = 0; i < m; ++i) {
        Rat acc = -rhs[i];
        for (std::size_t j = 0; j < vars; ++j)
            if (A[i][j] != 0) acc += A[i][j] * b.p[j];
        r[i] = std::move(acc);
    }
    // Solve (A A^T) y = r; the Gram matrix is rank deficient, so eliminate
    // with pivoting and leave free coordinates at zero.
    std::vector<std::vector<Rat>> G(m, std::vector<Rat>(m + 1));
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            Rat acc = 0;
            for (std::size_t t = 0; t < vars; ++t)
                if (A[i][t] != 0 && A[j][t] != 0) acc += A[i][t] * A[j][t];
            G[i][j] = acc;
            G[j][i] = std::move(acc);
        }
        G[i][m] = r[i];
    }
    std::vector<int> pivot_col(m, -1);
    int row = 0;
    for (int col = 0; col < m && row < m; ++col) {
        int pr = -1;
        for (int i = row; i < m; ++i)
            if (G[i][col] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(G[pr], G[row]);
        Rat inv = 1 / G[row][col];
        for (int j = col; j <= m; ++j) G[row][j] *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == row || G[i][col] == 0) continue;
            Rat f = G[i][col];
            for (int j = col; j <= m; ++j) G[i][j] -= f * G[row][j];
        }
        pivot_col[row] = col;
        ++row;
    }
    std::vector<Rat> y(m);
    for (int i = 0; i < row; ++i) y[pivot_col[i]] = G[i][m];
    Behavior out(b.n);
    out.p = b.p;
    for (int i = 0; i < m; ++i) {
        if (y[i] == 0) continue;
        for (std::size_t j = 0; j < vars; ++j)
            if (A[i][j] != 0) out.p[j] -= y[i] * A[i][j];
    }
    return out;
}

}  // namespace nlg
