#include "nlg/verify.hpp"

#include <functional>
#include <thread>

namespace nlg {

void VerifyReport::record(bool good, const std::string& what) {
    if (good) {
        ++pass;
    } else {
        if (fail == 0) first_failure = what;
        ++fail;
    }
}

namespace {

std::vector<Rat> grid(const Rat& lo, const Rat& hi, int points) {
    std::vector<Rat> xs(points);
    for (int k = 0; k < points; ++k) xs[k] = lo + (hi - lo) * rat(k, points - 1);
    return xs;
}

void merge(VerifyReport& into, const VerifyReport& part) {
    if (into.fail == 0 && part.fail > 0) into.first_failure = part.first_failure;
    into.pass += part.pass;
    into.fail += part.fail;
}

// Fans the per-grid-point work across NLG_THREADS workers; reports are merged
// in grid order so the outcome is deterministic.
VerifyReport over_grid(const std::vector<Rat>& xs,
                       const std::function<VerifyReport(const Rat&)>& body) {
    int points = static_cast<int>(xs.size());
    std::vector<VerifyReport> parts(points);
    int workers = worker_count();
    if (workers <= 1) {
        for (int k = 0; k < points; ++k) parts[k] = body(xs[k]);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (int k = w; k < points; k += workers) parts[k] = body(xs[k]);
            });
        for (auto& th : pool) th.join();
    }
    VerifyReport report;
    for (const VerifyReport& part : parts) merge(report, part);
    return report;
}

}  // namespace

VerifyReport verify_sn_vs_sn(int n, int grid_points) {
    std::vector<SvetlichnyGame> games = enumerate_games(n);
    std::vector<BellFunctional> funcs;
    funcs.reserve(games.size());
    for (const auto& g : games) funcs.push_back(to_functional(g));

    VerifyReport report;
    for (std::size_t i = 0; i < games.size(); ++i) {
        auto part = over_grid(grid(rat(0), rat(1), grid_points), [&](const Rat& x) {
            VerifyReport local;
            NsPolytopeLp lp(n, {{funcs[i], x}});
            for (std::size_t j = 0; j < games.size(); ++j) {
                Rat expected = theorem1(x, relation(games[i], games[j]));
                LpSolution sol = lp.maximize(funcs[j]);
                bool good = sol.status == LpStatus::Optimal && sol.value == expected;
                local.record(good, games[i].label() + " vs " + games[j].label() + " at x=" +
                                       rat_str(x));
            }
            return local;
        });
        merge(report, part);
    }
    return report;
}

VerifyReport verify_sn_vs_sk(int n, int k, int grid_points) {
    SvetlichnyGame constraint_game(n, std::vector<int>(n + 1, 0));
    BellFunctional constraint = to_functional(constraint_game);
    std::vector<int> head(k);
    for (int i = 0; i < k; ++i) head[i] = i + 1;
    std::vector<BellFunctional> objectives;
    for (const auto& g : enumerate_games(k)) objectives.push_back(lift(to_functional(g), n, head));

    return over_grid(grid(rat(1, 2), rat(1), grid_points), [&](const Rat& x) {
        VerifyReport local;
        NsPolytopeLp lp(n, {{constraint, x}});
        bool have = false;
        Rat best;
        for (const BellFunctional& obj : objectives) {
            LpSolution sol = lp.maximize(obj);
            if (sol.status != LpStatus::Optimal) continue;
            if (!have || sol.value > best) best = sol.value;
            have = true;
        }
        Rat expected = theorem2(x);
        local.record(have && best == expected,
                     "S" + std::to_string(n) + " vs S" + std::to_string(k) + " at x=" + rat_str(x));
        return local;
    });
}

VerifyReport verify_sn_vs_marginal(int n, int grid_points) {
    SvetlichnyGame game(n, std::vector<int>(n + 1, 0));
    BellFunctional objective = to_functional(game);
    BellFunctional m0 = marginal_prob_functional(n, n, 0, 0);
    BellFunctional m1 = marginal_prob_functional(n, n, 0, 1);

    return over_grid(grid(rat(0), rat(1), grid_points), [&](const Rat& p) {
        VerifyReport local;
        LpSolution sol = solve(LpProblem{n, objective, {{m0, p}, {m1, p}}});
        Rat expected = sn_vs_marginal(p);
        local.record(sol.status == LpStatus::Optimal && sol.value == expected,
                     "S" + std::to_string(n) + " vs marginal at p=" + rat_str(p));
        return local;
    });
}

VerifyReport verify_sn_vs_aux(int n, int k, int grid_points) {
    SvetlichnyGame game(n, std::vector<int>(n + 1, 0));
    BellFunctional objective = to_functional(game);
    BellFunctional a0 = aux_prob_functional(game, k, 0, 0);
    BellFunctional a1 = aux_prob_functional(game, k, 0, 1);

    return over_grid(grid(rat(0), rat(1), grid_points), [&](const Rat& p) {
        VerifyReport local;
        LpSolution sol = solve(LpProblem{n, objective, {{a0, p}, {a1, p}}});
        Rat expected = sn_vs_marginal(p);
        local.record(sol.status == LpStatus::Optimal && sol.value == expected,
                     "S" + std::to_string(n) + " vs aux(k=" + std::to_string(k) +
                         ") at p=" + rat_str(p));
        return local;
    });
}

bool curve_is_concave(const ComplementarityCurve& curve) {
    const auto& pts = curve.points;
    for (std::size_t i = 0; i + 2 < pts.size(); ++i) {
        if (!pts[i].y || !pts[i + 1].y || !pts[i + 2].y) continue;
        // y2 - y1 >= (y3 - y1) * (x2 - x1) / (x3 - x1), cross-multiplied.
        Rat lhs = (*pts[i + 1].y - *pts[i].y) * (pts[i + 2].x - pts[i].x);
        Rat rhs = (*pts[i + 2].y - *pts[i].y) * (pts[i + 1].x - pts[i].x);
        if (lhs < rhs) return false;
    }
    return true;
}

}  // namespace nlg
