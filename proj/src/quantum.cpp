#include "nlg/quantum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nlg {

namespace {

using Cx = std::complex<double>;

double norm2(const std::vector<Cx>& v) {
    double acc = 0;
    for (const Cx& a : v) acc += std::norm(a);
    return acc;
}

// Applies the rank-1 projector of observable (theta, phi) for outcome bit x
// on qubit `q` (0-based).
void apply_projector(std::vector<Cx>& state, int q, const MeasurementSetting& s, int x) {
    double sign = x == 0 ? 1.0 : -1.0;
    double nz = sign * std::cos(s.theta);
    Cx nxy = sign * std::sin(s.theta) * Cx(std::cos(s.phi), std::sin(s.phi));
    // Projector (I + sign * n.sigma)/2 in the computational basis:
    Cx p00 = 0.5 * (1.0 + nz);
    Cx p01 = 0.5 * std::conj(nxy);
    Cx p10 = 0.5 * nxy;
    Cx p11 = 0.5 * (1.0 - nz);
    std::size_t stride = std::size_t{1} << q;
    for (std::size_t base = 0; base < state.size(); ++base) {
        if (base & stride) continue;
        Cx a = state[base];
        Cx b = state[base | stride];
        state[base] = p00 * a + p01 * b;
        state[base | stride] = p10 * a + p11 * b;
    }
}

}  // namespace

QuantumModel make_model(int n, std::vector<Cx> state,
                        std::vector<std::array<MeasurementSetting, 2>> settings) {
    if (n < 1 || n > 6) throw std::domain_error("make_model: n out of range");
    if (state.size() != (std::size_t{1} << n))
        throw std::invalid_argument("make_model: state dimension mismatch");
    if (settings.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("make_model: settings per party mismatch");
    if (std::abs(norm2(state) - 1.0) > 1e-12)
        throw std::invalid_argument("make_model: state is not normalized");
    return QuantumModel{n, std::move(state), std::move(settings)};
}

std::vector<Cx> ghz(int n) {
    if (n < 1) throw std::domain_error("ghz: need at least 1 party");
    std::vector<Cx> v(std::size_t{1} << n);
    double a = 1.0 / std::sqrt(2.0);
    v.front() = a;
    v.back() = a;
    return v;
}

FloatBehavior behavior_from_model(const QuantumModel& m) {
    if (std::abs(norm2(m.state) - 1.0) > 1e-12)
        throw std::invalid_argument("behavior_from_model: state is not normalized");
    FloatBehavior b(m.n);
    Bits lim = Bits{1} << m.n;
    for (Bits in = 0; in < lim; ++in)
        for (Bits out = 0; out < lim; ++out) {
            std::vector<Cx> psi = m.state;
            for (int q = 0; q < m.n; ++q)
                apply_projector(psi, q, m.settings[q][bit_of(in, q + 1)], bit_of(out, q + 1));
            b.at(out, in) = norm2(psi);
        }
    return b;
}

double value(const BellFunctional& f, const FloatBehavior& b) {
    if (f.n != b.n) throw std::invalid_argument("value: party counts differ");
    double acc = f.offset.get_d();
    for (std::size_t i = 0; i < f.coeff.size(); ++i)
        if (f.coeff[i] != 0) acc += f.coeff[i].get_d() * b.p[i];
    return acc;
}

double normalization_residual(const FloatBehavior& b) {
    double worst = 0;
    Bits lim = Bits{1} << b.n;
    for (Bits in = 0; in < lim; ++in) {
        double sum = 0;
        for (Bits out = 0; out < lim; ++out) sum += b.at(out, in);
        worst = std::max(worst, std::abs(sum - 1.0));
    }
    return worst;
}

double ns_residual(const FloatBehavior& b) {
    double worst = 0;
    Bits lim = Bits{1} << b.n;
    for (int i = 1; i <= b.n; ++i) {
        Bits ibit = Bits{1} << (i - 1);
        for (Bits out = 0; out < lim; ++out) {
            if (out & ibit) continue;
            for (Bits in = 0; in < lim; ++in) {
                if (in & ibit) continue;
                double m0 = b.at(out, in) + b.at(out | ibit, in);
                double m1 = b.at(out, in | ibit) + b.at(out | ibit, in | ibit);
                worst = std::max(worst, std::abs(m0 - m1));
            }
        }
    }
    return worst;
}

std::vector<std::array<MeasurementSetting, 2>> optimal_svetlichny_settings(
    const SvetlichnyGame& game) {
    // Equatorial family phi_{i,X} = alpha_i + X*(pi/2 + pi*c_i); the input
    // coefficients shift the second setting by pi, c_0 shifts party 1's
    // offset, and the common offset sum -pi/4 lands the GHZ correlator
    // cos(sum phi) on the XOR-game optimum.
    const double pi = std::numbers::pi;
    std::vector<std::array<MeasurementSetting, 2>> s(game.n);
    for (int i = 0; i < game.n; ++i) {
        double alpha = i == 0 ? -pi / 4 + pi * game.c[0] : 0.0;
        s[i][0] = MeasurementSetting{pi / 2, alpha};
        s[i][1] = MeasurementSetting{pi / 2, alpha + pi / 2 + pi * game.c[i + 1]};
    }
    return s;
}

std::vector<std::array<MeasurementSetting, 2>> optimal_svetlichny_settings(int n) {
    return optimal_svetlichny_settings(SvetlichnyGame(n, std::vector<int>(n + 1, 0)));
}

AngleSearchResult angle_search(const BellFunctional& f, const std::vector<Cx>& state,
                               int grid_density) {
    int n = f.n;
    if (n > 4) throw std::length_error("angle_search: capped at n <= 4");
    if (state.size() != (std::size_t{1} << n))
        throw std::invalid_argument("angle_search: state dimension mismatch");
    const double pi = std::numbers::pi;
    const double tau = 2 * pi;

    auto evaluate = [&](const std::vector<double>& phis) {
        std::vector<std::array<MeasurementSetting, 2>> s(n);
        for (int i = 0; i < n; ++i) {
            s[i][0] = MeasurementSetting{pi / 2, phis[2 * i]};
            s[i][1] = MeasurementSetting{pi / 2, phis[2 * i + 1]};
        }
        QuantumModel m{n, state, s};
        return value(f, behavior_from_model(m));
    };

    std::vector<double> best_phis(2 * n, 0.0);
    double best = evaluate(best_phis);

    // A few deterministic starting points, then cyclic coordinate descent
    // with a grid scan and golden-section refinement per angle.
    std::vector<std::vector<double>> starts;
    starts.push_back(std::vector<double>(2 * n, 0.0));
    {
        std::vector<double> s(2 * n, 0.0);
        for (int i = 0; i < n; ++i) s[2 * i + 1] = pi / 2;
        s[0] = -pi / 4;
        s[1] += -pi / 4;
        starts.push_back(s);
    }
    {
        std::vector<double> s(2 * n);
        for (int i = 0; i < 2 * n; ++i) s[i] = 0.37 + 1.91 * i;  // fixed scattered seed
        starts.push_back(s);
    }

    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    for (auto phis : starts) {
        double cur = evaluate(phis);
        for (int sweep = 0; sweep < 60; ++sweep) {
            double before = cur;
            for (int a = 0; a < 2 * n; ++a) {
                double keep = phis[a];
                double arg_best = keep, val_best = cur;
                for (int g = 0; g < grid_density; ++g) {
                    phis[a] = g * tau / grid_density;
                    double v = evaluate(phis);
                    if (v > val_best) {
                        val_best = v;
                        arg_best = phis[a];
                    }
                }
                // Golden-section refinement around the best grid cell.
                double lo = arg_best - tau / grid_density, hi = arg_best + tau / grid_density;
                double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
                phis[a] = x1;
                double f1 = evaluate(phis);
                phis[a] = x2;
                double f2 = evaluate(phis);
                for (int it = 0; it < 48; ++it) {
                    if (f1 < f2) {
                        lo = x1;
                        x1 = x2;
                        f1 = f2;
                        x2 = lo + gr * (hi - lo);
                        phis[a] = x2;
                        f2 = evaluate(phis);
                    } else {
                        hi = x2;
                        x2 = x1;
                        f2 = f1;
                        x1 = hi - gr * (hi - lo);
                        phis[a] = x1;
                        f1 = evaluate(phis);
                    }
                }
                double mid = (lo + hi) / 2;
                phis[a] = mid;
                double vm = evaluate(phis);
                if (vm >= val_best) {
                    cur = vm;
                } else {
                    phis[a] = arg_best;
                    cur = val_best;
                }
            }
            if (cur - before < 1e-13) break;
        }
        if (cur > best) {
            best = cur;
            best_phis = phis;
        }
    }

    std::vector<std::array<MeasurementSetting, 2>> s(n);
    for (int i = 0; i < n; ++i) {
        s[i][0] = MeasurementSetting{pi / 2, best_phis[2 * i]};
        s[i][1] = MeasurementSetting{pi / 2, best_phis[2 * i + 1]};
    }
    return AngleSearchResult{best, std::move(s)};
}

Behavior round_to_rational(const FloatBehavior& b, long den) {
    Behavior out(b.n);
    for (std::size_t i = 0; i < b.p.size(); ++i) {
        out.p[i] = Rat(std::lround(b.p[i] * static_cast<double>(den)), den);
        out.p[i].canonicalize();
    }
    return out;
}

}  // namespace nlg
