#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nlg/behavior.hpp"
#include "nlg/quantum.hpp"

using namespace nlg;

namespace {

constexpr double kEps = 1e-9;

double svetlichny_quantum_max() { return (2.0 + std::sqrt(2.0)) / 4.0; }

QuantumModel optimal_model(const SvetlichnyGame& game) {
    return make_model(game.n, ghz(game.n), optimal_svetlichny_settings(game));
}

}  // namespace

TEST_CASE("ghz state is normalized") {
    for (int n = 1; n <= 5; ++n) {
        auto psi = ghz(n);
        double norm = 0;
        for (auto& a : psi) norm += std::norm(a);
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(make_model(2, {1.0, 0.0, 0.0}, {}), std::invalid_argument);
}

TEST_CASE("quantum behaviors are normalized and no-signaling") {
    for (int n = 2; n <= 4; ++n) {
        FloatBehavior b = behavior_from_model(optimal_model(SvetlichnyGame(n)));
        CHECK(normalization_residual(b) < 1e-12);
        CHECK(ns_residual(b) < 1e-12);
    }
}

TEST_CASE("product state with z measurements is deterministic") {
    // |00> with both parties measuring sigma_z: outputs always 0.
    std::vector<std::array<MeasurementSetting, 2>> settings(
        2, {MeasurementSetting{0.0, 0.0}, MeasurementSetting{0.0, 0.0}});
    QuantumModel m = make_model(2, {1.0, 0.0, 0.0, 0.0}, settings);
    FloatBehavior b = behavior_from_model(m);
    for (Bits in = 0; in < 4; ++in) {
        CHECK(b.at(0, in) == doctest::Approx(1.0).epsilon(1e-12));
        for (Bits out = 1; out < 4; ++out) CHECK(b.at(out, in) == doctest::Approx(0.0));
    }
}

TEST_CASE("ghz with optimal settings hits the svetlichny quantum maximum") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& game :
             {SvetlichnyGame(n), SvetlichnyGame(n, [n] {
                  std::vector<int> c(n + 1, 1);
                  return c;
              }())}) {
            FloatBehavior b = behavior_from_model(optimal_model(game));
            CHECK(value(to_functional(game), b) ==
                  doctest::Approx(svetlichny_quantum_max()).epsilon(kEps));
        }
}

TEST_CASE("optimal settings are equatorial") {
    for (const auto& party : optimal_svetlichny_settings(3))
        for (const auto& s : party) CHECK(s.theta == doctest::Approx(M_PI / 2));
}

TEST_CASE("angle search recovers chsh tsirelson from ghz(2)") {
    AngleSearchResult r = angle_search(to_functional(SvetlichnyGame(2)), ghz(2));
    CHECK(r.value == doctest::Approx(svetlichny_quantum_max()).epsilon(1e-7));
    FloatBehavior b = behavior_from_model(make_model(2, ghz(2), r.settings));
    CHECK(value(to_functional(SvetlichnyGame(2)), b) == doctest::Approx(r.value).epsilon(1e-12));
}

TEST_CASE("angle search reaches the mermin facet value 4 on ghz(3)") {
    AngleSearchResult r = angle_search(catalog_mermin_facet(), ghz(3));
    CHECK(r.value == doctest::Approx(4.0).epsilon(1e-6));
}

TEST_CASE("mermin facet value 4 at the closed-form angles") {
    // phi(0) = -pi/6, phi(1) = pi/3 for every party.
    std::vector<std::array<MeasurementSetting, 2>> settings(
        3, {MeasurementSetting{M_PI / 2, -M_PI / 6}, MeasurementSetting{M_PI / 2, M_PI / 3}});
    FloatBehavior b = behavior_from_model(make_model(3, ghz(3), settings));
    CHECK(value(catalog_mermin_facet(), b) == doctest::Approx(4.0).epsilon(kEps));
}

TEST_CASE("float-to-rational rounding bridge") {
    FloatBehavior fb = behavior_from_model(optimal_model(SvetlichnyGame(2)));
    Behavior rb = round_to_rational(fb, 1 << 20);
    for (std::size_t i = 0; i < rb.p.size(); ++i) {
        double diff = rb.p[i].get_d() - fb.p[i];
        CHECK(std::abs(diff) <= 0.5 / (1 << 20) + 1e-15);
    }
}

TEST_CASE("exact and float functional evaluation agree") {
    FloatBehavior fb(2);
    Behavior eb = svetlichny_box(SvetlichnyGame(2));
    for (std::size_t i = 0; i < fb.p.size(); ++i) fb.p[i] = eb.p[i].get_d();
    BellFunctional f = to_functional(SvetlichnyGame(2, {0, 1, 0}));
    CHECK(value(f, fb) == doctest::Approx(value(f, eb).get_d()).epsilon(1e-12));
}
