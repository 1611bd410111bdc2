#include "conic_cubics/descartes.hpp"

#include "conic_cubics/intersect.hpp"
#include "conic_cubics/oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace conic_cubics;

namespace {

std::vector<double> expanded(const RootReport& r) {
    std::vector<double> out;
    for (const RootEntry& e : r.roots)
        out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.value);
    std::sort(out.begin(), out.end());
    return out;
}

DepressedForm cubic_form(double p, double q) {
    return DepressedForm{3, p, q, 0.0, 0.0};
}

DepressedForm quartic_form(double p, double q, double r) {
    return DepressedForm{4, p, q, r, 0.0};
}

} // namespace

TEST_CASE("circle parameters follow the completed square") {
    const auto c = descartes_construction(cubic_form(-3.0, -2.0));
    CHECK(c.center_z == doctest::Approx(1.0));
    CHECK(c.center_y == doctest::Approx(2.0));
    CHECK(c.radius_sq == doctest::Approx(5.0));
    CHECK(c.valid);
    CHECK(c.parabola.cls == ConicClass::Parabola);
    CHECK(c.circle().cls == ConicClass::Circle);

    // Biquadratic z^4 - 5 z^2 + 4: center on the axis.
    const auto b = descartes_construction(quartic_form(-5.0, 0.0, 4.0));
    CHECK(b.center_z == doctest::Approx(0.0).scale(1));
    CHECK(b.center_y == doctest::Approx(3.0));
    CHECK(b.radius_sq == doctest::Approx(5.0));

    // z^3 + z has only the root z = 0; the circle shrinks to a point.
    const auto p = descartes_construction(cubic_form(1.0, 0.0));
    CHECK(p.radius_sq == doctest::Approx(0.0).scale(1));
    CHECK_FALSE(p.valid);
}

TEST_CASE("every root lies on both the parabola and the circle") {
    std::mt19937_64 rng(59);
    std::uniform_real_distribution<double> dist(-6.0, 6.0);
    for (int k = 0; k < 200; ++k) {
        const auto form = quartic_form(dist(rng), dist(rng), dist(rng));
        const auto c = descartes_construction(form);
        if (!c.valid) continue;
        const Conic circle = c.circle();
        for (const RootEntry& e : solve_descartes(form).roots) {
            CHECK(on_curve(c.parabola, e.value, e.value * e.value, 1e-8));
            CHECK(on_curve(circle, e.value, e.value * e.value, 1e-8));
        }
    }
}

TEST_CASE("named depressed cubics") {
    const auto r1 = solve_descartes(cubic_form(-3.0, -2.0)); // (z-2)(z+1)^2
    REQUIRE(r1.roots.size() == 2);
    CHECK(r1.roots[0].value == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(r1.roots[0].multiplicity == 2);
    CHECK(r1.roots[1].value == doctest::Approx(2.0).epsilon(1e-10));

    const auto r2 = solve_descartes(cubic_form(-1.0, 0.0)); // z(z-1)(z+1)
    const auto v2 = expanded(r2);
    REQUIRE(v2.size() == 3);
    CHECK(v2[0] == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(v2[1] == doctest::Approx(0.0).scale(1));
    CHECK(v2[2] == doctest::Approx(1.0).epsilon(1e-10));

    // z^3 + z = 0: the point circle still certifies the root z = 0.
    const auto r3 = solve_descartes(cubic_form(1.0, 0.0));
    REQUIRE(r3.roots.size() == 1);
    CHECK(r3.roots[0].value == doctest::Approx(0.0).scale(1));
    CHECK(r3.roots[0].multiplicity == 1);
}

TEST_CASE("named depressed quartics") {
    const auto r1 = solve_descartes(quartic_form(-5.0, 0.0, 4.0));
    const auto v1 = expanded(r1);
    REQUIRE(v1.size() == 4);
    const double want[] = {-2, -1, 1, 2};
    for (int i = 0; i < 4; ++i)
        CHECK(v1[i] == doctest::Approx(want[i]).epsilon(1e-9));

    const auto none = solve_descartes(quartic_form(1.0, 0.0, 1.0)); // no real roots
    CHECK(none.roots.empty());

    // z^4 + z^2 = z^2 (z^2 + 1): double root at the origin.
    const auto dz = solve_descartes(quartic_form(1.0, 0.0, 0.0));
    REQUIRE(dz.roots.size() == 1);
    CHECK(dz.roots[0].value == doctest::Approx(0.0).scale(1));
    CHECK(dz.roots[0].multiplicity == 2);
}

TEST_CASE("geometric roots match the closed-form solver") {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    for (int k = 0; k < 300; ++k) {
        const auto form = cubic_form(dist(rng), dist(rng));
        const auto geo = expanded(solve_descartes(form));
        const auto alg = expanded(solve_cubic_oracle(Cubic{1.0, 0.0, form.p, form.q}));
        REQUIRE(geo.size() == alg.size());
        for (std::size_t i = 0; i < geo.size(); ++i)
            CHECK(geo[i] == doctest::Approx(alg[i]).epsilon(1e-9));
    }
    for (int k = 0; k < 300; ++k) {
        const auto form = quartic_form(dist(rng), dist(rng), dist(rng));
        const auto geo = expanded(solve_descartes(form));
        const auto alg =
            expanded(solve_quartic_oracle(Quartic{1.0, 0.0, form.p, form.q, form.r}));
        REQUIRE(geo.size() == alg.size());
        for (std::size_t i = 0; i < geo.size(); ++i)
            CHECK(geo[i] == doctest::Approx(alg[i]).epsilon(1e-9));
    }
}

TEST_CASE("general cubic through the depression pipeline") {
    // x^3 - 6x^2 + 11x - 6 = (x-1)(x-2)(x-3)
    const DepressedForm d = depress(Cubic{1, -6, 11, -6});
    const auto roots = expanded(solve_descartes(d));
    REQUIRE(roots.size() == 3);
    const double want[] = {1, 2, 3};
    for (int i = 0; i < 3; ++i)
        CHECK(roots[i] - d.shift == doctest::Approx(want[i]).epsilon(1e-9));
}
