#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "reference.hpp"
#include "retina/errors.hpp"
#include "retina/fuzzy.hpp"

using namespace retina;

TEST_CASE("membership_set places centers and widths from M") {
    MembershipSet s = membership_set(50.0);
    CHECK(s.very_dark.center == 10.0);
    CHECK(s.very_dark.width == 25.0);
    CHECK(s.dark.center == 0.45 * 50.0);
    CHECK(s.dark.width == 12.5);
    CHECK(s.medium.center == 1.1 * 50.0);
    CHECK(s.medium.width == 50.0 / 6.0);
    CHECK(s.bright.center == 100.0);
    CHECK(s.bright.width == 12.5);
    CHECK(s.very_bright.center == 125.0);
    CHECK(s.very_bright.width == 12.5);

    // the low-M floor on the very-dark center
    CHECK(membership_set(20.0).very_dark.center == -20.0);
    CHECK(membership_set(18.0).very_dark.center == -20.0);

    MembershipSet s18 = membership_set(18.0);
    CHECK(s18.bright.center == 2.5 * 18.0 - 25.0);
    CHECK(s18.medium.center == 1.1 * 18.0);
    CHECK(s18.medium.center <= s18.bright.center);
}

TEST_CASE("membership_set rejects M outside [5,95]") {
    CHECK_THROWS_AS(membership_set(4.99), Error);
    CHECK_THROWS_AS(membership_set(95.01), Error);
    CHECK_NOTHROW(membership_set(5.0));
    CHECK_NOTHROW(membership_set(95.0));
}

// The full five-value chain very_dark <= dark <= medium <= bright <=
// very_bright only holds between M = 125/7 (medium crosses bright below) and
// M = 60 (bright crosses the fixed very-bright center 125 above). The
// antecedent chain dark <= medium <= bright and the consequent chain
// very_dark <= medium <= very_bright hold all the way to 95.
TEST_CASE("center ordering on its validity intervals") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> full_chain(125.0 / 7.0, 60.0);
    for (int i = 0; i < 500; ++i) {
        MembershipSet s = membership_set(full_chain(rng));
        CHECK(s.very_dark.center <= s.dark.center);
        CHECK(s.dark.center <= s.medium.center);
        CHECK(s.medium.center <= s.bright.center);
        CHECK(s.bright.center <= s.very_bright.center);
    }
    std::uniform_real_distribution<double> wide(18.0, 95.0);
    for (int i = 0; i < 500; ++i) {
        MembershipSet s = membership_set(wide(rng));
        CHECK(s.dark.center <= s.medium.center);
        CHECK(s.medium.center <= s.bright.center);
        CHECK(s.very_dark.center <= s.medium.center);
        CHECK(s.medium.center <= s.very_bright.center);
    }
}

TEST_CASE("membership degrees peak at the centers") {
    MembershipSet s = membership_set(50.0);
    CHECK(evaluate_memberships(s.medium.center, s).medium == 1.0);
    CHECK(evaluate_memberships(s.dark.center, s).dark == 1.0);
    CHECK(evaluate_memberships(s.very_bright.center, s).very_bright == 1.0);

    const double one_sigma = evaluate_memberships(s.dark.center + s.dark.width, s).dark;
    CHECK(std::fabs(one_sigma - std::exp(-0.5)) < 1e-12);
}

TEST_CASE("membership degrees match the direct evaluation") {
    MembershipSet s = membership_set(50.0);
    MembershipDegrees d = evaluate_memberships(55.0, s);
    refimpl::OracleDegrees o = refimpl::membership_oracle(55.0, 50.0);
    CHECK(d.very_dark == doctest::Approx(o.very_dark).epsilon(1e-14));
    CHECK(d.dark == doctest::Approx(o.dark).epsilon(1e-14));
    CHECK(d.medium == doctest::Approx(o.medium).epsilon(1e-14));
    CHECK(d.bright == doctest::Approx(o.bright).epsilon(1e-14));
    CHECK(d.very_bright == doctest::Approx(o.very_bright).epsilon(1e-14));
}

TEST_CASE("membership degrees stay within [0,1], positive away from underflow") {
    std::mt19937 rng(555);
    std::uniform_real_distribution<double> mdist(5.0, 95.0);
    std::uniform_real_distribution<double> xdist(0.0, 100.0);
    for (int i = 0; i < 2000; ++i) {
        const double m = mdist(rng);
        const double x = xdist(rng);
        MembershipSet s = membership_set(m);
        MembershipDegrees d = evaluate_memberships(x, s);
        for (double v : {d.very_dark, d.dark, d.medium, d.bright, d.very_bright}) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
        // positivity where exp() cannot underflow
        if (std::fabs((x - s.medium.center) / s.medium.width) < 35.0) CHECK(d.medium > 0.0);
    }
}

TEST_CASE("fuzzy_transform pulls a medium-centered pixel toward very dark") {
    MembershipSet s = membership_set(50.0);
    Plane p(1, 1, 0.0, 100.0, 55.0);
    Plane out = fuzzy_transform(p, s);
    const double expect = refimpl::fuzzy_oracle(55.0, 50.0);
    CHECK(out.data[0] == doctest::Approx(expect).epsilon(1e-14));
    CHECK(out.data[0] < 55.0);
}

TEST_CASE("fuzzy_transform passes through when every rule underflows") {
    MembershipSet s = membership_set(50.0);
    Plane p(2, 1, -100.0, 100.0);
    p.data[0] = -100.0;
    p.data[1] = 55.0;
    Plane out = fuzzy_transform(p, s);
    CHECK(out.data[0] == -100.0);
}

TEST_CASE("fuzzy_transform maps constant planes to constant planes") {
    MembershipSet s = membership_set(42.0);
    Plane p(6, 3, 0.0, 100.0, 31.25);
    Plane out = fuzzy_transform(p, s);
    for (double v : out.data) CHECK(v == out.data[0]);
    CHECK(out.lo == out.hi);  // recorded range collapses on purpose
}

TEST_CASE("fuzzy_transform is a pure per-pixel map") {
    std::mt19937 rng(31337);
    std::uniform_real_distribution<double> val(0.0, 100.0);
    Plane p(9, 5, 0.0, 100.0);
    for (double& v : p.data) v = val(rng);
    MembershipSet s = membership_set(61.5);

    std::vector<std::size_t> perm(p.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);

    Plane q(9, 5, 0.0, 100.0);
    for (std::size_t i = 0; i < perm.size(); ++i) q.data[i] = p.data[perm[i]];

    Plane po = fuzzy_transform(p, s);
    Plane qo = fuzzy_transform(q, s);
    for (std::size_t i = 0; i < perm.size(); ++i) CHECK(qo.data[i] == po.data[perm[i]]);
}

TEST_CASE("fuzzy_transform agrees with the scalar oracle") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> mdist(5.0, 95.0);
    std::uniform_real_distribution<double> xdist(0.0, 100.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double m = mdist(rng);
        MembershipSet s = membership_set(m);
        Plane p(20, 1, 0.0, 100.0);
        for (double& v : p.data) v = xdist(rng);
        Plane out = fuzzy_transform(p, s);
        for (std::size_t i = 0; i < p.size(); ++i) {
            const double expect = refimpl::fuzzy_oracle(p.data[i], m);
            CHECK(std::fabs(out.data[i] - expect) <= 1e-12 * std::max(1.0, std::fabs(expect)));
        }
    }
}

TEST_CASE("min_max_scale stretches to exactly [0,100]") {
    Plane p(2, 1, 0.0, 100.0);
    p.data = {20.0, 70.0};
    Plane out = min_max_scale(p);
    CHECK(out.data[0] == 0.0);
    CHECK(out.data[1] == 100.0);

    Plane q(3, 1, 0.0, 100.0);
    q.data = {0.0, 50.0, 100.0};
    Plane qo = min_max_scale(q);
    CHECK(qo.data[0] == 0.0);
    CHECK(qo.data[1] == 50.0);
    CHECK(qo.data[2] == 100.0);
}

TEST_CASE("min_max_scale rejects constant planes") {
    Plane p(4, 4, 0.0, 100.0, 33.0);
    CHECK_THROWS_AS(min_max_scale(p), Error);
    try {
        min_max_scale(p);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DegenerateRange);
    }
}

TEST_CASE("min_max_scale hits the endpoints and ignores affine shifts") {
    std::mt19937 rng(808);
    std::uniform_real_distribution<double> val(-30.0, 130.0);
    std::uniform_real_distribution<double> adist(0.5, 2.0);
    std::uniform_real_distribution<double> bdist(-50.0, 50.0);
    for (int trial = 0; trial < 100; ++trial) {
        Plane p(12, 4, -30.0, 130.0);
        for (double& v : p.data) v = val(rng);
        p.data[0] = -30.0;  // guarantee a usable span
        p.data[1] = 130.0;
        Plane out = min_max_scale(p);
        CHECK(*std::min_element(out.data.begin(), out.data.end()) == 0.0);
        CHECK(*std::max_element(out.data.begin(), out.data.end()) == 100.0);

        const double a = adist(rng), b = bdist(rng);
        Plane shifted = p;
        for (double& v : shifted.data) v = a * v + b;
        Plane out2 = min_max_scale(shifted);
        for (std::size_t i = 0; i < out.size(); ++i)
            CHECK(out2.data[i] == doctest::Approx(out.data[i]).epsilon(1e-9));
    }
}

namespace {

Rgb8Image gray_image(int w, int h, std::uint8_t v) {
    Rgb8Image img(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) img.set(x, y, v, v, v);
    return img;
}

}  // namespace

TEST_CASE("fce rejects constant-luminosity images") {
    CHECK_THROWS_AS(fce(gray_image(8, 8, 120)), Error);
}

TEST_CASE("fce maps a two-luminosity image onto {0,100}") {
    Rgb8Image img = gray_image(2, 1, 77);  // ~30 luminosity
    img.set(1, 0, 153, 153, 153);          // ~60 luminosity
    Plane out = fce(img);
    const double lo = std::min(out.data[0], out.data[1]);
    const double hi = std::max(out.data[0], out.data[1]);
    CHECK(lo == 0.0);
    CHECK(hi == 100.0);
}

TEST_CASE("fce output spans [0,100] and keeps dimensions") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> level(30, 220);
    Rgb8Image img(21, 13);
    for (int y = 0; y < 13; ++y)
        for (int x = 0; x < 21; ++x) {
            auto v = static_cast<std::uint8_t>(level(rng));
            img.set(x, y, v, v, v);
        }
    Plane out = fce(img);
    CHECK(out.width == 21);
    CHECK(out.height == 13);
    CHECK(*std::min_element(out.data.begin(), out.data.end()) == 0.0);
    CHECK(*std::max_element(out.data.begin(), out.data.end()) == 100.0);

    Plane again = fce(img);
    CHECK(again.data == out.data);  // deterministic
}
