#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "normplane/normed_plane.hpp"
#include "normplane/spec_json.hpp"

using namespace normplane;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_CASE("norm evaluation on the basic families") {
    NormedPlane l1(NormSpec::lp(1.0));
    CHECK(l1.norm({1.0, 1.0}) == 2.0);

    NormedPlane euclid(NormSpec::euclidean());
    CHECK(euclid.norm({3.0, 4.0}) == Catch::Approx(5.0).margin(1e-14));

    NormedPlane l2l1(NormSpec::lplq(2.0, 1.0));
    CHECK(l2l1.norm({1.0, -1.0}) == 2.0);               // mixed signs take the q=1 branch
    CHECK(l2l1.norm({1.0, 1.0}) == Catch::Approx(std::sqrt(2.0)));

    NormedPlane square(NormSpec::polygon({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}));
    CHECK(square.norm({0.5, 0.25}) == Catch::Approx(0.5).margin(1e-14));

    NormedPlane linf(NormSpec::linf());
    CHECK(linf.norm({0.5, 0.25}) == 0.5);

    CHECK(l1.norm({0.0, 0.0}) == 0.0);
    CHECK(square.norm({0.0, 0.0}) == 0.0);
}

TEST_CASE("norm rejects non-finite input") {
    NormedPlane euclid(NormSpec::euclidean());
    CHECK_THROWS_AS(euclid.norm({std::nan(""), 0.0}), DomainError);
    CHECK_THROWS_AS(euclid.norm({0.0, std::numeric_limits<double>::infinity()}), DomainError);
    CHECK_THROWS_AS(euclid.unit_vector(std::nan("")), DomainError);
}

TEST_CASE("invalid specs are rejected at construction") {
    CHECK_THROWS_AS(NormedPlane(NormSpec::lp(0.5)), ConfigError);
    CHECK_THROWS_AS(NormedPlane(NormSpec::lp(65.0)), ConfigError);
    CHECK_THROWS_AS(NormedPlane(NormSpec::lplq(1.0, 2.0)), ConfigError);  // q > p
    // too few vertices
    CHECK_THROWS_AS(NormedPlane(NormSpec::polygon({{1, 0}, {-1, 0}})), ConfigError);
    // not symmetric
    CHECK_THROWS_AS(NormedPlane(NormSpec::polygon({{1, 0}, {0, 1}, {-1, 0}, {-0.5, -1}})), ConfigError);
    // clockwise ordering
    CHECK_THROWS_AS(NormedPlane(NormSpec::polygon({{1, 0}, {0, -1}, {-1, 0}, {0, 1}})), ConfigError);
    // three collinear vertices (flat edge subdivided)
    CHECK_THROWS_AS(
        NormedPlane(NormSpec::polygon({{1, -1}, {1, 0}, {1, 1}, {-1, 1}, {-1, 0}, {-1, -1}})),
        ConfigError);
    // origin not interior (shifted square, symmetry broken too)
    CHECK_THROWS_AS(
        NormedPlane(NormSpec::polygon({{3, 1}, {1, 1}, {1, -1}, {3, -1}})),
        ConfigError);
}

TEST_CASE("unit_vector lands on the unit sphere") {
    NormedPlane l1(NormSpec::lp(1.0));
    const Vector2 diag = l1.unit_vector(kPi / 4.0);
    CHECK(diag.u == Catch::Approx(0.5).margin(1e-15));
    CHECK(diag.v == Catch::Approx(0.5).margin(1e-15));

    NormedPlane euclid(NormSpec::euclidean());
    const Vector2 e0 = euclid.unit_vector(0.0);
    CHECK(e0.u == 1.0);
    CHECK(e0.v == 0.0);

    NormedPlane l2l1(NormSpec::lplq(2.0, 1.0));
    const Vector2 w = l2l1.unit_vector(3.0 * kPi / 4.0);
    CHECK(w.u == Catch::Approx(-0.5).margin(1e-15));
    CHECK(w.v == Catch::Approx(0.5).margin(1e-15));

    // periodicity and antipodal symmetry
    const Vector2 a = l2l1.unit_vector(1.1);
    const Vector2 b = l2l1.unit_vector(1.1 + kPi);
    CHECK(a.u == Catch::Approx(-b.u).margin(1e-15));
    CHECK(a.v == Catch::Approx(-b.v).margin(1e-15));
}

TEST_CASE("unit sphere parameterization stays unit on a 720 grid") {
    std::vector<NormedPlane> planes;
    planes.emplace_back(NormSpec::lp(1.0));
    planes.emplace_back(NormSpec::euclidean());
    planes.emplace_back(NormSpec::lp(3.0));
    planes.emplace_back(NormSpec::lp(7.5));
    planes.emplace_back(NormSpec::linf());
    planes.emplace_back(NormSpec::lplq(2.0, 1.0));
    planes.emplace_back(NormSpec::lplq(std::numeric_limits<double>::infinity(), 1.0));
    planes.emplace_back(random_polygon_spec(7));
    for (const auto& plane : planes) {
        double worst = 0.0;
        for (int i = 0; i < 720; ++i) {
            const double theta = 2.0 * kPi * i / 720.0;
            worst = std::max(worst, std::fabs(plane.norm(plane.unit_vector(theta)) - 1.0));
        }
        INFO(plane.label());
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("lplq(p,p) agrees with lp(p)") {
    NormedPlane a(NormSpec::lplq(3.0, 3.0));
    NormedPlane b(NormSpec::lp(3.0));
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    for (int i = 0; i < 1000; ++i) {
        const Vector2 x{coord(rng), coord(rng)};
        CHECK(std::fabs(a.norm(x) - b.norm(x)) <= 1e-12 * (1.0 + b.norm(x)));
    }
}

TEST_CASE("polygon gauges of the l1 and linf balls match the closed forms") {
    NormedPlane diamond(NormSpec::polygon({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
    NormedPlane l1(NormSpec::lp(1.0));
    NormedPlane square(NormSpec::polygon({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}));
    NormedPlane linf(NormSpec::linf());
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    for (int i = 0; i < 1000; ++i) {
        const Vector2 x{coord(rng), coord(rng)};
        CHECK(std::fabs(diamond.norm(x) - l1.norm(x)) <= 1e-12 * (1.0 + l1.norm(x)));
        CHECK(std::fabs(square.norm(x) - linf.norm(x)) <= 1e-12 * (1.0 + linf.norm(x)));
    }
}

// The two affine functions x0(m) = (m-b)/(a-b) and y0(m) = 1 - x0(m) span a
// plane inside C[a,b]; because affine functions attain their sup at an
// endpoint and (x0, y0) evaluate to (1,0) and (0,1) there, the induced norm
// of c*x0 + d*y0 is exactly max(|c|, |d|).
TEST_CASE("the C[a,b] affine witness plane is the linf plane") {
    const double a = -1.5, b = 2.0;
    auto x0 = [&](double m) { return (m - b) / (a - b); };
    auto y0 = [&](double m) { return -(m - b) / (a - b) + 1.0; };
    NormedPlane linf(NormSpec::linf());
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double c = coef(rng);
        const double d = coef(rng);
        double sup = 0.0;
        for (int k = 0; k <= 400; ++k) {
            const double m = a + (b - a) * k / 400.0;
            sup = std::max(sup, std::fabs(c * x0(m) + d * y0(m)));
        }
        const double expected = linf.norm({c, d});
        CHECK(sup <= expected + 1e-12);
        const double at_ends = std::max(std::fabs(c * x0(a) + d * y0(a)), std::fabs(c * x0(b) + d * y0(b)));
        CHECK(at_ends == Catch::Approx(expected).margin(1e-12));
    }
}

TEST_CASE("validate_norm passes on genuine norms") {
    CHECK(NormedPlane(NormSpec::lp(3.0)).validate_norm(1000).passed);
    NormSpec hexagon = NormSpec::polygon(
        {{1, 0}, {0.5, 0.9}, {-0.5, 0.9}, {-1, 0}, {-0.5, -0.9}, {0.5, -0.9}});
    CHECK(NormedPlane(hexagon).validate_norm(1000).passed);
    CHECK(NormedPlane(NormSpec::lplq(std::numeric_limits<double>::infinity(), 1.0))
              .validate_norm(1000)
              .passed);
    CHECK_THROWS_AS(NormedPlane(NormSpec::euclidean()).validate_norm(50), DomainError);
}

TEST_CASE("random polygon specs are valid and deterministic") {
    for (std::uint64_t seed : {1ULL, 2ULL, 42ULL}) {
        const NormSpec spec = random_polygon_spec(seed);
        const NormSpec again = random_polygon_spec(seed);
        REQUIRE(spec.vertices.size() == again.vertices.size());
        for (std::size_t i = 0; i < spec.vertices.size(); ++i) {
            CHECK(spec.vertices[i] == again.vertices[i]);
        }
        NormedPlane plane(spec);
        CHECK(plane.validate_norm(500).passed);
    }
}

TEST_CASE("norm spec JSON round trip and aliases") {
    const NormSpec inline_spec = parse_space_source(R"({"family":"lplq","p":"inf","q":1})");
    CHECK(inline_spec.family == NormFamily::LpLq);
    CHECK(std::isinf(inline_spec.p));

    const NormSpec alias = parse_space_source("l2-l1");
    CHECK(alias.family == NormFamily::LpLq);
    CHECK(alias.p == 2.0);
    CHECK(alias.q == 1.0);

    const NormSpec poly = parse_space_source(R"({"family":"polygon","vertices":[[1,1],[-1,1],[-1,-1],[1,-1]]})");
    CHECK(poly.vertices.size() == 4);

    const auto j = spec_to_json(poly);
    const NormSpec back = spec_from_json(j);
    CHECK(back.vertices.size() == 4);
    CHECK(back.vertices[0] == Vector2{1.0, 1.0});

    CHECK_THROWS_AS(parse_space_source(R"({"family":"lp"})"), ConfigError);
    CHECK_THROWS_AS(parse_space_source("no-such-alias"), ConfigError);
    CHECK_THROWS_AS(parse_space_source(R"({"family":"lp","p":"big"})"), ConfigError);
}
