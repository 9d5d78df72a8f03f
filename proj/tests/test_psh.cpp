#include <doctest.h>

#include <cmath>

#include "qpt/ma.hpp"
#include "qpt/parser.hpp"
#include "qpt/psh.hpp"

using namespace qpt;

namespace {

const double pi2 = M_PI * M_PI;

Field q1_sq() { return parse_field("t1^2 + x1^2 + y1^2 + z1^2"); }

}  // namespace

TEST_CASE("grid bookkeeping") {
    Grid g = Grid::cube(2, 1.0, 5);
    CHECK(g.dim() == 2);
    CHECK(g.total() == 25);
    CHECK(g.step(0) == doctest::Approx(0.5));
    CHECK(g.point(0) == std::vector<double>{-1.0, -1.0});
    CHECK(g.point(24) == std::vector<double>{1.0, 1.0});
    CHECK(g.weight(0) == doctest::Approx(0.0625));   // corner
    CHECK(g.weight(12) == doctest::Approx(0.25));    // center
    double total_w = 0;
    for (std::size_t i = 0; i < g.total(); ++i) total_w += g.weight(i);
    CHECK(total_w == doctest::Approx(4.0));  // box area

    Grid c = Grid::cube(2, 1.0, 4, true);
    CHECK(c.step(0) == doctest::Approx(0.5));
    CHECK(c.point(0) == std::vector<double>{-0.75, -0.75});
    total_w = 0;
    for (std::size_t i = 0; i < c.total(); ++i) total_w += c.weight(i);
    CHECK(total_w == doctest::Approx(4.0));

    // flat/coords round trip
    for (std::size_t i = 0; i < g.total(); ++i) CHECK(g.flat(g.coords(i)) == i);

    // halo keeps spacing and node alignment
    Grid h = g.with_halo(2);
    CHECK(h.counts[0] == 9);
    CHECK(h.step(0) == doctest::Approx(0.5));
    CHECK(h.node(0, 2) == doctest::Approx(g.node(0, 0)));
    CHECK(h.strictly_contains(g));
    CHECK(!g.strictly_contains(h));

    CHECK_THROWS_AS(Grid::cube(2, 1.0, 1), std::invalid_argument);
}

TEST_CASE("three-sphere quadrature moments") {
    auto quad = s3_quadrature(16);
    double mass = 0, m1 = 0, m2 = 0, m4 = 0, cross = 0;
    for (const auto& n : quad) {
        mass += n.w;
        m1 += n.w * n.s[1];
        m2 += n.w * n.s[0] * n.s[0];
        m4 += n.w * n.s[0] * n.s[0] * n.s[0] * n.s[0];
        cross += n.w * n.s[0] * n.s[2];
    }
    CHECK(mass == doctest::Approx(2 * pi2).epsilon(1e-12));
    CHECK(std::abs(m1) < 1e-12);
    CHECK(std::abs(cross) < 1e-12);
    CHECK(m2 == doctest::Approx(2 * pi2 / 4).epsilon(1e-10));   // mean of a square is 1/4
    CHECK(m4 == doctest::Approx(2 * pi2 / 8).epsilon(1e-10));   // fourth moment 1/8

    // unit vectors land on the sphere
    for (const auto& n : quad) {
        double r2 = 0;
        for (double s : n.s) r2 += s * s;
        CHECK(r2 == doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("C2 criterion on samples") {
    Field u2 = parse_field("t1^2+x1^2+y1^2+z1^2 + t2^2+x2^2+y2^2+z2^2");
    PshVerdict v = is_psh_c2(u2, 2, Grid::cube(8, 0.5, 2));
    CHECK(v.status == PshStatus::StrictlyPsh);
    CHECK(v.worst == doctest::Approx(8.0));

    PshVerdict neg = is_psh_c2(-q1_sq(), 1, Grid::cube(4, 0.5, 2));
    CHECK(neg.status == PshStatus::NotPsh);
    CHECK(neg.worst == doctest::Approx(-8.0));
    CHECK(neg.witness_point.size() == 4);
    CHECK(!neg.detail.empty());

    PshVerdict lin = is_psh_c2(parse_field("t1 - 2*x1"), 1, Grid::cube(4, 0.5, 2));
    CHECK(lin.status == PshStatus::Psh);
    CHECK(lin.worst == doctest::Approx(0.0));

    // saddle in one quaternionic variable still has zero Dirac Hessian
    PshVerdict saddle = is_psh_c2(parse_field("t1^2 - x1^2"), 1, Grid::cube(4, 0.5, 3));
    CHECK(saddle.status == PshStatus::Psh);
}

TEST_CASE("exact C2 criterion at rational points") {
    auto var = [](std::size_t nv, std::size_t v) { return RPoly::variable(nv, v); };
    std::vector<std::vector<Rational>> pts1 = {{0, 0, 0, 0}, {1, Rational(1, 2), -1, 2}};
    std::vector<std::vector<Rational>> pts2 = {std::vector<Rational>(8, Rational(0))};

    RPoly q2(4);
    for (int v = 0; v < 4; ++v) q2 += var(4, v) * var(4, v);
    CHECK(is_psh_c2_exact(q2, pts1).status == PshStatus::StrictlyPsh);

    RPoly q2_first(8);
    for (int v = 0; v < 4; ++v) q2_first += var(8, v) * var(8, v);
    CHECK(is_psh_c2_exact(q2_first, pts2).status == PshStatus::Psh);  // Hessian diag(8, 0)

    RPoly saddle = var(4, 0) * var(4, 0) - var(4, 1) * var(4, 1);
    CHECK(is_psh_c2_exact(saddle, pts1).status == PshStatus::Psh);  // Hessian [0]

    PshVerdict neg = is_psh_c2_exact(-q2, pts1);
    CHECK(neg.status == PshStatus::NotPsh);
    CHECK(neg.worst < 0);
    CHECK(neg.witness_point.size() == 4);
}

TEST_CASE("line sub-mean-value test") {
    QuaternionicLine e1{{DQuaternion{}}, {DQuaternion{1, 0, 0, 0}}};

    // |q|^2 along any unit line has slack exactly r^2
    auto rep = line_subharmonic_test(q1_sq(), e1, {0.5, 1.0});
    CHECK(rep.status == PshStatus::Psh);
    CHECK(rep.samples[0].slack == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(rep.samples[1].slack == doctest::Approx(1.0).epsilon(1e-10));

    QuaternionicLine tilted{{DQuaternion{0.3, -0.2, 0.1, 0.0}},
                            {DQuaternion{0.5, 0.5, 0.5, 0.5}}};
    auto rep2 = line_subharmonic_test(q1_sq(), tilted, {0.7});
    CHECK(rep2.status == PshStatus::Psh);
    CHECK(rep2.samples[0].slack == doctest::Approx(0.49).epsilon(1e-10));

    auto flat = line_subharmonic_test(parse_field("3 - t1"), e1, {0.5, 1.0});
    CHECK(flat.status == PshStatus::Psh);
    CHECK(std::abs(flat.samples[0].slack) < 1e-12);

    auto bad = line_subharmonic_test(parse_field("-t1^2"), e1, {0.5});
    CHECK(bad.status == PshStatus::NotPsh);
    CHECK(bad.samples[0].slack == doctest::Approx(-0.0625).epsilon(1e-9));

    // slack grows with radius for convex potentials
    Field quart = parse_field("(t1^2+x1^2+y1^2+z1^2)^2");
    auto mono = line_subharmonic_test(quart, tilted, {0.2, 0.4, 0.8});
    CHECK(mono.status == PshStatus::Psh);
    CHECK(mono.samples[0].slack < mono.samples[1].slack);
    CHECK(mono.samples[1].slack < mono.samples[2].slack);

    CHECK_THROWS_AS(
        line_subharmonic_test(q1_sq(), QuaternionicLine{{DQuaternion{}}, {DQuaternion{}}}, {0.5}),
        std::invalid_argument);
}

TEST_CASE("the two criteria agree on a corpus") {
    struct Entry {
        Field f;
        std::size_t n;
    };
    std::vector<Entry> corpus = {
        {q1_sq(), 1},
        {parse_field("t1^2+x1^2+y1^2+z1^2 + 2*t1 - x1 + 5"), 1},
        {parse_field("(t1^2+x1^2+y1^2+z1^2)^2 + t1^2+x1^2+y1^2+z1^2"), 1},
        {-q1_sq(), 1},
        {parse_field("t1^2 - x1^2 - 3"), 1},
        {parse_field("t1^2+x1^2+y1^2+z1^2 + t2^2+x2^2+y2^2+z2^2"), 2},
        {-parse_field("t2^2+x2^2+y2^2+z2^2"), 2},
    };
    for (const auto& e : corpus) {
        PshVerdict c2 = is_psh_c2(e.f, e.n, Grid::cube(4 * e.n, 0.6, 2));
        bool c2_ok = c2.status != PshStatus::NotPsh;
        bool lines_ok = true;
        for (const auto& line : sample_lines(e.n, 6, 91u)) {
            auto rep = line_subharmonic_test(e.f, line, {0.25, 0.5});
            REQUIRE(rep.status != PshStatus::Inconclusive);
            lines_ok = lines_ok && rep.status == PshStatus::Psh;
        }
        CHECK(c2_ok == lines_ok);
    }
}

TEST_CASE("p-norm maximum") {
    Field f = parse_field("t1^2+x1^2+y1^2+z1^2 + 1"), g = parse_field("2");
    CHECK(pnorm_max(f, g, 1) == f + g);

    // equal arguments scale by 2^(1/p)
    Field same = pnorm_max(f, f, 4);
    std::vector<double> x = {0.3, -0.2, 0.5, 0.1};
    CHECK(same.eval(x) == doctest::Approx(std::pow(2.0, 0.25) * f.eval(x)).epsilon(1e-12));

    // approaches the pointwise max as p grows
    std::vector<double> far = {2.0, 0, 0, 0};  // f = 5, g = 2
    CHECK(pnorm_max(f, g, 8).eval(far) == doctest::Approx(5.0).epsilon(1e-3));

    // psh verdicts survive for the corpus pair at several p
    for (int p : {1, 2, 4, 8}) {
        PshVerdict v = is_psh_c2(pnorm_max(f, g, p), 1, Grid::cube(4, 0.7, 3));
        CHECK(v.status != PshStatus::NotPsh);
    }

    CHECK_THROWS_AS(pnorm_max(f, g, 0), std::invalid_argument);
}

TEST_CASE("mollification") {
    Grid g = Grid::cube(4, 1.0, 9);

    auto c = mollify(parse_field("5/2"), 0.3, g);
    for (double v : c.field.values) CHECK(v == doctest::Approx(2.5).epsilon(1e-14));
    CHECK(c.sup_distance < 1e-14);
    CHECK(c.kernel_mass == doctest::Approx(1.0).epsilon(1e-12));

    // symmetric kernels reproduce linear functions
    auto lin = mollify(parse_field("t1 - 2*x1 + 1/2"), 0.3, g);
    Field ref = parse_field("t1 - 2*x1 + 1/2");
    for (std::size_t i = 0; i < g.total(); ++i)
        CHECK(lin.field.values[i] == doctest::Approx(ref.eval(g.point(i))).epsilon(1e-12));

    // Lipschitz bound for the quaternionic norm: the kernel support is the
    // Euclidean eps-ball in dimension four, so |smoothed - u| <= eps
    Field qnorm = parse_field("sqrt(t1^2+x1^2+y1^2+z1^2)");
    auto mq = mollify(qnorm, 0.6, g);
    CHECK(mq.sup_distance <= 0.6 + 1e-12);
    CHECK(mq.sup_distance > 0.0);

    // kernel radius below one cell degenerates to the identity
    auto tiny = mollify(qnorm, 1e-4, g);
    CHECK(tiny.sup_distance == 0.0);

    CHECK_THROWS_AS(mollify(qnorm, 0.0, g), std::invalid_argument);
}

TEST_CASE("mollified psh functions stay psh on the grid") {
    Field qnorm = parse_field("sqrt(t1^2+x1^2+y1^2+z1^2)");
    Grid g = Grid::cube(4, 0.4, 17, true);
    for (double eps : {0.2, 0.1}) {
        auto m = mollify(qnorm, eps, g);
        CHECK(m.sup_distance > 0.0);  // the kernel really convolves at this spacing
        auto dens = fd_ma_density(m.field, 1);
        double worst = 0.0;
        for (std::size_t i = 0; i < g.total(); ++i)
            worst = std::min(worst, dens.values[i]);
        CHECK(worst > -1e-7);
    }
}
