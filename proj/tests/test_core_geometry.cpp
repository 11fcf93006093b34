#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyplab/curvature.hpp"
#include "hyplab/rng.hpp"

#include <cmath>

using namespace hyplab;

namespace {

// Independent expansion of the Gauss equation, term by term from the wedge
// definition (u ^ v) z = <v,z> u - <u,z> v; kept separate from the library
// route on purpose.
Mat3 gauss_brute(const ShapeOperator& a, const SpaceForm& sf, const Vec3& x, const Vec3& y) {
    const Mat3& phi = phi_matrix();
    const Vec3 ax = a.matrix() * x, ay = a.matrix() * y;
    const Vec3 px = phi * x, py = phi * y;
    Mat3 out;
    for (int col = 0; col < 3; ++col) {
        const Vec3 z = Vec3::Unit(col);
        const Vec3 rz = ay.dot(z) * ax - ax.dot(z) * ay +
                        sf.c * (y.dot(z) * x - x.dot(z) * y + py.dot(z) * px -
                                px.dot(z) * py + 2.0 * x.dot(py) * (phi * z));
        out.col(col) = rz;
    }
    return out;
}

ShapeOperator random_op(Rng& rng) {
    return ShapeOperator{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                         rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
}

} // namespace

TEST_CASE("space form constructors enforce c r^2 = +/-1") {
    const SpaceForm cp2 = SpaceForm::projective(2.0);
    CHECK(cp2.c == doctest::Approx(0.25));
    CHECK(cp2.valid());
    const SpaceForm ch2 = SpaceForm::from_c(-4.0);
    CHECK(ch2.r == doctest::Approx(0.5));
    CHECK(ch2.valid());
    CHECK_THROWS_AS((void)SpaceForm::from_c(0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)SpaceForm::from_c(1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)SpaceForm::projective(-1.0), std::invalid_argument);
}

TEST_CASE("phi matrix conventions") {
    const Mat3& phi = phi_matrix();
    CHECK((phi + phi.transpose()).norm() == 0.0);
    Mat3 p2_expected = Mat3::Zero();
    p2_expected(1, 1) = -1.0;
    p2_expected(2, 2) = -1.0;
    CHECK((phi_squared() - p2_expected).norm() == 0.0);
    CHECK((phi * phi * phi + phi).norm() == 0.0); // phi^3 = -phi
    CHECK((phi * frame_x() - frame_y()).norm() == 0.0);
    CHECK((phi * frame_y() + frame_x()).norm() == 0.0);
}

TEST_CASE("ambient complex structure squares to minus the identity") {
    const Mat4& j = ambient_complex_structure();
    CHECK((j * j + Mat4::Identity()).norm() == 0.0);
    CHECK((j + j.transpose()).norm() == 0.0);
}

TEST_CASE("ambient curvature on a unitary frame") {
    const SpaceForm cp2 = SpaceForm::projective(1.0);
    const Vec4 e1 = Vec4::Unit(0), e2 = Vec4::Unit(1), e3 = Vec4::Unit(2);

    SUBCASE("holomorphic plane has sectional curvature 4c") {
        CHECK((ambient_curvature(e1, e2, e2, cp2) - 4.0 * e1).norm() < 1e-15);
    }
    SUBCASE("skew in (X, Y)") {
        Rng rng(11);
        for (int i = 0; i < 20; ++i) {
            Vec4 x, z;
            for (int k = 0; k < 4; ++k) {
                x(k) = rng.uniform(-2.0, 2.0);
                z(k) = rng.uniform(-2.0, 2.0);
            }
            CHECK(ambient_curvature(x, x, z, cp2).norm() == 0.0);
        }
    }
    SUBCASE("totally real plane has sectional curvature c") {
        CHECK((ambient_curvature(e1, e3, e3, cp2) - e1).norm() < 1e-15);
    }
}

TEST_CASE("gauss curvature operator") {
    const SpaceForm cp2 = SpaceForm::projective(1.0);

    SUBCASE("all-ones shape operator") {
        const ShapeOperator a{1, 1, 1, 1, 1};
        Mat3 expected;
        expected << 0, 1, 1,
                   -1, 0, 4,
                   -1, -4, 0;
        CHECK((gauss_curvature(a, cp2, frame_x(), frame_y()) - expected).norm() < 1e-14);
    }
    SUBCASE("vanishes on equal arguments") {
        const ShapeOperator a{0.3, -1.2, 0.7, 0.2, -0.4};
        CHECK(gauss_curvature(a, cp2, frame_x(), frame_x()).norm() == 0.0);
    }
    SUBCASE("matches the independent term-by-term expansion") {
        Rng rng(5);
        for (int i = 0; i < 200; ++i) {
            const ShapeOperator a = random_op(rng);
            const SpaceForm sf =
                rng.coin() ? SpaceForm::projective(rng.uniform(0.5, 2.0))
                           : SpaceForm::hyperbolic(rng.uniform(0.5, 2.0));
            Vec3 x(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
            Vec3 y(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
            const Mat3 r = gauss_curvature(a, sf, x, y);
            CHECK((r - gauss_brute(a, sf, x, y)).cwiseAbs().maxCoeff() < 1e-12);
            CHECK((r + r.transpose()).norm() < 1e-12);                       // skew output
            CHECK((r + gauss_curvature(a, sf, y, x)).norm() < 1e-12);        // skew in (x,y)
        }
    }
}

TEST_CASE("ricci tensor") {
    const SpaceForm cp2 = SpaceForm::projective(1.0);

    SUBCASE("all-ones example") {
        const ShapeOperator a{1, 1, 1, 1, 1};
        Mat3 expected;
        expected << 3, 1, -1,
                    1, 5, 1,
                   -1, 1, 6;
        CHECK((ricci(a, cp2) - expected).norm() < 1e-14);
    }
    SUBCASE("totally geodesic case") {
        const ShapeOperator a{0, 0, 0, 0, 0};
        CHECK((ricci(a, cp2) - Vec3(2, 5, 5).asDiagonal().toDenseMatrix()).norm() == 0.0);
    }
    SUBCASE("closed form equals trace oracle") {
        Rng rng(7);
        for (int i = 0; i < 300; ++i) {
            const ShapeOperator a = random_op(rng);
            const SpaceForm sf =
                rng.coin() ? SpaceForm::projective(rng.uniform(0.5, 2.0))
                           : SpaceForm::hyperbolic(rng.uniform(0.5, 2.0));
            const Mat3 s = ricci(a, sf, RicciMode::ClosedForm);
            CHECK((s - ricci(a, sf, RicciMode::TraceOracle)).cwiseAbs().maxCoeff() < 1e-9);
            CHECK((s - s.transpose()).norm() < 1e-12);
        }
    }
}

TEST_CASE("star-Ricci tensor") {
    const SpaceForm cp2 = SpaceForm::projective(1.0);

    SUBCASE("totally geodesic case") {
        const ShapeOperator a{0, 0, 0, 0, 0};
        CHECK((star_ricci(a, cp2) - Vec3(0, 4, 4).asDiagonal().toDenseMatrix()).norm() == 0.0);
    }
    SUBCASE("generic structure: zero first row, W-perp multiple of identity") {
        Rng rng(13);
        for (int i = 0; i < 300; ++i) {
            const ShapeOperator a = random_op(rng);
            const SpaceForm sf =
                rng.coin() ? SpaceForm::projective(rng.uniform(0.5, 2.0))
                           : SpaceForm::hyperbolic(rng.uniform(0.5, 2.0));
            const Mat3 s = star_ricci(a, sf);
            const double k = 4.0 * sf.c + a.lambda * a.nu - a.mu * a.mu;
            CHECK(s.row(0).norm() == 0.0);
            CHECK(s(1, 0) == doctest::Approx(a.beta * a.nu).epsilon(1e-12));
            CHECK(s(2, 0) == doctest::Approx(-a.beta * a.mu).epsilon(1e-12));
            CHECK(s(1, 1) == doctest::Approx(k).epsilon(1e-12));
            CHECK(s(2, 2) == doctest::Approx(k).epsilon(1e-12));
            CHECK(s(1, 2) == 0.0);
            CHECK(s(2, 1) == 0.0);
            CHECK((s - star_ricci(a, sf, RicciMode::TraceOracle)).cwiseAbs().maxCoeff() <
                  1e-9);
        }
    }
    SUBCASE("Hopf with alpha = 0 acts as 5c on the holomorphic distribution") {
        Rng rng(17);
        for (int i = 0; i < 100; ++i) {
            const SpaceForm sf =
                rng.coin() ? SpaceForm::projective(rng.uniform(0.5, 2.0))
                           : SpaceForm::hyperbolic(rng.uniform(0.5, 2.0));
            const double lambda = rng.uniform_away_from_zero(0.2, 2.0);
            const ShapeOperator a{0, 0, lambda, 0, sf.c / lambda};
            const Mat3 s = star_ricci(a, sf);
            CHECK((s.block<2, 2>(1, 1) - 5.0 * sf.c * Eigen::Matrix2d::Identity()).norm() <
                  1e-12);
            CHECK(star_scalar(a, sf) == doctest::Approx(10.0 * sf.c).epsilon(1e-12));
        }
    }
}

TEST_CASE("star-scalar curvature values") {
    const SpaceForm cp2 = SpaceForm::projective(1.0);
    CHECK(star_scalar(ShapeOperator{0.4, 0.9, 1, 0, 1}, cp2) == doctest::Approx(10.0));
    // ruled: lambda = mu = nu = 0
    CHECK(star_scalar(ShapeOperator{0.7, 1.3, 0, 0, 0}, cp2) == doctest::Approx(8.0));
    CHECK(star_scalar(ShapeOperator{0.7, 1.3, 0, 0, 0}, SpaceForm::hyperbolic(1.0)) ==
          doctest::Approx(-8.0));
    // type B relation lambda nu = -c
    CHECK(star_scalar(ShapeOperator{-4, 0, 2, 0, -0.5}, cp2) == doctest::Approx(6.0));
}

TEST_CASE("Hopf identity residual and partner curvature") {
    SUBCASE("horosphere satisfies the basic Hopf identity") {
        const SpaceForm ch2 = SpaceForm::hyperbolic(1.0);
        CHECK(hopf_residual(ShapeOperator{2, 0, 1, 0, 1}, ch2) < 1e-15);
    }
    SUBCASE("partner curvature solves the pairing relation") {
        const SpaceForm cp2 = SpaceForm::projective(1.0);
        CHECK(partner_curvature(1.0, 0.0, cp2) == doctest::Approx(1.0));
        CHECK(partner_curvature(2.0, 1.0, cp2) == doctest::Approx(4.0 / 3.0));
        CHECK(partner_curvature(2.0, 2.0, cp2) == doctest::Approx(3.0));
        CHECK_THROWS_AS((void)partner_curvature(1.0, 2.0, cp2), std::domain_error);
    }
    SUBCASE("residual vanishes for phi-paired Hopf operators, rotated frames included") {
        Rng rng(23);
        for (int i = 0; i < 200; ++i) {
            const SpaceForm sf =
                rng.coin() ? SpaceForm::projective(rng.uniform(0.5, 2.0))
                           : SpaceForm::hyperbolic(rng.uniform(0.5, 2.0));
            const double alpha = rng.uniform(-2.0, 2.0);
            double lambda = rng.uniform(-2.0, 2.0);
            if (std::abs(lambda - 0.5 * alpha) < 0.1) continue;
            const double nu = partner_curvature(lambda, alpha, sf);
            if (!std::isfinite(nu) || std::abs(nu) > 50.0) continue;

            const ShapeOperator a{alpha, 0, lambda, 0, nu};
            CHECK(hopf_residual(a, sf) < 1e-10 * (1.0 + nu * nu));

            // rotating (X, Y) keeps the identity (mu becomes nonzero)
            const double psi = rng.uniform(0.0, 3.14);
            Mat3 p;
            p << 1, 0, 0,
                 0, std::cos(psi), -std::sin(psi),
                 0, std::sin(psi), std::cos(psi);
            const Mat3 rot = p.transpose() * a.matrix() * p;
            const ShapeOperator ar{rot(0, 0), 0, rot(1, 1), rot(1, 2), rot(2, 2)};
            CHECK(hopf_residual(ar, sf) < 1e-9 * (1.0 + nu * nu));
        }
    }
}

TEST_CASE("covariant derivative of the structure vector") {
    SUBCASE("Hopf direction") {
        const ShapeOperator a{1.4, 0, 0.3, 0.2, -1.0};
        CHECK(nabla_w(a, frame_w()).norm() == 0.0);
    }
    SUBCASE("generic column") {
        const ShapeOperator a{0.5, 0.8, 1.1, -0.4, 0.9};
        const Vec3 expected = a.lambda * frame_y() - a.mu * frame_x();
        CHECK((nabla_w(a, frame_x()) - expected).norm() == 0.0);
    }
    SUBCASE("identity operator") {
        const ShapeOperator a{1, 0, 1, 0, 1};
        CHECK((nabla_w(a, frame_y()) + frame_x()).norm() == 0.0);
    }
}

TEST_CASE("canonical frame rotation") {
    SUBCASE("pure Y component rotates by pi/2") {
        Mat3 m;
        m << 0.7, 0, 1,
             0, 0.2, 0.1,
             1, 0.1, -0.5;
        const auto res = canonical_frame(m);
        CHECK(res.psi == doctest::Approx(M_PI / 2));
        CHECK(res.op.beta == doctest::Approx(1.0));
        CHECK_FALSE(res.hopf_flag);
    }
    SUBCASE("Hopf input is flagged") {
        Mat3 m;
        m << 0.7, 0, 0,
             0, 0.2, 0.1,
             0, 0.1, -0.5;
        const auto res = canonical_frame(m);
        CHECK(res.hopf_flag);
        CHECK(res.psi == 0.0);
        CHECK(res.op.beta == 0.0);
    }
    SUBCASE("beta is the norm of the off-W column") {
        Mat3 m = Mat3::Zero();
        m(0, 0) = 0.3;
        m(1, 0) = m(0, 1) = 3.0;
        m(2, 0) = m(0, 2) = 4.0;
        CHECK(canonical_frame(m).op.beta == doctest::Approx(5.0));
    }
    SUBCASE("rotation reproduces the canonical matrix") {
        Rng rng(31);
        for (int i = 0; i < 200; ++i) {
            Mat3 m;
            const double a = rng.uniform(-2, 2), b1 = rng.uniform(-2, 2),
                         b2 = rng.uniform(-2, 2), l = rng.uniform(-2, 2),
                         mu = rng.uniform(-2, 2), nu = rng.uniform(-2, 2);
            m << a, b1, b2,
                 b1, l, mu,
                 b2, mu, nu;
            const auto res = canonical_frame(m);
            const Mat3 rebuilt = res.rotation.transpose() * m * res.rotation;
            CHECK((rebuilt - res.op.matrix()).cwiseAbs().maxCoeff() < 1e-12);
            CHECK(res.op.beta >= 0.0);
            CHECK(std::abs(rebuilt(0, 2)) < 1e-12); // the (W, Y) zero of the pattern
        }
    }
}

TEST_CASE("(phi A)^2 vanishes exactly for ruled operators") {
    Rng rng(37);
    for (int i = 0; i < 50; ++i) {
        const ShapeOperator a{rng.uniform(-2, 2), rng.uniform_away_from_zero(0.1, 2.0), 0, 0, 0};
        CHECK(phi_a_squared(a).norm() == 0.0);
    }
}
