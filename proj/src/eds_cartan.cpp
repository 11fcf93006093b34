#include "hyplab/eds/cartan.hpp"

#include "hyplab/rng.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace hyplab::eds {

namespace {

int matrix_rank(const Eigen::MatrixXd& m, double rel_tol = 1e-7) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const double tol = rel_tol * std::max(1.0, svd.singularValues()(0));
    return static_cast<int>((svd.singularValues().array() > tol).count());
}

} // namespace

CharacteristicResult characteristic_test(const PolarData& pd, double alpha,
                                         const SpaceForm& sf) {
    const double a = pd.a, b = pd.b, p = pd.p, q = pd.q, c = sf.c;
    Eigen::Matrix<double, 2, 4> r;
    r << a, b, -p, -q,
        -2.0 * q + alpha * b, 2.0 * p - alpha * a, 2.0 * c * b + alpha * q,
        -(2.0 * c * a + alpha * p);
    CharacteristicResult res;
    res.rank = matrix_rank(r);
    res.h_dim = kBundleDim - (2 + res.rank);
    res.characteristic = res.h_dim > 4;
    return res;
}

double integral_element_residual(double lambda, double mu, double nu, double alpha,
                                 const SpaceForm& sf) {
    return 2.0 * (lambda * nu - mu * mu - sf.c) - alpha * (lambda + nu);
}

namespace {

struct IntegralElement {
    // basis of the integral 4-plane in coframe-dual coordinates
    std::array<Eigen::VectorXd, 4> basis;
    double lambda, mu, nu;
};

// E = span{X1, X2, X3, X4} with
//   X1 = d/dw1 + lambda d/dw41 + mu d/dw42
//   X2 = d/dw2 + mu d/dw41 + nu d/dw42
//   X3 = d/dw3 + alpha d/dw43
//   X4 = d/dw21                     (Cauchy characteristic direction)
// where nu solves the integral-element relation given (lambda, mu).
IntegralElement sample_integral_element(Rng& rng, double alpha, double c) {
    for (int tries = 0; tries < 1000; ++tries) {
        const double lambda = rng.uniform(-2.0, 2.0);
        const double mu = rng.uniform(-2.0, 2.0);
        const double denom = 2.0 * lambda - alpha;
        if (std::abs(denom) < 0.1) continue;
        const double nu = (2.0 * mu * mu + 2.0 * c + alpha * lambda) / denom;
        if (std::abs(nu) > 4.0) continue;

        IntegralElement e;
        e.lambda = lambda;
        e.mu = mu;
        e.nu = nu;
        for (auto& v : e.basis) v = Eigen::VectorXd::Zero(kBundleDim);
        e.basis[0](kW1) = 1.0;
        e.basis[0](kW41) = lambda;
        e.basis[0](kW42) = mu;
        e.basis[1](kW2) = 1.0;
        e.basis[1](kW41) = mu;
        e.basis[1](kW42) = nu;
        e.basis[2](kW3) = 1.0;
        e.basis[2](kW43) = alpha;
        e.basis[3](kW21) = 1.0;
        return e;
    }
    throw std::runtime_error("sample_integral_element: sampling failed");
}

} // namespace

CartanReport cartan_test_hopf(double alpha, const SpaceForm& sf, int trials,
                              std::uint64_t seed) {
    if (std::abs(alpha * alpha + 4.0 * sf.c) < 1e-9)
        throw std::invalid_argument("cartan_test_hopf: requires alpha^2 + 4c != 0");

    Rng rng(seed);
    const PfaffianSystem sys = hopf_system();
    StatePoint state;
    state[Var::Alpha] = alpha;
    state[Var::C] = sf.c;
    const EvalCtx ctx = EvalCtx::make(state, sys.chart);

    // theta_1, theta_2 and their exterior derivatives as numeric forms
    const EvalForm th1 = sys.generators[0].eval(ctx);
    const EvalForm th2 = sys.generators[1].eval(ctx);
    const EvalForm dth1 = sys.generators[0].d(sys.chart).eval(ctx);
    const EvalForm dth2 = sys.generators[1].d(sys.chart).eval(ctx);

    auto one_form_vector = [](const EvalForm& f) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(kBundleDim);
        for (const auto& [idx, c] : f.terms()) v(idx[0]) = c;
        return v;
    };
    const Eigen::VectorXd th1v = one_form_vector(th1);
    const Eigen::VectorXd th2v = one_form_vector(th2);

    CartanReport rep;
    rep.trials = trials;
    rep.ok = true;

    for (int trial = 0; trial < trials; ++trial) {
        const IntegralElement e = sample_integral_element(rng, alpha, sf.c);

        // random flag v1, v2, v3 inside E, v1 non-characteristic
        std::array<Eigen::VectorXd, 3> flag;
        for (int k = 0; k < 3; ++k) {
            Eigen::VectorXd v = Eigen::VectorXd::Zero(kBundleDim);
            for (int i = 0; i < 4; ++i) v += rng.uniform(-1.0, 1.0) * e.basis[i];
            flag[k] = v;
        }
        const PolarData pd{flag[0](kW1), flag[0](kW2), flag[0](kW41), flag[0](kW42)};
        if (characteristic_test(pd, alpha, sf).characteristic) {
            --trial; // resample characteristic flags
            continue;
        }

        // polar-space codimensions c0..c3
        std::vector<Eigen::VectorXd> cut = {th1v, th2v};
        std::array<int, 4> characters{};
        auto rank_of = [&](const std::vector<Eigen::VectorXd>& rows) {
            Eigen::MatrixXd m(static_cast<int>(rows.size()), kBundleDim);
            for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<int>(i)) = rows[i];
            return matrix_rank(m);
        };
        characters[0] = rank_of(cut);
        for (int k = 0; k < 3; ++k) {
            cut.push_back(one_form_vector(dth1.contract(flag[k])));
            cut.push_back(one_form_vector(dth2.contract(flag[k])));
            characters[k + 1] = rank_of(cut);
        }

        if (trial == 0) {
            rep.characters = characters;
        } else if (rep.characters != characters) {
            rep.ok = false;
        }

        // Grassmannian codimension: graph coordinates over E with complement
        // (d/dw4, d/dw41, d/dw42, d/dw43); equations = restriction of
        // theta_1, theta_2, dtheta_1, dtheta_2 to the perturbed plane.
        std::array<int, 4> complement = {kW4, kW41, kW42, kW43};
        auto equations = [&](const Eigen::Matrix4d& a) {
            std::array<Eigen::VectorXd, 4> basis = e.basis;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) basis[i](complement[j]) += a(i, j);
            Eigen::VectorXd f(20);
            int idx = 0;
            for (int i = 0; i < 4; ++i) {
                f(idx++) = th1v.dot(basis[i]);
                f(idx++) = th2v.dot(basis[i]);
            }
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) {
                    f(idx++) = dth1.contract(basis[i]).contract(basis[j]).coeff({});
                    f(idx++) = dth2.contract(basis[i]).contract(basis[j]).coeff({});
                }
            return f;
        };
        const double h = 1e-3;
        Eigen::MatrixXd jac(20, 16);
        for (int col = 0; col < 16; ++col) {
            Eigen::Matrix4d ap = Eigen::Matrix4d::Zero();
            Eigen::Matrix4d am = Eigen::Matrix4d::Zero();
            ap(col / 4, col % 4) = h;
            am(col / 4, col % 4) = -h;
            jac.col(col) = (equations(ap) - equations(am)) / (2.0 * h);
        }
        const int codim = matrix_rank(jac);
        if (trial == 0) {
            rep.grassmann_codim = codim;
        } else if (rep.grassmann_codim != codim) {
            rep.ok = false;
        }
    }

    rep.character_sum = rep.characters[0] + rep.characters[1] + rep.characters[2] +
                        rep.characters[3];
    rep.ok = rep.ok && rep.characters == std::array<int, 4>{2, 4, 4, 4} &&
             rep.character_sum == 14 && rep.grassmann_codim == 14;
    return rep;
}

} // namespace hyplab::eds
