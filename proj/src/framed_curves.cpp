#include "hyplab/framed_curves.hpp"

#include "hyplab/io.hpp"

#include <complex>
#include <ostream>
#include <stdexcept>

namespace hyplab {

using namespace std::complex_literals;

const CMat3& signature_matrix(const SpaceForm& sf) {
    static const CMat3 id = CMat3::Identity();
    static const CMat3 lorentz = [] {
        CMat3 j = CMat3::Identity();
        j(2, 2) = -1.0;
        return j;
    }();
    return sf.c > 0.0 ? id : lorentz;
}

double group_residual(const GroupFrame& f) {
    const CMat3& j = signature_matrix(f.sf);
    return (f.g.adjoint() * j * f.g - j).norm();
}

CMat3 frenet_generator(double k0, double k1, double tau, const SpaceForm& sf) {
    // Columns (f1, f2, f0): f0' = (1/r) f1, and covariantly
    // f1' = i k0 f1 + k1 f2, f2' = -k1 f1 + i tau f2.  The f0-components are
    // forced by J-antisymmetry: M20 = -c r, M02 = 1/r.
    CMat3 m = CMat3::Zero();
    m(0, 0) = 1i * k0;
    m(0, 1) = -k1;
    m(0, 2) = 1.0 / sf.r;
    m(1, 0) = k1;
    m(1, 1) = 1i * tau;
    m(2, 0) = (sf.c > 0 ? -1.0 : 1.0) / sf.r; // = -c r, shares the rounding of 1/r
    return m;
}

namespace {

// One correction sweep toward g* J g = J; E is J-Hermitian and O(local
// error), so g (I - E/2) removes it to second order.
void project_to_group(CMat3& g, const CMat3& j) {
    for (int iter = 0; iter < 3; ++iter) {
        const CMat3 e = j * g.adjoint() * j * g - CMat3::Identity();
        if (e.norm() < 1e-15)
            break;
        g = g * (CMat3::Identity() - 0.5 * e);
    }
}

} // namespace

std::vector<GroupFrame> integrate_frame(const GroupFrame& g0, const FramedCurveSpec& spec,
                                        double t0, double t1, double dt) {
    if (!(dt > 0.0))
        throw std::invalid_argument("integrate_frame: dt must be positive");
    if (group_residual(g0) > 1e-9)
        throw std::invalid_argument("integrate_frame: initial frame is not in the group");
    const CMat3& j = signature_matrix(spec.sf);

    std::vector<GroupFrame> out;
    out.push_back(g0);
    CMat3 g = g0.g;
    double t = t0;
    auto gen = [&](double s) { return frenet_generator(spec.k0(s), spec.k1(s), spec.tau(s), spec.sf); };

    while (t < t1 - 0.5 * dt) {
        const CMat3 m1 = gen(t);
        const CMat3 m2 = gen(t + 0.5 * dt);
        const CMat3 m4 = gen(t + dt);
        const CMat3 k1 = g * m1;
        const CMat3 k2 = (g + 0.5 * dt * k1) * m2;
        const CMat3 k3 = (g + 0.5 * dt * k2) * m2;
        const CMat3 k4 = (g + dt * k3) * m4;
        g += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t += dt;
        if (!g.allFinite())
            throw std::runtime_error("integrate_frame: state became non-finite");
        project_to_group(g, j);
        out.push_back(GroupFrame{g, spec.sf});
    }
    return out;
}

FrenetSamples extract_frenet(const std::vector<GroupFrame>& frames, double t0, double dt) {
    if (frames.size() < 3)
        throw std::invalid_argument("extract_frenet: need at least 3 samples");
    const SpaceForm sf = frames.front().sf;
    const CMat3& j = signature_matrix(sf);
    const double s0 = sf.c > 0.0 ? 1.0 : -1.0; // <f0, f0>_J

    // <u, v>_J = v* J u, conjugate-linear in v.
    auto herm = [&](const CVec3& u, const CVec3& v) { return v.dot(j * u); };

    FrenetSamples res;
    for (std::size_t k = 1; k + 1 < frames.size(); ++k) {
        const CMat3& g = frames[k].g;
        const CVec3 f1 = g.col(0), f2 = g.col(1), f0 = g.col(2);
        const CVec3 df1 = (frames[k + 1].g.col(0) - frames[k - 1].g.col(0)) / (2.0 * dt);
        const CVec3 df2 = (frames[k + 1].g.col(1) - frames[k - 1].g.col(1)) / (2.0 * dt);
        const CVec3 df0 = (frames[k + 1].g.col(2) - frames[k - 1].g.col(2)) / (2.0 * dt);

        // Covariant derivative: remove the complex f0-component.
        const CVec3 c1 = df1 - (herm(df1, f0) / s0) * f0;
        const CVec3 c2 = df2 - (herm(df2, f0) / s0) * f0;

        res.t.push_back(t0 + static_cast<double>(k) * dt);
        res.k0.push_back(std::imag(herm(c1, f1)));
        res.k1.push_back(std::real(herm(c1, f2)));
        res.tau.push_back(std::imag(herm(c2, f2)));

        double off = std::abs(std::real(herm(c1, f1)));          // <T', T> = 0
        off = std::max(off, std::abs(std::real(herm(c2, f2))));  // <N', N> = 0
        off = std::max(off, std::abs(herm(c2, f1) + res.k1.back())); // <N', .> = -k1 on f1
        off = std::max(off, (df0 - f1 / sf.r).norm());           // unit speed: f0' = f1/r
        res.max_off_residual = std::max(res.max_off_residual, off);
    }
    return res;
}

void write_frames_csv(std::ostream& out, const std::vector<GroupFrame>& frames, double t0,
                      double dt) {
    out << "t";
    const char* cols[3] = {"f1", "f2", "f0"};
    for (int cidx = 0; cidx < 3; ++cidx)
        for (int ridx = 0; ridx < 3; ++ridx)
            out << ",re_" << cols[cidx] << ridx << ",im_" << cols[cidx] << ridx;
    out << '\n';
    for (std::size_t k = 0; k < frames.size(); ++k) {
        out << format17(t0 + static_cast<double>(k) * dt);
        for (int cidx = 0; cidx < 3; ++cidx)
            for (int ridx = 0; ridx < 3; ++ridx) {
                const auto z = frames[k].g(ridx, cidx);
                out << ',' << format17(z.real()) << ',' << format17(z.imag());
            }
        out << '\n';
    }
}

} // namespace hyplab
