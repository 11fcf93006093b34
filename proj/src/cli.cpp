#include "hyplab/cli.hpp"

#include "hyplab/catalog.hpp"
#include "hyplab/conditions.hpp"
#include "hyplab/curvature.hpp"
#include "hyplab/framed_curves.hpp"
#include "hyplab/io.hpp"
#include "hyplab/ode.hpp"
#include "hyplab/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace hyplab::cli {

using nlohmann::json;

std::function<double(double)> parse_scalar_fn(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    std::vector<double> args;
    if (colon != std::string::npos) {
        std::stringstream ss(spec.substr(colon + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) args.push_back(std::stod(tok));
    }
    if (kind == "const" && args.size() == 1) {
        return [v = args[0]](double) { return v; };
    }
    if (kind == "poly" && !args.empty()) {
        return [a = args](double t) {
            double acc = 0.0;
            for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * t + *it;
            return acc;
        };
    }
    if (kind == "sin" && args.size() == 4) {
        return [a = args](double t) { return a[0] * std::sin(a[1] * t + a[2]) + a[3]; };
    }
    throw std::invalid_argument("bad scalar function spec: " + spec +
                                " (use const:V | poly:a0,a1,... | sin:amp,freq,phase,offset)");
}

namespace {

json matrix_json(const Mat3& m) {
    json rows = json::array();
    for (int i = 0; i < 3; ++i) {
        json row = json::array();
        for (int k = 0; k < 3; ++k) row.push_back(m(i, k));
        rows.push_back(row);
    }
    return rows;
}

void emit(const json& doc, const std::string& path, std::ostream& out) {
    const std::string text = doc.dump(2) + "\n";
    if (path.empty()) {
        out << text;
    } else {
        std::ofstream f(path);
        if (!f) throw std::runtime_error("cannot open output file: " + path);
        f << text;
    }
}

std::uint64_t seed_fallback() {
    if (const char* env = std::getenv("HYPLAB_SEED"))
        return static_cast<std::uint64_t>(std::strtoull(env, nullptr, 10));
    return 0;
}

struct ShapeFlags {
    double c = 1.0;
    double alpha = 0.0, beta = 0.0, lambda = 0.0, mu = 0.0, nu = 0.0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--c", c, "holomorphic sectional curvature / 4 (nonzero)")->required();
        cmd->add_option("--alpha", alpha, "A(W,W)");
        cmd->add_option("--beta", beta, "A(W,X)");
        cmd->add_option("--lambda", lambda, "A(X,X)");
        cmd->add_option("--mu", mu, "A(X,Y)");
        cmd->add_option("--nu", nu, "A(Y,Y)");
    }
    ShapeOperator op() const { return ShapeOperator{alpha, beta, lambda, mu, nu}; }
    SpaceForm sf() const { return SpaceForm::from_c(c); }
};

json condition_report_json(const ConditionReport& rep) {
    json j;
    j["pseudo_ryan_raw"] = {rep.pseudo_ryan_raw[0], rep.pseudo_ryan_raw[1]};
    j["pseudo_ryan_refined"] = rep.pseudo_ryan_refined;
    j["pseudo_ryan_refined_residual"] = rep.pseudo_ryan_refined_residual;
    j["pseudo_ryan_oracle"] = rep.pseudo_ryan_oracle;
    j["pseudo_ryan_oracle_residual"] = rep.pseudo_ryan_oracle_residual;
    j["ruled"] = rep.ruled;
    j["hopf"] = rep.hopf;
    j["pseudo_einstein"] = rep.pseudo_einstein;
    j["star_scalar_half"] = rep.star_scalar_half;
    j["sigma"] = rep.sigma;
    j["case_i_residual"] = rep.case_i_residual;
    if (rep.case_ii_defined) j["case_ii_residual"] = rep.case_ii_residual;
    j["rank_warning"] = rep.rank_warning;
    return j;
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"curvature invariants and moving-frames verification for real "
                 "hypersurfaces in CP^2 and CH^2"};
    app.require_subcommand(1);

    // ---- invariants ----
    auto* inv = app.add_subcommand("invariants", "S, S*, rho* for one shape operator");
    ShapeFlags inv_flags;
    inv_flags.attach(inv);
    std::string inv_out;
    inv->add_option("--out", inv_out, "output JSON path (default stdout)");

    // ---- classify ----
    auto* cls = app.add_subcommand("classify", "pointwise condition report");
    ShapeFlags cls_flags;
    cls_flags.attach(cls);
    double cls_tol = 1e-9;
    std::string cls_out;
    cls->add_option("--tol", cls_tol, "residual tolerance");
    cls->add_option("--out", cls_out, "output JSON path (default stdout)");

    // ---- catalog ----
    auto* cat = app.add_subcommand("catalog", "homogeneous Hopf hypersurface entry");
    std::string cat_kind;
    double cat_alpha = 0.0, cat_c = 1.0;
    int cat_n = 2, cat_k = 1;
    std::string cat_branch = "plus", cat_out;
    cat->add_option("--kind", cat_kind, "A0 | A1 | A2 | B")->required();
    cat->add_option("--alpha", cat_alpha, "Hopf principal curvature")->required();
    cat->add_option("--c", cat_c, "ambient curvature constant")->required();
    cat->add_option("--n", cat_n, "complex dimension (default 2)");
    cat->add_option("--k", cat_k, "A2 splitting index (default 1)");
    cat->add_option("--branch", cat_branch, "type-A root branch: plus | minus");
    cat->add_option("--out", cat_out, "output JSON path (default stdout)");

    // ---- construct ----
    auto* con = app.add_subcommand("construct", "integrate the construction ODE system");
    con->require_subcommand(1);
    auto* con_ode = con->add_subcommand("ode", "free nu(t) supplied as an expression");
    auto* con_pr = con->add_subcommand("pseudo-ryan", "nu eliminated by the constraint");
    struct ConFlags {
        double c = -1.0, alpha = 0.0, beta = 1.0, lambda = 0.0, nu = 0.0;
        double t0 = 0.0, t1 = 1.0, dt = 1e-3;
        std::string out;
    };
    ConFlags cf_ode, cf_pr;
    std::string nu_spec = "const:0.5";
    for (auto [cmd, cf] : {std::pair{con_ode, &cf_ode}, std::pair{con_pr, &cf_pr}}) {
        cmd->add_option("--c", cf->c, "ambient curvature constant")->required();
        cmd->add_option("--alpha", cf->alpha, "initial alpha");
        cmd->add_option("--beta", cf->beta, "initial beta (nonzero)");
        cmd->add_option("--lambda", cf->lambda, "initial lambda");
        cmd->add_option("--t0", cf->t0, "start time");
        cmd->add_option("--t1", cf->t1, "end time")->required();
        cmd->add_option("--dt", cf->dt, "RK4 step size");
        cmd->add_option("--out", cf->out, "output CSV path")->required();
    }
    con_ode->add_option("--nu-fn", nu_spec, "nu(t) expression (const:/poly:/sin:)");
    con_pr->add_option("--nu", cf_pr.nu, "initial nu (must satisfy the constraint)")->required();

    // ---- curve ----
    auto* cur = app.add_subcommand("curve", "integrate a framed curve in the isometry group");
    double cur_c = 1.0, cur_t0 = 0.0, cur_t1 = 1.0, cur_dt = 1e-3;
    std::string cur_k0 = "const:0", cur_k1 = "const:0", cur_tau = "const:0", cur_out;
    cur->add_option("--c", cur_c, "ambient curvature constant")->required();
    cur->add_option("--k0", cur_k0, "holomorphic curvature expression");
    cur->add_option("--k1", cur_k1, "transverse curvature expression");
    cur->add_option("--tau", cur_tau, "torsion expression");
    cur->add_option("--t0", cur_t0, "start arclength");
    cur->add_option("--t1", cur_t1, "end arclength")->required();
    cur->add_option("--dt", cur_dt, "RK4 step size");
    cur->add_option("--out", cur_out, "output CSV path")->required();

    // ---- verify ----
    auto* ver = app.add_subcommand("verify", "run a numerical verification suite");
    std::string ver_suite = "all", ver_out;
    std::uint64_t ver_seed = seed_fallback();
    int ver_samples = 200;
    ver->add_option("--suite", ver_suite,
                    "oracles | pseudo-ryan-equiv | berndt | eds-hopf | eds-case-i | "
                    "eds-case-ii | eds-construction | cartan | all");
    ver->add_option("--seed", ver_seed, "RNG seed (default: HYPLAB_SEED or 0)");
    ver->add_option("--samples", ver_samples, "samples / trials per suite");
    ver->add_option("--out", ver_out, "output JSON path (default stdout)");

    std::vector<const char*> argv;
    argv.push_back("hyplab");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (*inv) {
            const ShapeOperator a = inv_flags.op();
            const SpaceForm sf = inv_flags.sf();
            json j;
            j["input"] = {{"c", sf.c},       {"r", sf.r},
                          {"alpha", a.alpha}, {"beta", a.beta},
                          {"lambda", a.lambda}, {"mu", a.mu},
                          {"nu", a.nu}};
            j["ricci"] = matrix_json(ricci(a, sf));
            j["star_ricci"] = matrix_json(star_ricci(a, sf));
            j["rho_star"] = star_scalar(a, sf);
            j["rho_star_half"] = 0.5 * star_scalar(a, sf);
            j["hopf_residual"] = hopf_residual(a, sf);
            emit(j, inv_out, out);
            return 0;
        }
        if (*cls) {
            const ConditionReport rep =
                classify_point(cls_flags.op(), cls_flags.sf(), cls_tol);
            emit(condition_report_json(rep), cls_out, out);
            return 0;
        }
        if (*cat) {
            const SpaceForm sf = SpaceForm::from_c(cat_c, cat_n);
            const Branch branch = cat_branch == "minus" ? Branch::Minus : Branch::Plus;
            const HomogeneousEntry e =
                make_entry(hopf_type_from_string(cat_kind), cat_alpha, sf, branch, cat_k);
            json j;
            j["kind"] = to_string(e.kind);
            j["alpha"] = e.alpha;
            j["c"] = e.sf.c;
            j["n"] = e.sf.n;
            j["star_einstein"] = e.star_einstein;
            j["rho_star"] = e.rho_star;
            json curves = json::array();
            for (const auto& ps : e.wperp_curvatures)
                curves.push_back({{"value", ps.value},
                                  {"multiplicity", ps.multiplicity},
                                  {"phi_partner", ps.phi_partner}});
            j["wperp_curvatures"] = curves;
            emit(j, cat_out, out);
            return 0;
        }
        if (*con) {
            const bool dae = con_pr->parsed();
            const ConFlags& cf = dae ? cf_pr : cf_ode;
            const SpaceForm sf = SpaceForm::from_c(cf.c);
            IntegratorOptions opts;
            opts.dt = cf.dt;
            Trajectory traj;
            if (dae) {
                const ODEState init{cf.alpha, cf.beta, cf.lambda, cf.nu, sf};
                traj = integrate_pseudo_ryan(init, cf.t0, cf.t1, opts);
            } else {
                const auto nu_fn = parse_scalar_fn(nu_spec);
                const ODEState init{cf.alpha, cf.beta, cf.lambda, nu_fn(cf.t0), sf};
                traj = integrate_ode(init, nu_fn, cf.t0, cf.t1, opts);
            }
            std::ofstream f(cf.out);
            if (!f) throw std::runtime_error("cannot open output file: " + cf.out);
            write_trajectory_csv(f, traj);
            if (!traj.ok()) {
                err << "integration stopped early: " << traj.message << "\n";
                return 2;
            }
            return 0;
        }
        if (*cur) {
            const SpaceForm sf = SpaceForm::from_c(cur_c);
            const FramedCurveSpec spec{parse_scalar_fn(cur_k0), parse_scalar_fn(cur_k1),
                                       parse_scalar_fn(cur_tau), sf};
            const auto frames =
                integrate_frame(GroupFrame{CMat3::Identity(), sf}, spec, cur_t0, cur_t1, cur_dt);
            std::ofstream f(cur_out);
            if (!f) throw std::runtime_error("cannot open output file: " + cur_out);
            write_frames_csv(f, frames, cur_t0, cur_dt);
            return 0;
        }
        if (*ver) {
            const auto reports = verify::run_suites(ver_suite, ver_seed, ver_samples);
            json j;
            j["suites"] = json::array();
            bool all_pass = true;
            for (const auto& rep : reports) {
                j["suites"].push_back(verify::to_json(rep));
                all_pass = all_pass && rep.pass;
            }
            j["pass"] = all_pass;
            emit(j, ver_out, out);
            return all_pass ? 0 : 1;
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

} // namespace hyplab::cli
