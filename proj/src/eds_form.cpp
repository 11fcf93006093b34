#include "hyplab/eds/form.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hyplab::eds {

std::optional<std::pair<IndexTuple, int>> normalize_indices(IndexTuple idx) {
    int sign = 1;
    // insertion sort, counting transpositions
    for (std::size_t i = 1; i < idx.size(); ++i) {
        for (std::size_t k = i; k > 0 && idx[k] < idx[k - 1]; --k) {
            std::swap(idx[k], idx[k - 1]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i] == idx[i - 1]) return std::nullopt;
    return std::make_pair(std::move(idx), sign);
}

void EvalForm::add(IndexTuple idx, double coeff, double prune) {
    auto norm = normalize_indices(std::move(idx));
    if (!norm || coeff == 0.0) return;
    double& slot = terms_[norm->first];
    slot += norm->second * coeff;
    if (std::abs(slot) <= prune) terms_.erase(norm->first);
}

double EvalForm::coeff(const IndexTuple& idx) const {
    auto norm = normalize_indices(idx);
    if (!norm) return 0.0;
    auto it = terms_.find(norm->first);
    return it == terms_.end() ? 0.0 : norm->second * it->second;
}

EvalForm& EvalForm::operator+=(const EvalForm& other) {
    for (const auto& [idx, c] : other.terms_) add(idx, c);
    return *this;
}

EvalForm EvalForm::operator-(const EvalForm& other) const {
    EvalForm r = *this;
    for (const auto& [idx, c] : other.terms_) r.add(idx, -c);
    return r;
}

EvalForm EvalForm::operator*(double s) const {
    EvalForm r(degree_);
    for (const auto& [idx, c] : terms_) r.add(idx, s * c);
    return r;
}

EvalForm EvalForm::contract(const Eigen::VectorXd& v) const {
    EvalForm r(degree_ - 1);
    for (const auto& [idx, c] : terms_) {
        for (std::size_t k = 0; k < idx.size(); ++k) {
            if (idx[k] >= static_cast<int>(v.size()) || v[idx[k]] == 0.0) continue;
            IndexTuple rest;
            rest.reserve(idx.size() - 1);
            for (std::size_t m = 0; m < idx.size(); ++m)
                if (m != k) rest.push_back(idx[m]);
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            r.add(std::move(rest), sign * v[idx[k]] * c);
        }
    }
    return r;
}

double EvalForm::max_abs() const {
    double m = 0.0;
    for (const auto& [idx, c] : terms_) m = std::max(m, std::abs(c));
    return m;
}

// ---------------------------------------------------------------------------

FormExpr FormExpr::scalar(ScalarField f) {
    FormExpr e(0);
    e.add_term({}, std::move(f));
    return e;
}

FormExpr FormExpr::basis(int label) {
    FormExpr e(1);
    e.add_term({label}, sf_const(1.0));
    return e;
}

FormExpr FormExpr::basis_scaled(ScalarField f, int label) {
    FormExpr e(1);
    e.add_term({label}, std::move(f));
    return e;
}

void FormExpr::add_term(IndexTuple idx, ScalarField f) {
    auto norm = normalize_indices(std::move(idx));
    if (!norm) return;
    if (norm->second == 1) {
        terms_.emplace_back(std::move(norm->first), std::move(f));
    } else {
        terms_.emplace_back(std::move(norm->first),
                            [f = std::move(f)](const EvalCtx& s) { return -f(s); });
    }
}

FormExpr FormExpr::operator+(const FormExpr& other) const {
    if (degree_ != other.degree_)
        throw std::invalid_argument("FormExpr: degree mismatch in +");
    FormExpr r = *this;
    r.terms_.insert(r.terms_.end(), other.terms_.begin(), other.terms_.end());
    return r;
}

FormExpr FormExpr::operator-() const { return scaled(-1.0); }

FormExpr FormExpr::operator-(const FormExpr& other) const { return *this + (-other); }

FormExpr FormExpr::scaled(ScalarField f) const {
    FormExpr r(degree_);
    for (const auto& [idx, g] : terms_) {
        const ScalarField coeff = g; // clang < 16 cannot capture structured bindings
        r.terms_.emplace_back(idx,
                              [f, coeff](const EvalCtx& s) { return f(s) * coeff(s); });
    }
    return r;
}

FormExpr FormExpr::scaled(double s) const {
    return scaled(sf_const(s));
}

FormExpr wedge(const FormExpr& a, const FormExpr& b) {
    FormExpr r(a.degree_ + b.degree_);
    for (const auto& [ia, fa] : a.terms_)
        for (const auto& [ib, fb] : b.terms_) {
            IndexTuple idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            auto norm = normalize_indices(std::move(idx));
            if (!norm) continue;
            const double sign = norm->second;
            const ScalarField fl = fa, fr = fb;
            r.terms_.emplace_back(std::move(norm->first), [fl, fr, sign](const EvalCtx& s) {
                return sign * (fl(s) * fr(s));
            });
        }
    return r;
}

namespace {

// d of a coefficient: partial in chart slot k, demoted one jet order.
ScalarField partial_field(const ScalarField& f, int slot) {
    return [f, slot](const EvalCtx& s) {
        const Jet2 j = f(s);
        Jet2 r(j.g[slot]);
        for (int i = 0; i < Jet2::kMaxVars; ++i) r.g[i] = j.h[slot][i];
        return r;
    };
}

} // namespace

FormExpr FormExpr::d(const Chart& chart) const {
    FormExpr r(degree_ + 1);
    const int ncoords = static_cast<int>(chart.coords.size());
    for (const auto& [idx, f] : terms_) {
        // df ^ e_I (differential in front)
        for (int k = 0; k < ncoords; ++k) {
            IndexTuple widx;
            widx.reserve(idx.size() + 1);
            widx.push_back(kBundleDim + k);
            widx.insert(widx.end(), idx.begin(), idx.end());
            auto norm = normalize_indices(std::move(widx));
            if (!norm) continue;
            const double sign = norm->second;
            ScalarField pf = partial_field(f, k);
            r.terms_.emplace_back(std::move(norm->first),
                                  [pf, sign](const EvalCtx& s) { return sign * pf(s); });
        }
        // f * sum_j +/- e_{i1} ^ ... ^ d(e_{ij}) ^ ... (bundle labels only)
        for (std::size_t jpos = 0; jpos < idx.size(); ++jpos) {
            if (idx[jpos] >= kBundleDim) continue;
            const FormExpr& de = structure_d(idx[jpos]);
            const double outer_sign = (jpos % 2 == 0) ? 1.0 : -1.0;
            for (const auto& [didx, df] : de.terms_) {
                IndexTuple widx;
                for (std::size_t m = 0; m < idx.size(); ++m)
                    if (m != jpos) widx.push_back(idx[m]);
                widx.insert(widx.end(), didx.begin(), didx.end());
                auto norm = normalize_indices(std::move(widx));
                if (!norm) continue;
                const double sign = outer_sign * norm->second;
                const ScalarField fc = f, dc = df;
                r.terms_.emplace_back(std::move(norm->first), [fc, dc, sign](const EvalCtx& s) {
                    return sign * (fc(s) * dc(s));
                });
            }
        }
    }
    return r;
}

EvalForm FormExpr::eval(const EvalCtx& ctx) const {
    EvalForm r(degree_);
    for (const auto& [idx, f] : terms_) r.add(idx, f(ctx).v);
    return r;
}

// ---------------------------------------------------------------------------

const FormExpr& structure_d(int label) {
    static const std::array<FormExpr, kBundleDim> table = [] {
        auto B = [](int l) { return FormExpr::basis(l); };
        auto cW = [](int l) {
            return FormExpr::basis_scaled(sf_var(Var::C), l);
        };
        // dw^i = -w^i_j ^ w^j, dw^i_j = -w^i_k ^ w^k_j + Phi^i_j, with
        // w31 = w42, w32 = -w41 on the unitary frame bundle and
        //   Phi21 = c(4 w2^w1 + 2 w4^w3)        Phi43 = c(4 w4^w3 + 2 w2^w1)
        //   Phi41 = c(w2^w3 + w4^w1)            Phi42 = c(w3^w1 + w4^w2)
        std::array<FormExpr, kBundleDim> t = {
            // d w1 = w21^w2 + w42^w3 + w41^w4
            wedge(B(kW21), B(kW2)) + wedge(B(kW42), B(kW3)) + wedge(B(kW41), B(kW4)),
            // d w2 = -w21^w1 - w41^w3 + w42^w4
            -wedge(B(kW21), B(kW1)) - wedge(B(kW41), B(kW3)) + wedge(B(kW42), B(kW4)),
            // d w3 = -w42^w1 + w41^w2 + w43^w4
            -wedge(B(kW42), B(kW1)) + wedge(B(kW41), B(kW2)) + wedge(B(kW43), B(kW4)),
            // d w4 = -w41^w1 - w42^w2 - w43^w3
            -wedge(B(kW41), B(kW1)) - wedge(B(kW42), B(kW2)) - wedge(B(kW43), B(kW3)),
            // d w21 = -2 w41^w42 + c(4 w2^w1 + 2 w4^w3)
            wedge(B(kW41), B(kW42)).scaled(-2.0) + wedge(cW(kW2), B(kW1)).scaled(4.0) +
                wedge(cW(kW4), B(kW3)).scaled(2.0),
            // d w41 = -w42^w21 - w43^w42 + c(w2^w3 + w4^w1)
            -wedge(B(kW42), B(kW21)) - wedge(B(kW43), B(kW42)) + wedge(cW(kW2), B(kW3)) +
                wedge(cW(kW4), B(kW1)),
            // d w42 = w41^w21 + w43^w41 + c(w3^w1 + w4^w2)
            wedge(B(kW41), B(kW21)) + wedge(B(kW43), B(kW41)) + wedge(cW(kW3), B(kW1)) +
                wedge(cW(kW4), B(kW2)),
            // d w43 = 2 w41^w42 + c(4 w4^w3 + 2 w2^w1)
            wedge(B(kW41), B(kW42)).scaled(2.0) + wedge(cW(kW4), B(kW3)).scaled(4.0) +
                wedge(cW(kW2), B(kW1)).scaled(2.0),
        };
        return t;
    }();
    static const FormExpr zero2 = FormExpr::zero(2);
    if (label < 0) throw std::invalid_argument("structure_d: bad label");
    return label < kBundleDim ? table[label] : zero2;
}

// ---------------------------------------------------------------------------

IdealReducer::IdealReducer(const std::vector<EvalForm>& generators, int dimension,
                           const std::vector<int>& avoid)
    : dim_(dimension) {
    const int m = static_cast<int>(generators.size());
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(m, dim_);
    for (int i = 0; i < m; ++i) {
        if (generators[i].degree() != 1)
            throw std::invalid_argument("IdealReducer: generators must be 1-forms");
        for (const auto& [idx, c] : generators[i].terms()) g(i, idx[0]) = c;
    }

    auto avoided = [&](int col) {
        return std::find(avoid.begin(), avoid.end(), col) != avoid.end();
    };

    // Row reduction with column pivoting picks the complement.
    Eigen::MatrixXd red = g;
    std::vector<int> pivots;
    std::vector<bool> used(dim_, false);
    for (int row = 0; row < m; ++row) {
        int piv = -1;
        double best = 1e-9;
        for (int pass = 0; pass < 2 && piv < 0; ++pass) {
            for (int col = 0; col < dim_; ++col) {
                if (used[col] || (pass == 0 && avoided(col))) continue;
                if (std::abs(red(row, col)) > best) {
                    best = std::abs(red(row, col));
                    piv = col;
                }
            }
        }
        if (piv < 0)
            throw std::runtime_error("IdealReducer: generators dependent at this state");
        used[piv] = true;
        pivots.push_back(piv);
        red.row(row) /= red(row, piv);
        for (int r2 = 0; r2 < m; ++r2)
            if (r2 != row) red.row(r2) -= red(r2, piv) * red.row(row);
    }

    // Setting the generators to zero solves each pivot label as a combination
    // of the free labels; free labels map to themselves.
    subst_ = Eigen::MatrixXd::Identity(dim_, dim_);
    for (int i = 0; i < m; ++i) {
        const int piv = pivots[i];
        subst_.row(piv).setZero();
        for (int col = 0; col < dim_; ++col)
            if (!used[col]) subst_(piv, col) = -red(i, col);
    }
}

EvalForm IdealReducer::reduce(const EvalForm& f) const {
    EvalForm r(f.degree());
    for (const auto& [idx, c] : f.terms()) {
        // expand the substitution product over all index slots
        std::vector<std::pair<IndexTuple, double>> expansion = {{{}, c}};
        for (int label : idx) {
            std::vector<std::pair<IndexTuple, double>> next;
            for (const auto& [prefix, pc] : expansion) {
                for (int col = 0; col < dim_; ++col) {
                    const double s = subst_(label, col);
                    if (s == 0.0) continue;
                    IndexTuple t = prefix;
                    t.push_back(col);
                    next.emplace_back(std::move(t), pc * s);
                }
            }
            expansion = std::move(next);
        }
        for (auto& [tuple, coeff] : expansion) r.add(std::move(tuple), coeff);
    }
    return r;
}

std::string label_name(int label, const Chart& chart) {
    static const char* bundle[] = {"w1", "w2", "w3", "w4", "w21", "w41", "w42", "w43"};
    if (label < kBundleDim) return bundle[label];
    static const char* vars[] = {"dalpha", "dbeta", "dlambda", "dmu", "dnu",
                                 "dp",     "drho",  "dc",      "dsigma", "dr"};
    return vars[static_cast<int>(chart.coords[label - kBundleDim])];
}

} // namespace hyplab::eds
