#pragma once

#include "hyplab/eds/coframe.hpp"

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <vector>

namespace hyplab::eds {

using IndexTuple = std::vector<int>; // strictly increasing basis labels

// Sorts a tuple of labels; returns the permutation sign, or nullopt when an
// index repeats (the term vanishes).
std::optional<std::pair<IndexTuple, int>> normalize_indices(IndexTuple idx);

// Numeric differential form evaluated at a state: antisymmetric coefficient
// table over strictly increasing index tuples.
class EvalForm {
  public:
    explicit EvalForm(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    const std::map<IndexTuple, double>& terms() const { return terms_; }

    void add(IndexTuple idx, double coeff, double prune = 0.0);
    double coeff(const IndexTuple& idx) const;

    EvalForm& operator+=(const EvalForm& other);
    EvalForm operator-(const EvalForm& other) const;
    EvalForm operator*(double s) const;

    // Interior product with a vector given by its components in the dual
    // basis of the coframe.
    EvalForm contract(const Eigen::VectorXd& v) const;

    double max_abs() const;

  private:
    int degree_;
    std::map<IndexTuple, double> terms_;
};

// Differential form with coefficient functions of the state; exterior
// derivatives use Jet2 partials for the coefficients and the structure
// table for the bundle coframe.
class FormExpr {
  public:
    explicit FormExpr(int degree) : degree_(degree) {}

    static FormExpr zero(int degree) { return FormExpr(degree); }
    static FormExpr scalar(ScalarField f);
    static FormExpr basis(int label);
    static FormExpr basis_scaled(ScalarField f, int label);

    int degree() const { return degree_; }

    FormExpr operator+(const FormExpr& other) const;
    FormExpr operator-(const FormExpr& other) const;
    FormExpr operator-() const;
    FormExpr scaled(ScalarField f) const;
    FormExpr scaled(double s) const;

    friend FormExpr wedge(const FormExpr& a, const FormExpr& b);

    // Exterior derivative; product rule with d(coordinate differential) = 0
    // and d(bundle form) from the structure equations.
    FormExpr d(const Chart& chart) const;

    EvalForm eval(const EvalCtx& ctx) const;

  private:
    void add_term(IndexTuple idx, ScalarField f);

    int degree_;
    std::vector<std::pair<IndexTuple, ScalarField>> terms_;
};

// d of the bundle coframe 1-forms (first and second structure equations with
// the space-form curvature 2-forms); labels >= kBundleDim give zero.
const FormExpr& structure_d(int label);

// Completes the generator 1-forms to a coframe and drops every term that
// contains a generator direction.  Idempotent; throws if the generators are
// dependent at the state.
class IdealReducer {
  public:
    // Pivot columns are chosen away from `avoid` (the independence-condition
    // labels) whenever possible, so reduced tableaux stay expressed in the
    // expected complement.
    IdealReducer(const std::vector<EvalForm>& generators, int dimension,
                 const std::vector<int>& avoid = {kW1, kW2, kW3});

    EvalForm reduce(const EvalForm& f) const;

  private:
    int dim_;
    Eigen::MatrixXd subst_; // label substitution matrix, rows = old labels
};

} // namespace hyplab::eds
