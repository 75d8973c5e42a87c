#pragma once

#include "eds/scalar.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace eds {

// Sorted wedge monomial, e.g. {"u","t"} sorted to {"t","u"} (dt^du).
using Basis = std::vector<std::string>;

struct BasisLess {
    bool operator()(const Basis& a, const Basis& b) const;
};

constexpr int kMaxFormDegree = 5;

class DifferentialForm {
public:
    DifferentialForm() = default;
    explicit DifferentialForm(int degree) : degree_(degree) {}
    static DifferentialForm scalar(const ScalarExpr& f);
    static DifferentialForm differential(const std::string& coord);
    // Coefficient times the wedge of the given differentials in the given
    // order (sign fixed by sorting).
    static DifferentialForm monomial(const ScalarExpr& coeff, const Basis& differentials);

    int degree() const { return degree_; }
    const std::map<Basis, ScalarExpr, BasisLess>& components() const { return comps_; }
    ScalarExpr component(const Basis& b) const;
    bool is_zero() const { return comps_.empty(); }  // structural

    DifferentialForm operator+(const DifferentialForm& o) const;
    DifferentialForm operator-(const DifferentialForm& o) const;
    DifferentialForm operator-() const;
    DifferentialForm operator*(const ScalarExpr& f) const;
    DifferentialForm& operator+=(const DifferentialForm& o) { return *this = *this + o; }

    DifferentialForm map_coefficients(const std::function<ScalarExpr(const ScalarExpr&)>& f) const;
    bool operator==(const DifferentialForm& o) const;

    std::string str() const;

private:
    void add(const Basis& b, const ScalarExpr& c);
    int degree_ = 0;
    std::map<Basis, ScalarExpr, BasisLess> comps_;
};

// Sorts a list of differentials; returns the permutation sign, 0 on repeats.
int sort_basis(Basis& b);
std::string basis_str(const Basis& b);

DifferentialForm wedge(const DifferentialForm& f, const DifferentialForm& g);
DifferentialForm d(const DifferentialForm& f, const Chart& chart);
Truth is_zero(const DifferentialForm& f, const AssumptionSet& a, const Chart& chart);

// All degree-k wedge monomials over the given differentials, in basis order.
std::vector<Basis> basis_monomials(const std::vector<std::string>& differentials, int k);

}  // namespace eds
