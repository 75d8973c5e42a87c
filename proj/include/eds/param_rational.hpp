#pragma once

#include "eds/poly.hpp"

#include <map>
#include <optional>
#include <string>

namespace eds {

// Rational function num/den in the parameters. Normalized: monomial content
// shared by num and den removed, exact polynomial factors cancelled when one
// side divides the other, den monic in its lex-leading term.
class ParamRational {
public:
    ParamRational() : num_(), den_(1) {}
    ParamRational(long c) : num_(c), den_(1) {}
    ParamRational(const Rational& c) : num_(c), den_(1) {}
    ParamRational(const Poly& p) : num_(p), den_(1) {}
    ParamRational(const Poly& num, const Poly& den);
    static ParamRational param(const std::string& name) { return ParamRational(Poly::var(name)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational to_rational() const;  // requires is_constant()
    bool is_integer() const;        // constant with denominator 1
    std::set<std::string> params() const;

    ParamRational operator+(const ParamRational& o) const;
    ParamRational operator-(const ParamRational& o) const;
    ParamRational operator*(const ParamRational& o) const;
    ParamRational operator/(const ParamRational& o) const;
    ParamRational operator-() const;
    ParamRational& operator+=(const ParamRational& o) { return *this = *this + o; }
    ParamRational& operator*=(const ParamRational& o) { return *this = *this * o; }
    ParamRational pow(long k) const;

    ParamRational substitute(const std::string& name, const ParamRational& value) const;

    double eval(const std::map<std::string, double>& values) const;
    Rational eval_exact(const std::map<std::string, Rational>& values) const;

    // Mathematical equality by cross-multiplication.
    bool operator==(const ParamRational& o) const;
    bool operator!=(const ParamRational& o) const { return !(*this == o); }
    // Structural order on the normalized representation, for map keys.
    bool operator<(const ParamRational& o) const;

    // Plain rendering: "n + 1", "n/m", "(n + 1)/(m + n)".
    std::string str() const;
    // Rendering safe to embed as a factor: single symbols and positive
    // integers bare, everything else parenthesized.
    std::string factor_str() const;
    bool is_atomic() const;

private:
    void normalize();
    Poly num_, den_;
};

}  // namespace eds
