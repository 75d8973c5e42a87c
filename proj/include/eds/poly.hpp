#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace eds {

using Rational = mpq_class;

std::string to_string(const Rational& q);

// Power product of parameters, factors sorted by name, exponents > 0.
class Monomial {
public:
    Monomial() = default;
    static Monomial var(const std::string& name, int exp = 1);

    const std::vector<std::pair<std::string, int>>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    int degree() const;
    int exponent(const std::string& name) const;

    Monomial operator*(const Monomial& o) const;
    // Exact quotient when o divides *this.
    std::optional<Monomial> divide(const Monomial& o) const;
    static Monomial gcd(const Monomial& a, const Monomial& b);

    // Lexicographic term order: first variable (alphabetical) with a differing
    // exponent decides, larger exponent wins.
    bool lex_greater(const Monomial& o) const;

    bool operator<(const Monomial& o) const { return factors_ < o.factors_; }
    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }

    std::string str() const;

private:
    std::vector<std::pair<std::string, int>> factors_;
};

// Multivariate polynomial over Q in named parameters.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);
    Poly(long c) : Poly(Rational(c)) {}
    static Poly var(const std::string& name);
    static Poly term(const Monomial& m, const Rational& c);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant() const;  // constant term
    std::set<std::string> vars() const;
    int degree_in(const std::string& v) const;
    std::size_t size() const { return terms_.size(); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const Rational& c) const;
    Poly pow(unsigned k) const;

    std::pair<Monomial, Rational> leading() const;  // lex leading term
    Monomial content_monomial() const;              // gcd of all monomials
    Poly divide_monomial(const Monomial& m) const;  // assumes divisibility
    static std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

    // Coefficient of v^k viewing the polynomial as univariate in v.
    Poly coefficient(const std::string& v, int k) const;

    double eval(const std::map<std::string, double>& values) const;
    Rational eval_exact(const std::map<std::string, Rational>& values) const;

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const { return terms_ < o.terms_; }

    // Terms by descending total degree, ties by lex order.
    std::string str() const;

private:
    void add_term(const Monomial& m, const Rational& c);
    std::map<Monomial, Rational> terms_;
};

}  // namespace eds
