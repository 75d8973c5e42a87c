#include "eds/param_rational.hpp"

#include <stdexcept>

namespace eds {

ParamRational::ParamRational(const Poly& num, const Poly& den) : num_(num), den_(den) {
    normalize();
}

void ParamRational::normalize() {
    if (den_.is_zero()) throw std::domain_error("parameter expression with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (!den_.is_constant()) {
        Monomial g = Monomial::gcd(num_.content_monomial(), den_.content_monomial());
        if (!g.is_one()) {
            num_ = num_.divide_monomial(g);
            den_ = den_.divide_monomial(g);
        }
    }
    if (!den_.is_constant()) {
        if (auto q = Poly::divide_exact(num_, den_)) {
            num_ = *q;
            den_ = Poly(1);
        } else if (!num_.is_constant()) {
            if (auto q2 = Poly::divide_exact(den_, num_)) {
                num_ = Poly(1);
                den_ = *q2;
            }
        }
    }
    Rational lc = den_.leading().second;
    if (lc != 1) {
        num_ = num_.scaled(1 / lc);
        den_ = den_.scaled(1 / lc);
    }
}

Rational ParamRational::to_rational() const {
    if (!is_constant()) throw std::logic_error("parameter expression is not constant: " + str());
    return num_.constant() / den_.constant();
}

bool ParamRational::is_integer() const {
    if (!is_constant()) return false;
    Rational q = to_rational();
    return q.get_den() == 1;
}

std::set<std::string> ParamRational::params() const {
    auto a = num_.vars();
    auto b = den_.vars();
    a.insert(b.begin(), b.end());
    return a;
}

namespace {

// Cancel a candidate factor f from both num and den when it divides both.
void cancel_factor(Poly& num, Poly& den, const Poly& f) {
    if (f.is_constant()) return;
    auto a = Poly::divide_exact(num, f);
    if (!a) return;
    auto b = Poly::divide_exact(den, f);
    if (!b) return;
    num = *a;
    den = *b;
}

}  // namespace

ParamRational ParamRational::operator+(const ParamRational& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return ParamRational(num_ + o.num_, den_);
    Poly n = num_ * o.den_ + o.num_ * den_;
    Poly d = den_ * o.den_;
    cancel_factor(n, d, den_);
    cancel_factor(n, d, o.den_);
    return ParamRational(n, d);
}

ParamRational ParamRational::operator-(const ParamRational& o) const {
    return *this + (-o);
}

ParamRational ParamRational::operator*(const ParamRational& o) const {
    if (is_zero() || o.is_zero()) return ParamRational();
    Poly a = num_, b = den_, c = o.num_, d = o.den_;
    if (!d.is_constant())
        if (auto q = Poly::divide_exact(a, d)) {
            a = *q;
            d = Poly(1);
        }
    if (!b.is_constant())
        if (auto q = Poly::divide_exact(c, b)) {
            c = *q;
            b = Poly(1);
        }
    return ParamRational(a * c, b * d);
}

ParamRational ParamRational::operator/(const ParamRational& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero parameter expression");
    return *this * ParamRational(o.den_, o.num_);
}

ParamRational ParamRational::operator-() const {
    ParamRational r = *this;
    r.num_ = -r.num_;
    return r;
}

ParamRational ParamRational::pow(long k) const {
    if (k == 0) return ParamRational(1);
    if (k < 0) return ParamRational(1) / pow(-k);
    ParamRational r;
    r.num_ = num_.pow(static_cast<unsigned>(k));
    r.den_ = den_.pow(static_cast<unsigned>(k));
    return r;
}

namespace {

ParamRational substitute_poly(const Poly& p, const std::string& name, const ParamRational& value) {
    ParamRational acc;
    for (auto& [m, c] : p.terms()) {
        int e = m.exponent(name);
        if (e == 0) {
            acc += ParamRational(Poly::term(m, c));
            continue;
        }
        Monomial rest = *m.divide(Monomial::var(name, e));
        acc += ParamRational(Poly::term(rest, c)) * value.pow(e);
    }
    return acc;
}

}  // namespace

ParamRational ParamRational::substitute(const std::string& name, const ParamRational& value) const {
    if (!params().count(name)) return *this;
    return substitute_poly(num_, name, value) / substitute_poly(den_, name, value);
}

double ParamRational::eval(const std::map<std::string, double>& values) const {
    double d = den_.eval(values);
    if (d == 0) throw std::domain_error("parameter denominator vanishes: " + den_.str());
    return num_.eval(values) / d;
}

Rational ParamRational::eval_exact(const std::map<std::string, Rational>& values) const {
    Rational d = den_.eval_exact(values);
    if (d == 0) throw std::domain_error("parameter denominator vanishes: " + den_.str());
    return num_.eval_exact(values) / d;
}

bool ParamRational::operator==(const ParamRational& o) const {
    if (num_ == o.num_ && den_ == o.den_) return true;
    return (num_ * o.den_ - o.num_ * den_).is_zero();
}

bool ParamRational::operator<(const ParamRational& o) const {
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
}

bool ParamRational::is_atomic() const {
    if (!den_.is_constant() || den_.constant() != 1) return false;
    if (num_.size() != 1) return num_.is_zero();
    auto& [m, c] = *num_.terms().begin();
    if (m.is_one()) return c >= 0 && c.get_den() == 1;
    return c == 1 && m.factors().size() == 1 && m.factors()[0].second == 1;
}

std::string ParamRational::str() const {
    if (den_.is_constant()) return num_.str();
    // Display with integer, primitive denominator coefficients: n/(2*n + 1)
    // rather than 1/2*n/(n + 1/2).
    mpz_class l = 1, g = 0;
    for (auto& [m, c] : den_.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    for (auto& [m, c] : den_.terms()) {
        mpz_class k = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.get_mpz_t());
    }
    Rational scale(l, g);
    scale.canonicalize();
    Poly num = num_.scaled(scale), den = den_.scaled(scale);
    std::string n = num.size() == 1 ? num.str() : "(" + num.str() + ")";
    bool bare_den = den.size() == 1 && den.terms().begin()->first.factors().size() == 1 &&
                    den.terms().begin()->first.degree() == 1 && den.terms().begin()->second == 1;
    return n + "/" + (bare_den ? den.str() : "(" + den.str() + ")");
}

std::string ParamRational::factor_str() const {
    if (is_atomic()) return str();
    return "(" + str() + ")";
}

}  // namespace eds
