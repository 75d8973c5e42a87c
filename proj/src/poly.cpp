#include "eds/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eds {

std::string to_string(const Rational& q) {
    return q.get_str();
}

Monomial Monomial::var(const std::string& name, int exp) {
    Monomial m;
    if (exp != 0) m.factors_.push_back({name, exp});
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (auto& f : factors_) d += f.second;
    return d;
}

int Monomial::exponent(const std::string& name) const {
    for (auto& f : factors_)
        if (f.first == name) return f.second;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    auto i = factors_.begin(), j = o.factors_.begin();
    while (i != factors_.end() || j != o.factors_.end()) {
        if (j == o.factors_.end() || (i != factors_.end() && i->first < j->first)) {
            r.factors_.push_back(*i++);
        } else if (i == factors_.end() || j->first < i->first) {
            r.factors_.push_back(*j++);
        } else {
            r.factors_.push_back({i->first, i->second + j->second});
            ++i;
            ++j;
        }
    }
    return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
    Monomial r;
    auto i = factors_.begin();
    auto j = o.factors_.begin();
    while (i != factors_.end() || j != o.factors_.end()) {
        if (j == o.factors_.end() || (i != factors_.end() && i->first < j->first)) {
            r.factors_.push_back(*i++);
        } else if (i == factors_.end() || j->first < i->first) {
            return std::nullopt;
        } else {
            int e = i->second - j->second;
            if (e < 0) return std::nullopt;
            if (e > 0) r.factors_.push_back({i->first, e});
            ++i;
            ++j;
        }
    }
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first < j->first) {
            ++i;
        } else if (j->first < i->first) {
            ++j;
        } else {
            r.factors_.push_back({i->first, std::min(i->second, j->second)});
            ++i;
            ++j;
        }
    }
    return r;
}

bool Monomial::lex_greater(const Monomial& o) const {
    auto i = factors_.begin(), j = o.factors_.begin();
    while (i != factors_.end() || j != o.factors_.end()) {
        if (j == o.factors_.end()) return true;
        if (i == factors_.end()) return false;
        if (i->first < j->first) return true;   // *this has a variable o lacks
        if (j->first < i->first) return false;
        if (i->second != j->second) return i->second > j->second;
        ++i;
        ++j;
    }
    return false;
}

std::string Monomial::str() const {
    std::string s;
    for (auto& [name, e] : factors_) {
        if (!s.empty()) s += "*";
        s += name;
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

Poly::Poly(const Rational& c) {
    if (c != 0) terms_[Monomial()] = c;
}

Poly Poly::var(const std::string& name) {
    return term(Monomial::var(name), 1);
}

Poly Poly::term(const Monomial& m, const Rational& c) {
    Poly p;
    if (c != 0) p.terms_[m] = c;
    return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Poly::constant() const {
    auto it = terms_.find(Monomial());
    return it == terms_.end() ? Rational(0) : it->second;
}

std::set<std::string> Poly::vars() const {
    std::set<std::string> out;
    for (auto& [m, c] : terms_)
        for (auto& f : m.factors()) out.insert(f.first);
    return out;
}

int Poly::degree_in(const std::string& v) const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
    return d;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

Poly Poly::operator-() const {
    Poly r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::scaled(const Rational& k) const {
    if (k == 0) return Poly();
    Poly r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, c * k);
    return r;
}

Poly Poly::pow(unsigned k) const {
    Poly r(1), b = *this;
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

std::pair<Monomial, Rational> Poly::leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = terms_.begin(); it != terms_.end(); ++it)
        if (it->first.lex_greater(best->first)) best = it;
    return *best;
}

Monomial Poly::content_monomial() const {
    if (terms_.empty()) return Monomial();
    Monomial g = terms_.begin()->first;
    for (auto& [m, c] : terms_) g = Monomial::gcd(g, m);
    return g;
}

Poly Poly::divide_monomial(const Monomial& d) const {
    Poly r;
    for (auto& [m, c] : terms_) r.terms_.emplace(*m.divide(d), c);
    return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly q, r = a;
    auto [lb, cb] = b.leading();
    while (!r.is_zero()) {
        auto [lr, cr] = r.leading();
        auto t = lr.divide(lb);
        if (!t) return std::nullopt;
        Poly step = Poly::term(*t, cr / cb);
        q = q + step;
        r = r - step * b;
    }
    return q;
}

Poly Poly::coefficient(const std::string& v, int k) const {
    Poly r;
    Monomial vk = Monomial::var(v, k);
    for (auto& [m, c] : terms_)
        if (m.exponent(v) == k) r.add_term(*m.divide(vk), c);
    return r;
}

double Poly::eval(const std::map<std::string, double>& values) const {
    double s = 0;
    for (auto& [m, c] : terms_) {
        double t = c.get_d();
        for (auto& [name, e] : m.factors()) {
            auto it = values.find(name);
            if (it == values.end()) throw std::out_of_range("no value for parameter " + name);
            t *= std::pow(it->second, e);
        }
        s += t;
    }
    return s;
}

Rational Poly::eval_exact(const std::map<std::string, Rational>& values) const {
    Rational s = 0;
    for (auto& [m, c] : terms_) {
        Rational t = c;
        for (auto& [name, e] : m.factors()) {
            auto it = values.find(name);
            if (it == values.end()) throw std::out_of_range("no value for parameter " + name);
            for (int i = 0; i < e; ++i) t *= it->second;
        }
        s += t;
    }
    return s;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, Rational>> ts(terms_.begin(), terms_.end());
    std::stable_sort(ts.begin(), ts.end(), [](auto& a, auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() > b.first.degree();
        return a.first.lex_greater(b.first);
    });
    std::string s;
    bool first = true;
    for (auto& [m, c] : ts) {
        Rational mag = abs(c);
        bool neg = c < 0;
        std::string body;
        if (m.is_one()) {
            body = to_string(mag);
        } else if (mag == 1) {
            body = m.str();
        } else {
            body = to_string(mag) + "*" + m.str();
        }
        if (first) {
            s = neg ? "-" + body : body;
        } else {
            s += neg ? " - " + body : " + " + body;
        }
        first = false;
    }
    return s;
}

}  // namespace eds
