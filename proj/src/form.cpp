#include "eds/form.hpp"

#include "eds/error.hpp"

#include <algorithm>
#include <functional>

namespace eds {

bool BasisLess::operator()(const Basis& a, const Basis& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), differential_less);
}

int sort_basis(Basis& b) {
    int sign = 1;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j + 1 < b.size() - i; ++j) {
            if (b[j] == b[j + 1]) return 0;
            if (differential_less(b[j + 1], b[j])) {
                std::swap(b[j], b[j + 1]);
                sign = -sign;
            }
        }
    for (std::size_t i = 0; i + 1 < b.size(); ++i)
        if (b[i] == b[i + 1]) return 0;
    return sign;
}

std::string basis_str(const Basis& b) {
    std::string s;
    for (auto& c : b) {
        if (!s.empty()) s += "^";
        s += "d" + c;
    }
    return s;
}

DifferentialForm DifferentialForm::scalar(const ScalarExpr& f) {
    DifferentialForm r(0);
    r.add({}, f);
    return r;
}

DifferentialForm DifferentialForm::differential(const std::string& coord) {
    DifferentialForm r(1);
    r.add({coord}, ScalarExpr(1));
    return r;
}

DifferentialForm DifferentialForm::monomial(const ScalarExpr& coeff, const Basis& differentials) {
    if (static_cast<int>(differentials.size()) > kMaxFormDegree)
        throw Error("form degree exceeds " + std::to_string(kMaxFormDegree));
    DifferentialForm r(static_cast<int>(differentials.size()));
    Basis b = differentials;
    int s = sort_basis(b);
    if (s != 0) r.add(b, s > 0 ? coeff : -coeff);
    return r;
}

ScalarExpr DifferentialForm::component(const Basis& b) const {
    auto it = comps_.find(b);
    return it == comps_.end() ? ScalarExpr() : it->second;
}

void DifferentialForm::add(const Basis& b, const ScalarExpr& c) {
    if (c.is_zero()) return;
    auto it = comps_.find(b);
    if (it == comps_.end()) {
        comps_.emplace(b, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) comps_.erase(it);
}

namespace {

void require_same_degree(const DifferentialForm& a, const DifferentialForm& b) {
    if (a.degree() != b.degree() && !a.is_zero() && !b.is_zero())
        throw Error("adding forms of degree " + std::to_string(a.degree()) + " and " + std::to_string(b.degree()));
}

}  // namespace

DifferentialForm DifferentialForm::operator+(const DifferentialForm& o) const {
    require_same_degree(*this, o);
    DifferentialForm r = is_zero() ? DifferentialForm(o.degree_) : *this;
    for (auto& [b, c] : o.comps_) r.add(b, c);
    return r;
}

DifferentialForm DifferentialForm::operator-(const DifferentialForm& o) const {
    return *this + (-o);
}

DifferentialForm DifferentialForm::operator-() const {
    DifferentialForm r(degree_);
    for (auto& [b, c] : comps_) r.comps_.emplace(b, -c);
    return r;
}

DifferentialForm DifferentialForm::operator*(const ScalarExpr& f) const {
    DifferentialForm r(degree_);
    for (auto& [b, c] : comps_) r.add(b, c * f);
    return r;
}

DifferentialForm DifferentialForm::map_coefficients(const std::function<ScalarExpr(const ScalarExpr&)>& f) const {
    DifferentialForm r(degree_);
    for (auto& [b, c] : comps_) r.add(b, f(c));
    return r;
}

bool DifferentialForm::operator==(const DifferentialForm& o) const {
    return (*this - o).is_zero();
}

std::string DifferentialForm::str() const {
    if (comps_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [b, c] : comps_) {
        std::string t;
        if (b.empty()) {
            t = c.str();
        } else if (c == ScalarExpr(1)) {
            t = basis_str(b);
        } else if (c == ScalarExpr(-1)) {
            t = "-" + basis_str(b);
        } else {
            std::string cs = c.str();
            bool wrap = cs.find(' ') != std::string::npos;
            t = (wrap ? "(" + cs + ")" : cs) + "*" + basis_str(b);
        }
        if (first) {
            s = t;
        } else if (t[0] == '-') {
            s += " - " + t.substr(1);
        } else {
            s += " + " + t;
        }
        first = false;
    }
    return s;
}

DifferentialForm wedge(const DifferentialForm& f, const DifferentialForm& g) {
    int deg = f.degree() + g.degree();
    if (deg > kMaxFormDegree) throw Error("wedge product degree " + std::to_string(deg) + " exceeds 5");
    DifferentialForm r(deg);
    for (auto& [b1, c1] : f.components())
        for (auto& [b2, c2] : g.components()) {
            Basis b = b1;
            b.insert(b.end(), b2.begin(), b2.end());
            r += DifferentialForm::monomial(c1 * c2, b);
        }
    return r;
}

DifferentialForm d(const DifferentialForm& f, const Chart& chart) {
    DifferentialForm r(f.degree() + 1);
    for (auto& [b, c] : f.components()) {
        for (auto& coord : c.coordinates())
            if (chart.jet(coord)) throw Error("exterior derivative of a coefficient containing jet " + coord);
        for (auto& x : chart.differentials()) {
            ScalarExpr dc = diff(c, x, chart);
            if (dc.is_zero()) continue;
            Basis nb{x};
            nb.insert(nb.end(), b.begin(), b.end());
            r += DifferentialForm::monomial(dc, nb);
        }
    }
    return r;
}

Truth is_zero(const DifferentialForm& f, const AssumptionSet& a, const Chart& chart) {
    Truth out = Truth::yes;
    for (auto& [b, c] : f.components()) {
        Truth t = is_zero(c, a, chart);
        if (t == Truth::no) return Truth::no;
        if (t == Truth::ambiguous) out = Truth::ambiguous;
    }
    return out;
}

std::vector<Basis> basis_monomials(const std::vector<std::string>& differentials, int k) {
    std::vector<std::string> ds = differentials;
    std::stable_sort(ds.begin(), ds.end(), differential_less);
    std::vector<Basis> out;
    Basis cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < ds.size(); ++i) {
            cur.push_back(ds[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

}  // namespace eds
