#pragma once

#include "eds/dsl.hpp"

namespace eds::test {

inline ScalarExpr C(const std::string& n, const ParamRational& e = 1) { return ScalarExpr::coord(n, e); }
inline ScalarExpr P(const std::string& n) { return ScalarExpr::param(n); }
inline ParamRational R(const std::string& n) { return ParamRational::param(n); }
inline DifferentialForm D(const std::string& c) { return DifferentialForm::differential(c); }
inline LieExpr G(const std::string& n) { return LieExpr::gen(n); }

inline Chart plain_chart() {
    Chart ch;
    for (auto c : {"x", "t", "u", "p", "q"}) ch.add_base(c);
    return ch;
}

// u_t = u_xx written as a two-form system over (x, t, u, p).
inline ExteriorSystem heat_system() {
    ExteriorSystem s;
    s.name = "heat";
    for (auto c : {"x", "t", "u", "p"}) s.chart.add_base(c);
    DifferentialForm a1 = wedge(D("u"), D("t")) - wedge(D("x"), D("t")) * C("p");
    DifferentialForm a2 = wedge(D("u"), D("x")) + wedge(D("p"), D("t"));
    s.generators = {{"alpha1", a1}, {"alpha2", a2}};
    return s;
}

}  // namespace eds::test
