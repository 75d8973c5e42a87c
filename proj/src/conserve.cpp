#include "eds/conserve.hpp"

#include "eds/error.hpp"

namespace eds {

DifferentialForm build_theta(const std::vector<ScalarExpr>& g, const ExteriorSystem& sys) {
    if (g.size() != sys.generators.size())
        throw Error("expected " + std::to_string(sys.generators.size()) + " multipliers, got " +
                    std::to_string(g.size()));
    DifferentialForm theta(sys.generators.empty() ? 0 : sys.generators[0].form.degree());
    for (std::size_t i = 0; i < g.size(); ++i) theta += sys.generators[i].form * g[i];
    return theta;
}

FormCheck check_exact(const DifferentialForm& theta, const ExteriorSystem& sys) {
    FormCheck c;
    c.residual = d(theta, sys.chart);
    c.holds = is_zero(c.residual, sys.assumptions, sys.chart);
    return c;
}

FormCheck check_potential(const DifferentialForm& omega, const DifferentialForm& theta, const ExteriorSystem& sys) {
    if (omega.degree() != 1 && !omega.is_zero()) throw Error("potential must be a 1-form");
    FormCheck c;
    c.residual = d(omega, sys.chart) - theta;
    c.holds = is_zero(c.residual, sys.assumptions, sys.chart);
    return c;
}

ExteriorSystem extend_with_potential(const ExteriorSystem& sys, const DifferentialForm& omega,
                                     const std::string& coordinate, const std::string& generator) {
    ExteriorSystem out = sys;
    if (!out.chart.is_base(coordinate)) out.chart.add_base(coordinate);
    out.generators.push_back({generator, DifferentialForm::differential(coordinate) + omega});
    return out;
}

}  // namespace eds
