#pragma once

#include "eds/exterior.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eds {

struct ConservationCandidate {
    std::string name;
    std::vector<ScalarExpr> g;  // one multiplier per generator
    std::optional<DifferentialForm> omega;
};

DifferentialForm build_theta(const std::vector<ScalarExpr>& g, const ExteriorSystem& sys);

struct FormCheck {
    Truth holds = Truth::yes;
    DifferentialForm residual;
};

// d(theta) = 0 on the chart.
FormCheck check_exact(const DifferentialForm& theta, const ExteriorSystem& sys);
// d(omega) - theta = 0.
FormCheck check_potential(const DifferentialForm& omega, const DifferentialForm& theta, const ExteriorSystem& sys);

// Adds the coordinate v and the generator dv + omega.
ExteriorSystem extend_with_potential(const ExteriorSystem& sys, const DifferentialForm& omega,
                                     const std::string& coordinate = "v", const std::string& generator = "omega");

}  // namespace eds
