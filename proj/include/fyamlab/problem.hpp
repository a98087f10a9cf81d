#ifndef FYAMLAB_PROBLEM_HPP
#define FYAMLAB_PROBLEM_HPP

#include <json.hpp>

#include "fyamlab/potential.hpp"

namespace fyam {

inline constexpr double kDefaultRelTol = 1e-10;
inline constexpr double kDefaultAbsTol = 1e-12;

// One initial value problem: dimension, initial slope, potential derivative,
// horizon and local-error tolerances.  r0 is the startup radius at which the
// series expansion hands over to the stepper.
struct ProblemSpec {
    int n = 4;
    double alpha = -1.0;
    PotentialSpec h = ZeroPotential{};
    double r_max = 10.0;
    double rel_tol = kDefaultRelTol;
    double abs_tol = kDefaultAbsTol;
    double r0 = 0.0; // 0 means "use the default 1e-4 * min(1, r_max)"

    void validate() const; // throws domain_error on any violated invariant
};

ProblemSpec make_problem(int n, double alpha, PotentialSpec h, double r_max);

double default_r0(double r_max);

nlohmann::json problem_to_json(const ProblemSpec& spec);
ProblemSpec problem_from_json(const nlohmann::json& j);

} // namespace fyam

#endif
