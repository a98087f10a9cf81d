#include "fyamlab/problem.hpp"

#include <algorithm>
#include <cmath>

#include "fyamlab/errors.hpp"

namespace fyam {

double default_r0(double r_max) { return 1e-4 * std::min(1.0, r_max); }

ProblemSpec make_problem(int n, double alpha, PotentialSpec h, double r_max) {
    ProblemSpec spec;
    spec.n = n;
    spec.alpha = alpha;
    spec.h = std::move(h);
    spec.r_max = r_max;
    spec.r0 = default_r0(r_max);
    spec.validate();
    return spec;
}

void ProblemSpec::validate() const {
    if (n < 2) throw domain_error("dimension n must be an integer >= 2");
    if (alpha == 0.0 || !std::isfinite(alpha))
        throw domain_error("initial slope alpha must be finite and nonzero");
    if (!(r_max > 0.0)) throw domain_error("integration horizon r_max must be positive");
    double start = r0 > 0.0 ? r0 : default_r0(r_max);
    if (!(start > 0.0 && start < r_max)) throw domain_error("startup radius must satisfy 0 < r0 < r_max");
    if (!(rel_tol > 0.0 && abs_tol > 0.0)) throw domain_error("tolerances must be positive");
}

nlohmann::json problem_to_json(const ProblemSpec& spec) {
    return nlohmann::json{{"n", spec.n},
                          {"alpha", spec.alpha},
                          {"h", potential_to_json(spec.h)},
                          {"r_max", spec.r_max},
                          {"rel_tol", spec.rel_tol},
                          {"abs_tol", spec.abs_tol},
                          {"r0", spec.r0 > 0.0 ? spec.r0 : default_r0(spec.r_max)}};
}

ProblemSpec problem_from_json(const nlohmann::json& j) {
    ProblemSpec spec;
    if (!j.at("n").is_number_integer())
        throw domain_error("dimension n must be an integer");
    spec.n = j.at("n").get<int>();
    spec.alpha = j.at("alpha").get<double>();
    spec.h = potential_from_json(j.at("h"));
    spec.r_max = j.at("r_max").get<double>();
    spec.rel_tol = j.value("rel_tol", kDefaultRelTol);
    spec.abs_tol = j.value("abs_tol", kDefaultAbsTol);
    spec.r0 = j.value("r0", 0.0);
    spec.validate();
    return spec;
}

} // namespace fyam
