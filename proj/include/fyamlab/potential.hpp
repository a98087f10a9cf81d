#ifndef FYAMLAB_POTENTIAL_HPP
#define FYAMLAB_POTENTIAL_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace fyam {

// The forcing coefficient h(r) of the radial equation (the derivative of the
// radial potential).  Closed forms cover the cases the theorems use; Tabulated
// handles everything else through shape-preserving cubic interpolation, so
// that sign hypotheses (h <= 0, h >= 0) survive interpolation.

struct ZeroPotential {};

struct ConstantPotential {
    double c = 0.0;
};

// c * r^p; for p < 0 only defined on r > 0.
struct PowerLawPotential {
    double c = 0.0;
    double p = 1.0;
};

// The h for which u(r) = alpha*r is an exact solution:
//   h(r) = -(alpha*r/2) * ((n-2)*alpha*r^2 + n + 2)
struct LinearExactPotential {
    double alpha = -1.0;
    int n = 4;
};

// -(n-1)/(1+r): strictly negative yet everywhere above the -(n-1)/r barrier.
struct BoundedBelowSamplePotential {
    int n = 4;
};

// Knots (r_i, h_i) with strictly increasing r_i, interpolated by the
// Fritsch-Carlson monotone cubic.  Queries outside the knot range are a
// domain error.
class TabulatedPotential {
public:
    TabulatedPotential() = default;
    explicit TabulatedPotential(std::vector<std::pair<double, double>> knots);

    double eval(double r) const;
    double front_r() const { return r_.front(); }
    double back_r() const { return r_.back(); }
    const std::vector<double>& radii() const { return r_; }
    const std::vector<double>& values() const { return h_; }

private:
    std::vector<double> r_, h_, slope_;
};

using PotentialSpec = std::variant<ZeroPotential, ConstantPotential, PowerLawPotential,
                                   LinearExactPotential, BoundedBelowSamplePotential,
                                   TabulatedPotential>;

double eval_h(const PotentialSpec& h, double r);

// h(0), required by the series startup; throws domain_error when h is not
// continuous at 0 (PowerLaw with p < 0) or a tabulation does not reach down
// to r0.
double h_at_zero(const PotentialSpec& h, double r0);

std::string potential_label(const PotentialSpec& h);

nlohmann::json potential_to_json(const PotentialSpec& h);
PotentialSpec potential_from_json(const nlohmann::json& j);

// CLI syntax: zero | const:<c> | pow:<c>,<p> | linexact | bounded | table:<path>
PotentialSpec parse_potential(const std::string& text, double alpha, int n);

} // namespace fyam

#endif
