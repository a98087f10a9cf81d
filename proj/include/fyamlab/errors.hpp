#ifndef FYAMLAB_ERRORS_HPP
#define FYAMLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fyam {

// Thrown when an operation is evaluated outside its mathematical domain
// (tabulated potential out of range, roots requested where none exist,
// oracle past its blow-up radius, ...).  Numerical *termination* conditions
// inside an integration are reported through TerminationStatus instead.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
    domain_error(double r, const std::string& what)
        : std::runtime_error(what + " (at r=" + std::to_string(r) + ")"), r_(r) {}
    double where() const { return r_; }

private:
    double r_ = 0.0;
};

} // namespace fyam

#endif
