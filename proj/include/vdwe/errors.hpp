#ifndef VDWE_ERRORS_HPP
#define VDWE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vdwe {

/// Bad gas constants (R <= 0, c_v <= 0, b < 0) or other rejected parameters.
struct invalid_parameters_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// State outside the admissible set, e.g. rho >= 1/b or rho < 0.
struct out_of_domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// A quantity requiring v = 1/rho was requested at rho = 0.
struct vacuum_state_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// The classical (p,u,s) symmetrization was asked to handle rho <= 0.
struct vacuum_not_supported_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Characteristic foot-point inversion did not converge.
struct characteristic_inversion_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Initial support does not fit in the box with the finite-speed margin.
struct domain_too_small_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// NaN/Inf appeared during time stepping; carries the time of failure.
struct blow_up_error : std::runtime_error {
    double time;
    explicit blow_up_error(double t, const std::string& what)
        : std::runtime_error(what), time(t) {}
};

/// Monitored bound (positivity, covolume, buffer contact) violated mid-run.
struct monitor_violation_error : std::runtime_error {
    double time;
    explicit monitor_violation_error(double t, const std::string& what)
        : std::runtime_error(what), time(t) {}
};

/// Configuration text failed validation; message lists every violation.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace vdwe

#endif
