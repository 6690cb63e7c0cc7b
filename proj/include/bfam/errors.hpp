#ifndef BFAM_ERRORS_HPP
#define BFAM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bfam {

/// A computation produced or received a NaN/Inf value.
class numeric_error : public std::runtime_error {
  public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

/// The solution exceeded the runaway guard (discrete proxy for finite-time breakdown).
class breakdown_error : public std::runtime_error {
  public:
    breakdown_error(const std::string& what, double t, long step_index = -1)
        : std::runtime_error(what), t(t), step_index(step_index) {}
    double t;
    long step_index;
};

/// A characteristic Jacobian became non-positive (discrete wave-breaking signal).
class flow_degeneracy_error : public std::runtime_error {
  public:
    flow_degeneracy_error(const std::string& what, double t)
        : std::runtime_error(what), t(t) {}
    double t;
};

/// A caller violated a documented precondition.
class precondition_error : public std::invalid_argument {
  public:
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Bad run configuration or CLI usage.
class config_error : public std::runtime_error {
  public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace bfam

#endif
