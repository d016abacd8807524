#pragma once

#include <stdexcept>
#include <string>

namespace blgv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Amplified spectral coefficient left the representable range: the data does
// not carry the analyticity radius the multiplier asks for.
struct AnalyticityDeficit : Error {
    int mode;
    explicit AnalyticityDeficit(int m, const std::string& what) : Error(what), mode(m) {}
};

// Temperature floor theta + theta_E >= theta_E/2 breached; the parabolic
// terms lose their nondegeneracy and the run must stop.
struct PositivityBreach : Error {
    double t;
    explicit PositivityBreach(double time, const std::string& what) : Error(what), t(time) {}
};

struct BlowUp : Error {
    double t;
    explicit BlowUp(double time, const std::string& what) : Error(what), t(time) {}
};

struct SpectrumUnderresolved : Error {
    using Error::Error;
};

struct CompatibilityError : Error {
    using Error::Error;
};

struct InsufficientDecay : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

} // namespace blgv
