#ifndef SCLAB_ERRORS_HPP
#define SCLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sclab {

// Base class for all solver/model errors so callers can catch one type.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NoCausticFound : Error {
    explicit NoCausticFound(const std::string& msg) : Error(msg) {}
};

struct MonotonicityFailed : Error {
    double r0;
    explicit MonotonicityFailed(double r0_, const std::string& msg)
        : Error(msg), r0(r0_) {}
};

struct CollarOverlap : Error {
    explicit CollarOverlap(const std::string& msg) : Error(msg) {}
};

struct DegenerateSpeedRegion : Error {
    explicit DegenerateSpeedRegion(const std::string& msg) : Error(msg) {}
};

struct ResolutionError : Error {
    explicit ResolutionError(const std::string& msg) : Error(msg) {}
};

struct ConvergenceError : Error {
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

struct PoleSingularity : Error {
    explicit PoleSingularity(const std::string& msg) : Error(msg) {}
};

struct TurningPointInSegment : Error {
    explicit TurningPointInSegment(const std::string& msg) : Error(msg) {}
};

struct RangeError : Error {
    explicit RangeError(const std::string& msg) : Error(msg) {}
};

struct EmptyAnnulus : Error {
    explicit EmptyAnnulus(const std::string& msg) : Error(msg) {}
};

struct NotAdmissible : Error {
    explicit NotAdmissible(const std::string& msg) : Error(msg) {}
};

struct CurveOutsideDomain : Error {
    explicit CurveOutsideDomain(const std::string& msg) : Error(msg) {}
};

struct EpsilonTooLarge : Error {
    explicit EpsilonTooLarge(const std::string& msg) : Error(msg) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace sclab

#endif  // SCLAB_ERRORS_HPP
