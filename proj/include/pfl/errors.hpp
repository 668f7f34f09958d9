#pragma once

#include <stdexcept>
#include <string>

namespace pfl {

// Base for all library errors so callers can catch one type at the CLI boundary.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Kernel has rank != 1, so there is no distinguished generator.
struct KernelRankNotOne : Error {
    explicit KernelRankNotOne(const std::string& msg) : Error(msg) {}
};

// Kernel line has no strictly positive primitive representative.
struct NoPositiveRepresentative : Error {
    explicit NoPositiveRepresentative(const std::string& msg) : Error(msg) {}
};

// Unrecognized Dynkin / Kodaira label.
struct UnknownLabel : Error {
    explicit UnknownLabel(const std::string& msg) : Error(msg) {}
};

// Unrecognized catalog case id.
struct UnknownCase : Error {
    explicit UnknownCase(const std::string& msg) : Error(msg) {}
};

// Requested operation is not available for this case (missing model, odd
// cohomology, missing lattice, ...).
struct UnsupportedCase : Error {
    explicit UnsupportedCase(const std::string& msg) : Error(msg) {}
};

// A profile with undetermined entries was passed where a fully determined one
// is required.
struct ProfileUndetermined : Error {
    explicit ProfileUndetermined(const std::string& msg) : Error(msg) {}
};

// Cohomology not supported in degrees <= complex dimension, as required by the
// energy-hypersurface formula.
struct SupportHypothesisViolated : Error {
    explicit SupportHypothesisViolated(const std::string& msg) : Error(msg) {}
};

// Malformed input data (JSON schema violations and the like).
struct InvalidInput : Error {
    explicit InvalidInput(const std::string& msg) : Error(msg) {}
};

} // namespace pfl
