#pragma once

#include <stdexcept>
#include <string>

namespace braidcover {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StrandMismatch : Error {
    using Error::Error;
};

struct DegenerateClosure : Error {
    using Error::Error;
};

struct NoConvergence : Error {
    using Error::Error;
};

struct NotInVn : Error {
    using Error::Error;
};

struct FiberIncomplete : Error {
    FiberIncomplete(const std::string& what, int found_, int expected_)
        : Error(what), found(found_), expected(expected_) {}
    int found;
    int expected;
};

struct NonGenericBase : Error {
    using Error::Error;
};

struct NoConsistentMatching : Error {
    using Error::Error;
};

struct LeavesVn : Error {
    using Error::Error;
};

struct PathTrackingFailure : Error {
    using Error::Error;
};

struct EndpointUnmatched : Error {
    using Error::Error;
};

struct DegenerateProjection : Error {
    using Error::Error;
};

struct MissingTable : Error {
    using Error::Error;
};

struct DepthExceeded : Error {
    using Error::Error;
};

struct EnumerationBudgetExceeded : Error {
    EnumerationBudgetExceeded(const std::string& what, unsigned long long found_)
        : Error(what), elements_found(found_) {}
    unsigned long long elements_found;
};

struct BadIndex : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace braidcover
