// Exception hierarchy shared by all gring components.
#pragma once

#include <stdexcept>
#include <string>

namespace gring {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// exact arithmetic
struct DomainError : Error {
    using Error::Error;
};
struct NonCoprimeAutomorphism : Error {
    using Error::Error;
};

// character tables
struct SchemaError : Error {
    using Error::Error;
};
struct DanglingClassRef : Error {
    using Error::Error;
};
struct BadDegree : Error {
    using Error::Error;
};
struct PowerMapOrderError : Error {
    using Error::Error;
};
struct MissingPowerMap : Error {
    using Error::Error;
};

// constraint generation
struct NonIntegerCoefficient : Error {
    using Error::Error;
};
struct BrauerCharacteristicDividesOrder : Error {
    using Error::Error;
};
struct MissingScenarioOrder : Error {
    using Error::Error;
};

// solving
struct Unbounded : Error {
    using Error::Error;
};
struct LimitExceeded : Error {
    using Error::Error;
};

// reporting
struct IncompleteResults : Error {
    using Error::Error;
};

} // namespace gring
