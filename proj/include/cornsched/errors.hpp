#pragma once

#include <stdexcept>
#include <string>

namespace cornsched {

// Caller broke a precondition (mismatched arities, out-of-range index, ...).
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input data is malformed or incomplete (CSV schema, missing calendar days).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A population never accumulates its required GDUs within the horizon.
class UnharvestableError : public std::runtime_error {
public:
    UnharvestableError(const std::string& what, int plant_day, double required_gdu)
        : std::runtime_error(what), plant_day_(plant_day), required_gdu_(required_gdu) {}

    int plant_day() const noexcept { return plant_day_; }
    double required_gdu() const noexcept { return required_gdu_; }

private:
    int plant_day_;
    double required_gdu_;
};

// No week with positive harvest, so the criteria are undefined.
class DegenerateInstanceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cornsched

namespace cornsched {

// An optimizer run failed while evaluating candidates.
class RunError : public std::runtime_error {
public:
    RunError(const std::string& what, int generation) : std::runtime_error(what), generation_(generation) {}
    int generation() const noexcept { return generation_; }

private:
    int generation_;
};

} // namespace cornsched
