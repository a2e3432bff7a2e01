#ifndef APART_CORE_HPP
#define APART_CORE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace apart
{

inline constexpr const char *version = "1.0.0";

using BigInt = boost::multiprecision::cpp_int;

// Weights and parts are machine integers; counts and products are exact.
using Weight = std::uint64_t;

inline std::string to_string(const BigInt &v)
{
    return v.str();
}

// Thrown when an argument lies outside the domain of an operation
// (part not in the set, weight mismatch, malformed part list, ...).
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// A count table or scan was asked about values beyond its bound.
struct bound_error : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Explicit enumeration would exceed the configured cap.
struct enumeration_overflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A theorem/proposition hypothesis required by an injection does not hold.
struct hypothesis_error : std::invalid_argument {
    std::string hypothesis;
    hypothesis_error(std::string name, const std::string &what)
        : std::invalid_argument(what), hypothesis(std::move(name))
    {
    }
};

// The smallest part exceeds 1 but does not divide every materialized part.
struct scaling_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A finite scan was too short to support the conclusion asked for.
struct inconclusive_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace apart

#endif
