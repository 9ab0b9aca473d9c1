#ifndef HOUGHTON_ERRORS_HPP
#define HOUGHTON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace houghton {

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct InvalidInjection : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ZeroCharacterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Vertex whose star is cut by the region truncation; link queries refuse it.
struct BoundaryVertexError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Signed 64-bit arithmetic left its safe range; callers retry with big integers.
struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A certified cross-check failed (the two certification routes disagree).
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace houghton

#endif
