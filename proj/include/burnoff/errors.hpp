#ifndef BURNOFF_ERRORS_HPP
#define BURNOFF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace burnoff {

/// Malformed external input: unparsable files, out-of-range vertex indices,
/// objects bound to the wrong graph, invalid family parameters.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented operation precondition does not hold, e.g. firing a vertex
/// that is not supercritical or reverse-firing when a neighbor has no chip.
class precondition_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The instance exceeds the supported size of an exhaustive routine.
/// Raised instead of silently running for hours or overflowing.
class scale_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace burnoff

#endif
