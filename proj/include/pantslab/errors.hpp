#pragma once

#include <stdexcept>
#include <string>

namespace pantslab {

// Exit-code mapping for the CLI lives in tools/; these are the library-level
// error families the spec's operations distinguish.

class UnsupportedSurfaceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmbeddingViolationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegenerateSubsurfaceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OutOfDomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MissingVertexError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotInRegionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArcError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a case analysis the source results rule out fires anyway.
// Carries a dump of the offending configuration for postmortems.
class InternalConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace pantslab
