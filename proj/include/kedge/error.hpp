#pragma once

#include <stdexcept>
#include <string>

namespace kedge {

enum class ErrorKind {
    InvalidSpec,          // malformed input structure (rotations, labels, indices)
    InconsistentCrossings,
    NotSphere,            // Euler check failed; bad rotations or signs
    GoodnessViolation,
    UnknownVertex,
    DegenerateTriangle,
    DegeneratePointSet,
    ConstructionDegeneracy,
    DegenerateChords,
    MalformedCert,
    NotOdd,
    ParseError,
    Internal,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

// Invariant guard; failures indicate a bug, not bad input.
#define KEDGE_ASSERT(cond, msg)                                                  \
    do {                                                                         \
        if (!(cond)) throw ::kedge::Error(::kedge::ErrorKind::Internal, (msg));  \
    } while (0)

}
