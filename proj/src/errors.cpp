#include "gfl/errors.hpp"

namespace gfl {

const char* err_name(Err kind) {
  switch (kind) {
    case Err::Structural: return "structural";
    case Err::EmptyVector: return "empty-vector";
    case Err::ZeroInput: return "zero-input";
    case Err::ZeroInversion: return "zero-inversion";
    case Err::AlreadyRemoved: return "already-removed";
    case Err::CapExceeded: return "cap-exceeded";
    case Err::MalformedCertificate: return "malformed-certificate";
    case Err::Parse: return "parse";
    case Err::WrongProblem: return "wrong-problem";
    case Err::SamplingExhausted: return "sampling-exhausted";
    case Err::PointOutsideWitnessLocus: return "point-outside-witness-locus";
    case Err::Io: return "io";
  }
  return "unknown";
}

}  // namespace gfl
