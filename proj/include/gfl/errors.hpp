#pragma once

#include <stdexcept>
#include <string>

namespace gfl {

enum class Err {
  Structural,            // shape mismatch, undefined operation, bad argument
  EmptyVector,           // leading term of the zero vector
  ZeroInput,             // zero where a nonzero element is required
  ZeroInversion,         // attempt to invert 0 (a logic error in the caller)
  AlreadyRemoved,        // corner removal outside the family
  CapExceeded,           // completion degree guardrail hit
  MalformedCertificate,  // certificate invariant violated
  Parse,                 // syntax error in .gfl input or certificate text
  WrongProblem,          // certificate digest does not match the problem
  SamplingExhausted,     // no specialization point found within the retry bound
  PointOutsideWitnessLocus,  // f(tau) == 0
  Io,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& msg)
      : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind) {}

  Err kind() const { return kind_; }

 private:
  Err kind_;
};

struct SourceLocation {
  int line = 1;    // 1-based
  int column = 1;  // 1-based
};

class ParseError : public Error {
 public:
  ParseError(SourceLocation loc, const std::string& msg)
      : Error(Err::Parse, "line " + std::to_string(loc.line) + ", column " +
                              std::to_string(loc.column) + ": " + msg),
        loc_(loc) {}

  SourceLocation location() const { return loc_; }

 private:
  SourceLocation loc_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace gfl
