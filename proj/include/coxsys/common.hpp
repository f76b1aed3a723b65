#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace coxsys {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Error codes used across the library. The CLI maps VerificationFailed-ish
// codes to exit 2 and usage problems to exit 1.
enum class Errc {
  MalformedMatrix,
  CapExceeded,
  PreconditionLength,
  NotALoop,
  NotRightAngled,
  KTooSmall,
  ContextMismatch,
  RelationFailed,
  BoundViolated,
  Inconsistent,
  UnsupportedModulus,
  VerificationFailed,
  Condition11_1Violated,
  Condition11_2Violated,
  EarlyCurveClosure,
  Nonorientable,
  SizeCap,
  CountsOnly,
  IoError,
  DegenerateGeodesic,
  ConvergenceFailed,
  VertexAmbiguity,
  Domain,
  Usage,
  Internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::MalformedMatrix: return "MALFORMED_MATRIX";
    case Errc::CapExceeded: return "CAP_EXCEEDED";
    case Errc::PreconditionLength: return "PRECONDITION_LENGTH";
    case Errc::NotALoop: return "NOT_A_LOOP";
    case Errc::NotRightAngled: return "NOT_RIGHT_ANGLED";
    case Errc::KTooSmall: return "K_TOO_SMALL";
    case Errc::ContextMismatch: return "CONTEXT_MISMATCH";
    case Errc::RelationFailed: return "RELATION_FAILED";
    case Errc::BoundViolated: return "BOUND_VIOLATED";
    case Errc::Inconsistent: return "INCONSISTENT";
    case Errc::UnsupportedModulus: return "UNSUPPORTED_MODULUS";
    case Errc::VerificationFailed: return "VERIFICATION_FAILED";
    case Errc::Condition11_1Violated: return "CONDITION_11_1_VIOLATED";
    case Errc::Condition11_2Violated: return "CONDITION_11_2_VIOLATED";
    case Errc::EarlyCurveClosure: return "EARLY_CURVE_CLOSURE";
    case Errc::Nonorientable: return "NONORIENTABLE";
    case Errc::SizeCap: return "SIZE_CAP";
    case Errc::CountsOnly: return "COUNTS_ONLY";
    case Errc::IoError: return "IO_ERROR";
    case Errc::DegenerateGeodesic: return "DEGENERATE_GEODESIC";
    case Errc::ConvergenceFailed: return "CONVERGENCE_FAILED";
    case Errc::VertexAmbiguity: return "VERTEX_AMBIGUITY";
    case Errc::Domain: return "DOMAIN";
    case Errc::Usage: return "USAGE";
    case Errc::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

inline Int pow_int(Int base, unsigned e) {
  Int r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline Int pow3(unsigned e) { return pow_int(3, e); }

}  // namespace coxsys
