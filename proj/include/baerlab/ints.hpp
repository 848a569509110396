#ifndef BAERLAB_INTS_HPP
#define BAERLAB_INTS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace baerlab {

// All matrix/group arithmetic runs on arbitrary-precision integers; SNF
// intermediates can blow up well past 64 bits even on small inputs.
using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs_int(a / gcd_int(a, b) * b);
}

// Error taxonomy shared by every module; the CLI maps codes to exit codes.
enum class Errc {
  LimitExceeded,
  SizeCapExceeded,
  CoprimalityViolated,
  NotAHomomorphism,
  SubgroupNotPreserved,
  MethodMismatch,
  HypothesisUnverified,
  DegreeOutOfRange,
  Inconsistent,
  ColimitNotFinite,
  NotNormal,
  MismatchedParents,
  IllDefinedHom,
  ModelDefect,
  ParseError,
  InvalidArgument,
};

class BaerError : public std::runtime_error {
 public:
  BaerError(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::LimitExceeded: return "limit-exceeded";
    case Errc::SizeCapExceeded: return "size-cap-exceeded";
    case Errc::CoprimalityViolated: return "coprimality-violated";
    case Errc::NotAHomomorphism: return "not-a-homomorphism";
    case Errc::SubgroupNotPreserved: return "subgroup-not-preserved";
    case Errc::MethodMismatch: return "method-mismatch";
    case Errc::HypothesisUnverified: return "hypothesis-unverified";
    case Errc::DegreeOutOfRange: return "degree-out-of-range";
    case Errc::Inconsistent: return "inconsistent";
    case Errc::ColimitNotFinite: return "colimit-not-finite";
    case Errc::NotNormal: return "not-normal";
    case Errc::MismatchedParents: return "mismatched-parents";
    case Errc::IllDefinedHom: return "ill-defined-hom";
    case Errc::ModelDefect: return "model-defect";
    case Errc::ParseError: return "parse-error";
    case Errc::InvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

}  // namespace baerlab

#endif
