#pragma once

#include <stdexcept>
#include <string>

namespace veld {

// Error identifiers surfaced through the CLI and asserted in tests.
enum class Errc {
  DegenerateShadow,
  DegenerateHeight,
  ShadowMismatch,
  HypothesisViolated,
  DensityHypothesisViolated,
  BandOutOfRange,
  EmptyProbe,
  NonsummableExponent,
  BadInput,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DegenerateShadow: return "DegenerateShadow";
    case Errc::DegenerateHeight: return "DegenerateHeight";
    case Errc::ShadowMismatch: return "ShadowMismatch";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::DensityHypothesisViolated: return "DensityHypothesisViolated";
    case Errc::BandOutOfRange: return "BandOutOfRange";
    case Errc::EmptyProbe: return "EmptyProbe";
    case Errc::NonsummableExponent: return "NonsummableExponent";
    case Errc::BadInput: return "BadInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace veld
