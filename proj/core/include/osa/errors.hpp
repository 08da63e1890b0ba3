#ifndef OSA_ERRORS_HPP
#define OSA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace osa {

enum class Errc {
  InvalidTheta,
  NonpositiveMargin,
  EmptyChannelSet,
  InvalidDistribution,
  IllegalAction,
  InvalidPolicy,
  TooManyChannels,
  LengthMismatch,
  DomainError,
  DegenerateGap,
  ZeroSupportLowerBound,
  NegativeDenominator,
  NoSuboptimalChannels,
  EstimatesUnavailable,
  ConfigError,
  IoError,
};

const char* errc_name(Errc code);

/// Library-wide exception. `code()` identifies the failed contract.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidTheta: return "InvalidTheta";
    case Errc::NonpositiveMargin: return "NonpositiveMargin";
    case Errc::EmptyChannelSet: return "EmptyChannelSet";
    case Errc::InvalidDistribution: return "InvalidDistribution";
    case Errc::IllegalAction: return "IllegalAction";
    case Errc::InvalidPolicy: return "InvalidPolicy";
    case Errc::TooManyChannels: return "TooManyChannels";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::DomainError: return "DomainError";
    case Errc::DegenerateGap: return "DegenerateGap";
    case Errc::ZeroSupportLowerBound: return "ZeroSupportLowerBound";
    case Errc::NegativeDenominator: return "NegativeDenominator";
    case Errc::NoSuboptimalChannels: return "NoSuboptimalChannels";
    case Errc::EstimatesUnavailable: return "EstimatesUnavailable";
    case Errc::ConfigError: return "ConfigError";
    case Errc::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace osa

#endif  // OSA_ERRORS_HPP
