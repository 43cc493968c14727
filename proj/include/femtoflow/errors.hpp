#ifndef FEMTOFLOW_ERRORS_HPP
#define FEMTOFLOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace femtoflow {

enum class Errc {
  validation_failed,
  invalid_channel_split,
  nonfinite_rate,
  singular_system,
  degenerate_split,
  balance_divergence,
  no_convergence,
  negative_traffic,
  out_of_support,
  zero_capacity,
  nonfinite_sample,
  config_parse,
  io_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::validation_failed: return "VALIDATION_FAILED";
    case Errc::invalid_channel_split: return "INVALID_CHANNEL_SPLIT";
    case Errc::nonfinite_rate: return "NONFINITE_RATE";
    case Errc::singular_system: return "SINGULAR_SYSTEM";
    case Errc::degenerate_split: return "DEGENERATE_SPLIT";
    case Errc::balance_divergence: return "BALANCE_DIVERGENCE";
    case Errc::no_convergence: return "NO_CONVERGENCE";
    case Errc::negative_traffic: return "NEGATIVE_TRAFFIC";
    case Errc::out_of_support: return "OUT_OF_SUPPORT";
    case Errc::zero_capacity: return "ZERO_CAPACITY";
    case Errc::nonfinite_sample: return "NONFINITE_SAMPLE";
    case Errc::config_parse: return "CONFIG_PARSE";
    case Errc::io_error: return "IO_ERROR";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace femtoflow

#endif
