#ifndef FEMTOFLOW_DOMAIN_HPP
#define FEMTOFLOW_DOMAIN_HPP

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "femtoflow/errors.hpp"

namespace femtoflow {

/// Population, topology and traffic parameters of one macrocell entity
/// (a macrocell plus its underlying femtocells). All rates are per second;
/// mean durations from configs are converted to rates at ingestion.
struct SystemParams {
  double macro_radius_m = 1000.0;       // macrocell radius
  double femto_radius_m = 20.0;         // femtocell radius
  int femtocells = 40;                  // femtocells per macrocell
  double mean_users = 4.0;              // mean femtocell users per femtocell
  int femto_channels = 3;               // channels per femtocell
  int open_channels = 1;                // femtocell channels open to all users
  int macro_channels = 24;              // channels in the macrocell
  double indoor_fraction = 0.6;         // fraction of a femtocell user's calls placed indoors
  double user_call_rate = 0.002;        // per-user new-call rate
  double total_arrival_rate = 1.0;      // total new-call rate of the whole entity
  double session_rate = 1.0 / 110.0;    // session-end rate (1 / mean session duration)
  double femto_dwell_rate = 1.0 / 990.0;  // femtocell dwell-departure rate
  double macro_dwell_rate = 1.0 / 300.0;  // macrocell dwell-departure rate

  int closed_channels() const { return femto_channels - open_channels; }
  double area_macro() const { return std::numbers::pi * macro_radius_m * macro_radius_m; }
  double area_femto() const { return std::numbers::pi * femto_radius_m * femto_radius_m; }
  double area_ratio() const {
    return (femto_radius_m / macro_radius_m) * (femto_radius_m / macro_radius_m);
  }
  /// New-call rate of macrocell users, derived so that femtocell-user and
  /// macrocell-user streams together carry the configured entity total.
  double macro_user_rate() const {
    return total_arrival_rate - femtocells * mean_users * user_call_rate;
  }
};

/// Propagation and power parameters of the femtocell radio layer.
struct RadioParams {
  double shadowing_sigma_db = 8.0;   // log-normal shadowing deviation
  double path_loss_exponent = 2.0;
  double wall_count = 2.0;           // walls between interfering femtocells
  double protection_m = 5.0;         // minimum user-to-BS distance
  double indoor_shadowing_db = 4.0;  // fixed shadowing on the desired link
  double channel_power_w = 0.02;     // transmit power per femtocell channel
  double circuit_power_w = 5.0;      // fixed femtocell BS power draw
  double bandwidth_hz = 180e3;       // per-channel bandwidth
  double noise_power_w = thermal_noise_w(180e3);

  /// Thermal noise floor at -174 dBm/Hz over the given bandwidth.
  static double thermal_noise_w(double bandwidth_hz) {
    return std::pow(10.0, -17.4) * 1e-3 * bandwidth_hz;
  }
};

/// The three coupled blocking probabilities solved by the fixed point:
/// femtocell user blocked in a femtocell, macrocell user blocked in a
/// femtocell, and any user blocked in the macrocell.
struct BlockingProbs {
  double femto_in_femto = 0.0;
  double macro_in_femto = 0.0;
  double any_in_macro = 0.0;
};

namespace detail {
inline bool finite(double v) { return std::isfinite(v); }
}  // namespace detail

/// Checks every invariant and returns the complete list of violations
/// (empty means valid).
inline std::vector<std::string> validate(const SystemParams& p) {
  std::vector<std::string> bad;
  auto req = [&](bool ok, const std::string& msg) {
    if (!ok) bad.push_back(msg);
  };
  req(detail::finite(p.macro_radius_m) && p.macro_radius_m > 0, "macro_radius_m must be > 0");
  req(detail::finite(p.femto_radius_m) && p.femto_radius_m > 0, "femto_radius_m must be > 0");
  req(p.femtocells >= 1, "femtocells must be >= 1");
  req(detail::finite(p.mean_users) && p.mean_users > 0, "mean_users must be > 0");
  req(p.femto_channels >= 0, "femto_channels must be >= 0");
  req(p.open_channels >= 0, "open_channels must be >= 0");
  req(p.open_channels <= p.femto_channels, "open_channels must be <= femto_channels");
  req(p.macro_channels >= 1, "macro_channels must be >= 1");
  req(detail::finite(p.indoor_fraction) && p.indoor_fraction >= 0 && p.indoor_fraction <= 1,
      "indoor_fraction must be in [0,1]");
  req(detail::finite(p.user_call_rate) && p.user_call_rate > 0, "user_call_rate must be > 0");
  req(detail::finite(p.session_rate) && p.session_rate > 0, "session_rate must be > 0");
  req(detail::finite(p.femto_dwell_rate) && p.femto_dwell_rate > 0,
      "femto_dwell_rate must be > 0");
  req(detail::finite(p.macro_dwell_rate) && p.macro_dwell_rate > 0,
      "macro_dwell_rate must be > 0");
  if (detail::finite(p.total_arrival_rate)) {
    // keeps the derived macrocell-user stream nonnegative
    req(p.macro_user_rate() >= 0,
        "total_arrival_rate must be >= femtocells * mean_users * user_call_rate");
  } else {
    bad.push_back("total_arrival_rate must be finite");
  }
  if (p.macro_radius_m > 0 && p.femto_radius_m > 0) {
    // coverage feasibility: femtocells must fit inside the macrocell area
    req(p.femtocells * p.area_femto() <= p.area_macro(),
        "femtocells * femtocell area must not exceed the macrocell area");
  }
  return bad;
}

inline std::vector<std::string> validate(const RadioParams& r, double femto_radius_m) {
  std::vector<std::string> bad;
  auto req = [&](bool ok, const std::string& msg) {
    if (!ok) bad.push_back(msg);
  };
  req(detail::finite(r.shadowing_sigma_db) && r.shadowing_sigma_db >= 0,
      "shadowing_sigma_db must be >= 0");
  req(detail::finite(r.path_loss_exponent) && r.path_loss_exponent > 0,
      "path_loss_exponent must be > 0");
  req(detail::finite(r.wall_count) && r.wall_count >= 0, "wall_count must be >= 0");
  req(detail::finite(r.protection_m) && r.protection_m > 0, "protection_m must be > 0");
  req(r.protection_m < femto_radius_m, "protection_m must be < femto_radius_m");
  req(detail::finite(r.indoor_shadowing_db), "indoor_shadowing_db must be finite");
  req(detail::finite(r.channel_power_w) && r.channel_power_w > 0, "channel_power_w must be > 0");
  req(detail::finite(r.circuit_power_w) && r.circuit_power_w > 0, "circuit_power_w must be > 0");
  req(detail::finite(r.bandwidth_hz) && r.bandwidth_hz > 0, "bandwidth_hz must be > 0");
  req(detail::finite(r.noise_power_w) && r.noise_power_w > 0, "noise_power_w must be > 0");
  return bad;
}

inline std::vector<std::string> validate(const SystemParams& p, const RadioParams& r) {
  auto bad = validate(p);
  auto radio_bad = validate(r, p.femto_radius_m);
  bad.insert(bad.end(), radio_bad.begin(), radio_bad.end());
  return bad;
}

inline void validate_or_throw(const SystemParams& p) {
  auto bad = validate(p);
  if (!bad.empty()) {
    std::string joined;
    for (const auto& msg : bad) {
      if (!joined.empty()) joined += "; ";
      joined += msg;
    }
    throw Error(Errc::validation_failed, joined);
  }
}

inline void validate_or_throw(const SystemParams& p, const RadioParams& r) {
  auto bad = validate(p, r);
  if (!bad.empty()) {
    std::string joined;
    for (const auto& msg : bad) {
      if (!joined.empty()) joined += "; ";
      joined += msg;
    }
    throw Error(Errc::validation_failed, joined);
  }
}

}  // namespace femtoflow

#endif
