#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sidon/analysis.hpp"
#include "sidon/campaign.hpp"
#include "sidon/core_sets.hpp"
#include "sidon/quadrature.hpp"

namespace sidon {

inline constexpr int kSchemaVersion = 1;

/// Fixed float formatting shared by every text and CSV output: 12 significant digits.
std::string format_real(double value);

/// One row per trial: seed,size_S,S_N,size_T,Z_N,density3_S,density3_remainder.
std::string campaign_csv(const CampaignReport& report);
nlohmann::json campaign_json(const CampaignReport& report);

nlohmann::json quadrature_json(const QuadratureResult& result);
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

nlohmann::json density_json(const DensityReport& report);

struct ConstantsReport {
  double gamma_third = 0.0;
  double gamma_two_thirds = 0.0;
  double goguel_exponent = 0.0;  // G(1/3)^3 / 6
  double pair_sumset = 0.0;      // (3/4) G(1/3)^2 / G(2/3)
  double triple_with_t = 0.0;    // 1.8 G(1/3)^3
  double c_star = 0.0;
  double f_star = 0.0;
};

ConstantsReport constants_report();
/// name,value rows in fixed 12-decimal notation.
std::string constants_text(const ConstantsReport& report);
nlohmann::json constants_json(const ConstantsReport& report);

}  // namespace sidon
