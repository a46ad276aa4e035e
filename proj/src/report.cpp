#include "sidon/report.hpp"

#include <fmt/format.h>

namespace sidon {

namespace {

// nlohmann::json would print doubles with 17 digits; route them through format_real
// so JSON and CSV agree byte for byte.
nlohmann::json real(double v) { return nlohmann::json::parse(format_real(v)); }

nlohmann::json stats_json(const ColumnStats& s) {
  return {{"mean", real(s.mean)}, {"stddev", real(s.stddev)}};
}

}  // namespace

std::string format_real(double value) { return fmt::format("{:.12g}", value); }

std::string campaign_csv(const CampaignReport& report) {
  std::string out = "seed,size_S,S_N,size_T,Z_N,density3_S,density3_remainder\n";
  for (const auto& r : report.rows) {
    out += fmt::format("{},{},{},{},{},{},{}\n", r.seed, r.size_s, r.s_count, r.t_count, r.z,
                       format_real(r.density3_s), format_real(r.density3_remainder));
  }
  return out;
}

nlohmann::json campaign_json(const CampaignReport& report) {
  const auto& s = report.summary;
  return {
      {"schema_version", kSchemaVersion},
      {"kind", "campaign"},
      {"generator", std::string(kGeneratorId)},
      {"c", real(report.params.c)},
      {"N", report.params.horizon},
      {"seed", report.params.seed},
      {"trials", report.trials},
      {"summary",
       {{"size_S", stats_json(s.size_s)},
        {"S_N", stats_json(s.s_count)},
        {"size_T", stats_json(s.t_count)},
        {"Z_N", stats_json(s.z)},
        {"size_remainder", stats_json(s.remainder_size)},
        {"density3_S", stats_json(s.density3_s)},
        {"density3_remainder", stats_json(s.density3_remainder)},
        {"upper_half_coverage_S", stats_json(s.upper_half_coverage)}}},
  };
}

nlohmann::json quadrature_json(const QuadratureResult& result) {
  return {{"schema_version", kSchemaVersion},
          {"kind", "integral"},
          {"value", real(result.value)},
          {"error_estimate", real(result.error_estimate)},
          {"evaluations", result.evaluations},
          {"method", result.method}};
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::string out = "level,value,error_estimate,evaluations\n";
  for (const auto& r : rows) {
    out += fmt::format("{},{},{},{}\n", r.level, format_real(r.value),
                       format_real(r.error_estimate), r.evaluations);
  }
  return out;
}

nlohmann::json density_json(const DensityReport& report) {
  nlohmann::json windows = nlohmann::json::array();
  for (std::size_t i = 0; i < report.checkpoints.size(); ++i) {
    windows.push_back({{"n", report.checkpoints[i]}, {"ratio", real(report.ratios[i])}});
  }
  return {{"horizon", report.horizon},
          {"windows", windows},
          {"lower_density_proxy", real(report.min_ratio)},
          {"upper_density_proxy", real(report.max_ratio)}};
}

ConstantsReport constants_report() {
  ConstantsReport r;
  r.gamma_third = gamma_fn(1.0 / 3.0);
  r.gamma_two_thirds = gamma_fn(2.0 / 3.0);
  const double cube = r.gamma_third * r.gamma_third * r.gamma_third;
  r.goguel_exponent = cube / 6.0;
  r.pair_sumset = pair_sumset_constant(1.0).value;
  r.triple_with_t = sst_bound(1.0);
  const auto opt = optimize_bound();
  r.c_star = opt.c_star;
  r.f_star = opt.f_star;
  return r;
}

std::string constants_text(const ConstantsReport& r) {
  return fmt::format(
      "name,value\n"
      "gamma_one_third,{:.12f}\n"
      "gamma_two_thirds,{:.12f}\n"
      "goguel_exponent,{:.12f}\n"
      "pair_sumset_constant,{:.12f}\n"
      "triple_with_t_constant,{:.12f}\n"
      "c_star,{:.12f}\n"
      "F_star,{:.12f}\n",
      r.gamma_third, r.gamma_two_thirds, r.goguel_exponent, r.pair_sumset, r.triple_with_t,
      r.c_star, r.f_star);
}

nlohmann::json constants_json(const ConstantsReport& r) {
  return {{"schema_version", kSchemaVersion},
          {"kind", "constants"},
          {"gamma_one_third", real(r.gamma_third)},
          {"gamma_two_thirds", real(r.gamma_two_thirds)},
          {"goguel_exponent", real(r.goguel_exponent)},
          {"pair_sumset_constant", real(r.pair_sumset)},
          {"triple_with_t_constant", real(r.triple_with_t)},
          {"c_star", real(r.c_star)},
          {"F_star", real(r.f_star)}};
}

}  // namespace sidon
