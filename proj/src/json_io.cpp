#include "cmseq/json_io.hpp"

namespace cmseq {

Json scalar_to_json(const Scalar& s) {
  if (s.is_exact()) return s.str();
  return s.to_double();
}

Scalar scalar_from_json(const Json& j, ScalarKind mode) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>(), mode);
  if (j.is_number_integer()) return Scalar(j.get<long long>());
  if (j.is_number_float()) return Scalar::from_double(j.get<double>());
  throw std::invalid_argument("scalar_from_json: expected number or string");
}

Json sequence_to_json(const Sequence& c) {
  Json terms = Json::array();
  for (const auto& t : c) terms.push_back(scalar_to_json(t));
  return Json{{"kind", c.is_exact() ? "exact" : "float"}, {"terms", std::move(terms)}};
}

Sequence sequence_from_json(const Json& j) {
  ScalarKind mode =
      j.at("kind").get<std::string>() == "exact" ? ScalarKind::exact : ScalarKind::floating;
  std::vector<Scalar> terms;
  for (const auto& t : j.at("terms")) terms.push_back(scalar_from_json(t, mode));
  return Sequence(std::move(terms));
}

Json report_to_json(const MonotonicityReport& rep) {
  Json j{{"verdict", rep.verified ? "verified-to-order" : "violated"},
         {"max_order", rep.max_order}};
  if (rep.witness)
    j["witness"] = Json{{"j", rep.witness->j},
                        {"k", rep.witness->k},
                        {"value", scalar_to_json(rep.witness->value)}};
  return j;
}

MonotonicityReport report_from_json(const Json& j) {
  MonotonicityReport rep;
  rep.verified = j.at("verdict").get<std::string>() == "verified-to-order";
  rep.max_order = j.at("max_order").get<int>();
  if (j.contains("witness")) {
    const auto& w = j.at("witness");
    Scalar v = w.at("value").is_string()
                   ? Scalar::parse(w.at("value").get<std::string>())
                   : Scalar::from_double(w.at("value").get<double>());
    rep.witness = Witness{w.at("j").get<int>(), w.at("k").get<int>(), v};
  }
  return rep;
}

Json pick_report_to_json(const PickScanReport& rep) {
  Json violations = Json::array();
  for (const auto& v : rep.violations)
    violations.push_back(Json{{"z", {v.z.real(), v.z.imag()}},
                              {"value", {v.value.real(), v.value.imag()}}});
  return Json{{"rect", {rep.rect.re0, rep.rect.re1, rep.rect.im0, rep.rect.im1}},
              {"nx", rep.nx},
              {"ny", rep.ny},
              {"min_im_value", rep.min_im_value},
              {"samples_checked", rep.samples_checked},
              {"eval_failures", rep.eval_failures},
              {"violations", std::move(violations)}};
}

Json estimate_to_json(const DistributionEstimate& est) {
  Json j{{"order", est.order},
         {"grid", est.grid},
         {"cdf", est.cdf},
         {"dilated_check_passed", est.dilated_check_passed}};
  if (est.dilated_witness)
    j["dilated_witness"] = Json{{"j", est.dilated_witness->j},
                                {"k", est.dilated_witness->k},
                                {"value", scalar_to_json(est.dilated_witness->value)}};
  return j;
}

Json spectra_to_json(const SpectraConfig& cfg, const std::vector<MomentEstimate>& moments) {
  Json ms = Json::array();
  for (const auto& m : moments)
    ms.push_back(Json{{"n", m.n}, {"mean", m.mean}, {"stderr", m.stderr_}, {"target", m.target}});
  return Json{{"m", cfg.m},
              {"N", cfg.size},
              {"trials", cfg.trials},
              {"seed", cfg.seed},
              {"moments", std::move(ms)}};
}

std::vector<MomentEstimate> spectra_moments_from_json(const Json& j) {
  std::vector<MomentEstimate> out;
  for (const auto& m : j.at("moments"))
    out.push_back({m.at("n").get<int>(), m.at("mean").get<double>(),
                   m.at("stderr").get<double>(), m.at("target").get<double>()});
  return out;
}

}  // namespace cmseq
