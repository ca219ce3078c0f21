#include "maedalab/serialize.hpp"

#include <charconv>
#include <cmath>

#include "maedalab/error.hpp"

namespace maedalab {

std::string format_float(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Json rational_json(const Rational& q) {
  return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Rational rational_from_json(const Json& j) {
  Rational q(BigInt(j.at("num").get<std::string>(), 10), BigInt(j.at("den").get<std::string>(), 10));
  require(q.get_den() != 0, ErrorCode::kParse, "zero denominator");
  q.canonicalize();
  return q;
}

Json interval_json(const RationalInterval& x) {
  return Json{{"lo", rational_json(x.lo)},
              {"hi", rational_json(x.hi)},
              {"lo_float", format_float(to_double(x.lo))},
              {"hi_float", format_float(to_double(x.hi))}};
}

Json to_json(const DCycleCensus& c) {
  Json exactly = Json::array();
  for (const auto& v : c.exactly_j) exactly.push_back(v.get_str());
  return Json{{"n", c.n},
              {"d", c.d},
              {"total", c.total.get_str()},
              {"at_least_one", c.at_least_one.get_str()},
              {"exactly_j", exactly},
              {"plus", c.plus.get_str()},
              {"minus", c.minus.get_str()},
              {"special_b1", c.special_b1.get_str()},
              {"special_b2", c.special_b2.get_str()}};
}

DCycleCensus census_from_json(const Json& j) {
  auto big = [&](const char* key) { return BigInt(j.at(key).get<std::string>(), 10); };
  DCycleCensus c;
  c.n = j.at("n").get<unsigned>();
  c.d = j.at("d").get<unsigned>();
  c.total = big("total");
  c.at_least_one = big("at_least_one");
  for (const auto& v : j.at("exactly_j")) c.exactly_j.emplace_back(v.get<std::string>(), 10);
  c.plus = big("plus");
  c.minus = big("minus");
  c.special_b1 = big("special_b1");
  c.special_b2 = big("special_b2");
  return c;
}

Json to_json(const EffectiveBoundReport& r) {
  return Json{{"d", r.d},
              {"B", r.weight_bound},
              {"weights_used", r.weights_used},
              {"tower_degrees", r.tower.degrees},
              {"lower_bound", rational_json(r.lower_bound)},
              {"lower_bound_float", format_float(to_double(r.lower_bound))},
              {"point_estimate", rational_json(r.point_estimate)},
              {"point_estimate_float", format_float(to_double(r.point_estimate))},
              {"target_group", std::string(to_string(target_group_label(r.d)))}};
}

Json to_json(const GaloisCertificate& c) {
  Json patterns = Json::array();
  for (const auto& p : c.observed_patterns) patterns.push_back(p);
  Json witnesses = Json::object();
  for (const auto& [name, p] : c.witnesses) witnesses[name] = p;
  return Json{{"poly", c.poly.to_string()},
              {"n", c.n},
              {"verdict", std::string(to_string(c.verdict))},
              {"witnesses", witnesses},
              {"observed_patterns", patterns},
              {"primes_examined", c.primes_examined}};
}

Json to_json(const DensityExperiment& e) {
  Json j{{"poly", e.poly.to_string()},
         {"d", e.d},
         {"prime_limit", e.prime_limit},
         {"unramified_count", e.unramified_count},
         {"hit_count", e.hit_count},
         {"ramified_skipped", e.ramified_skipped},
         {"estimate", rational_json(e.estimate)},
         {"estimate_float", format_float(to_double(e.estimate))}};
  if (e.predicted) {
    j["predicted_num"] = e.predicted->get_num().get_str();
    j["predicted_den"] = e.predicted->get_den().get_str();
    j["predicted_float"] = format_float(to_double(*e.predicted));
  } else {
    j["predicted_num"] = nullptr;
    j["predicted_den"] = nullptr;
  }
  j["certificate_verdict"] =
      e.certificate_verdict ? Json(std::string(to_string(*e.certificate_verdict))) : Json(nullptr);
  j["irreducible_witness"] = e.irreducible_witness ? Json(*e.irreducible_witness) : Json(nullptr);
  return j;
}

Json to_json(const HeckeCharPoly& cp) {
  Json coeffs = Json::array();
  for (const auto& c : cp.poly.coeffs()) coeffs.push_back(c.get_str());
  return Json{{"k", cp.k}, {"dk", cp.dk}, {"coeffs", coeffs}};
}

Json to_json(const MaedaEvidence& ev) {
  Json j = to_json(ev.charpoly);
  j["irreducible"] = ev.irreducible;
  j["irreducible_witness"] = ev.irreducible_witness ? Json(*ev.irreducible_witness) : Json(nullptr);
  j["certificate"] = to_json(ev.symmetric_group);
  j["verdict"] = std::string(to_string(ev.verdict));
  return j;
}

}  // namespace maedalab
