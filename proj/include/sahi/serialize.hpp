#pragma once

#include <cmath>

#include <json.hpp>

#include "sahi/gammaval.hpp"
#include "sahi/kernel.hpp"
#include "sahi/oracle.hpp"
#include "sahi/positivity.hpp"
#include "sahi/sobolev.hpp"

// JSON payloads round-trip: every to_json here has a matching from_json
// back into the domain type.
namespace sahi {

inline void to_json(nlohmann::json& j, const SignedValue& v) {
  j = nlohmann::json{{"sign", v.sign}, {"log_abs", v.log_mag}};
  if (v.exact)
    j["exact"] = to_string(*v.exact);
  else
    j["exact"] = nullptr;
}

inline void from_json(const nlohmann::json& j, SignedValue& v) {
  v.sign = j.at("sign").get<int>();
  v.log_mag = j.at("log_abs").get<double>();
  if (j.contains("exact") && !j.at("exact").is_null())
    v.exact = parse_rational(j.at("exact").get<std::string>());
  else
    v.exact.reset();
}

inline void to_json(nlohmann::json& j, const TorusValue& v) {
  j = nlohmann::json{{"sign", v.sign()},
                     {"log_abs", v.log_abs()},
                     {"twopi_power", v.twopi_power}};
  if (v.mantissa.exact)
    j["exact"] = nlohmann::json{{"rational", to_string(*v.mantissa.exact)},
                                {"twopi_power", v.twopi_power}};
  else
    j["exact"] = nullptr;
}

inline void from_json(const nlohmann::json& j, TorusValue& v) {
  v.twopi_power = j.at("twopi_power").get<int>();
  v.mantissa.sign = j.at("sign").get<int>();
  v.mantissa.log_mag =
      j.at("log_abs").get<double>() - v.twopi_power * std::log(2 * 3.14159265358979323846);
  if (j.contains("exact") && !j.at("exact").is_null()) {
    v.mantissa.exact =
        parse_rational(j.at("exact").at("rational").get<std::string>());
    if (*v.mantissa.exact != 0) v.mantissa.log_mag = log_abs(*v.mantissa.exact);
  }
}

inline void to_json(nlohmann::json& j, const Verdict& v) {
  j = verdict_name(v);
}

inline void from_json(const nlohmann::json& j, Verdict& v) {
  std::string s = j.get<std::string>();
  if (s == "positive-definite") v = Verdict::PositiveDefinite;
  else if (s == "negative-definite") v = Verdict::NegativeDefinite;
  else if (s == "indefinite") v = Verdict::Indefinite;
  else if (s == "degenerate") v = Verdict::Degenerate;
  else throw std::invalid_argument("bad verdict: " + s);
}

inline void to_json(nlohmann::json& j, const ScanReport& r) {
  j = nlohmann::json{{"verdict", r.verdict},
                     {"box_radius", r.box_radius},
                     {"count", r.count},
                     {"min_witness_radius", r.min_witness_radius}};
  if (r.witness)
    j["witness"] =
        nlohmann::json{{"first", r.witness->first.str()},
                       {"second", r.witness->second.str()}};
  else
    j["witness"] = nullptr;
}

inline void from_json(const nlohmann::json& j, ScanReport& r) {
  j.at("verdict").get_to(r.verdict);
  r.box_radius = j.at("box_radius").get<long>();
  r.count = j.at("count").get<long>();
  r.min_witness_radius = j.at("min_witness_radius").get<long>();
  if (j.contains("witness") && !j.at("witness").is_null()) {
    r.witness = std::make_pair(
        Signature::parse(j.at("witness").at("first").get<std::string>()),
        Signature::parse(j.at("witness").at("second").get<std::string>()));
  } else {
    r.witness.reset();
  }
}

inline void to_json(nlohmann::json& j, const L2Report& r) {
  j = nlohmann::json{{"space", space_name(r.space)},
                     {"n", r.n},
                     {"box", r.box},
                     {"pass", r.pass},
                     {"worst_log_dev", r.worst_log_dev},
                     {"count", r.entries.size()}};
}

inline void from_json(const nlohmann::json& j, L2Report& r) {
  r.space = parse_space(j.at("space").get<std::string>());
  r.n = j.at("n").get<int>();
  r.box = j.at("box").get<long>();
  r.pass = j.at("pass").get<bool>();
  r.worst_log_dev = j.at("worst_log_dev").get<double>();
}

}  // namespace sahi
