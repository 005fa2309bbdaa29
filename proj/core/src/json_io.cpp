#include "p3/exact/json_io.hpp"

#include <nlohmann/json.hpp>

namespace p3::exact {

using nlohmann::json;

json toJson(const Scalar& s) {
  return json{{"re_num", s.re().get_num().get_str()},
              {"re_den", s.re().get_den().get_str()},
              {"im_num", s.im().get_num().get_str()},
              {"im_den", s.im().get_den().get_str()}};
}

Scalar scalarFromJson(const json& j) {
  return Scalar::fromStrings(j.at("re_num").get<std::string>(),
                             j.at("re_den").get<std::string>(),
                             j.at("im_num").get<std::string>(),
                             j.at("im_den").get<std::string>());
}

json toJson(const Poly& p) {
  json vars = json::array();
  for (int i = 0; i < kNumVars; ++i) vars.push_back(varName(static_cast<Var>(i)));
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    json ex = json::array();
    for (int i = 0; i < kNumVars; ++i) ex.push_back(e[i]);
    json t = toJson(c);
    t["exponents"] = ex;
    terms.push_back(t);
  }
  return json{{"variables", vars}, {"terms", terms}};
}

Poly polyFromJson(const json& j) {
  std::vector<Poly::Term> terms;
  for (const auto& t : j.at("terms")) {
    Expo e{};
    const auto& ex = t.at("exponents");
    for (int i = 0; i < kNumVars && i < static_cast<int>(ex.size()); ++i)
      e[i] = static_cast<int16_t>(ex[i].get<int>());
    terms.push_back({e, scalarFromJson(t)});
  }
  return Poly::fromTerms(std::move(terms));
}

json toJson(const RatFunc& f) {
  return json{{"numerator", toJson(f.num())}, {"denominator", toJson(f.den())}};
}

RatFunc ratFuncFromJson(const json& j) {
  return RatFunc(polyFromJson(j.at("numerator")), polyFromJson(j.at("denominator")));
}

json toJson(const Series& s) {
  json terms = json::array();
  for (const auto& [k, v] : s.coeffs())
    terms.push_back(json{{"power", Power(k, s.stepDen()).str()}, {"coefficient", toJson(v)}});
  return json{{"variable", gradingName(s.grading())},
              {"step", s.step().str()},
              {"truncation", s.truncation().str()},
              {"terms", terms}};
}

namespace {
Power powerFromStr(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Power(std::stol(s), 1);
  return Power(std::stol(s.substr(0, slash)), std::stol(s.substr(slash + 1)));
}
}  // namespace

Series seriesFromJson(const json& j) {
  Grading g = j.at("variable").get<std::string>() == "t" ? Grading::t : Grading::r_inv;
  Power step = powerFromStr(j.at("step").get<std::string>());
  Power trunc = powerFromStr(j.at("truncation").get<std::string>());
  if (step.num != 1) throw std::domain_error("series step must be 1/q");
  long stepDen = step.den;
  long truncIdx = trunc.num * (stepDen / trunc.den);
  Series s(g, stepDen, truncIdx);
  for (const auto& t : j.at("terms")) {
    Power p = powerFromStr(t.at("power").get<std::string>());
    s.setCoeffIdx(p.num * (stepDen / p.den), ratFuncFromJson(t.at("coefficient")));
  }
  return s;
}

}  // namespace p3::exact
