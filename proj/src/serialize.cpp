#include "spmet/serialize.hpp"

#include "spmet/expr.hpp"

namespace spmet {

Json rational_to_json(const Rational& r) {
  return Json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return rational_from_str(j.get<std::string>());
  Rational r(Int(j.at("num").get<std::string>()),
             Int(j.at("den").get<std::string>()));
  if (r.get_den() <= 0) throw std::invalid_argument("bad rational denominator");
  r.canonicalize();
  return r;
}

std::string format_pbw(const PBWElement& u, const PrimeContext& ctx) {
  const auto basis = sp_basis(ctx);
  std::string out;
  for (const auto& [key, c] : u.terms()) {
    std::string mono;
    for (int p = 0; p < ctx.d; ++p) {
      if (key[p] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += basis[p].str();
      if (key[p] != 1) mono += "^" + std::to_string(key[p]);
    }
    const bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (mono.empty())
      out += rational_str(mag);
    else if (mag == 1)
      out += mono;
    else
      out += rational_str(mag) + "*" + mono;
  }
  return out.empty() ? "0" : out;
}

Json iwasawa_to_json(const IwasawaElement& zeta) {
  Json gens = Json::array();
  for (const SpElement& g : zeta.generators) gens.push_back(format_sp(g));
  Json terms = Json::array();
  for (const auto& [alpha, c] : zeta.terms)
    terms.push_back(Json{{"alpha", alpha}, {"coeff", rational_str(c)}});
  return Json{{"generators", gens}, {"terms", terms}};
}

IwasawaElement iwasawa_from_json(const Json& j, const PrimeContext& ctx) {
  std::vector<SpElement> gens;
  for (const auto& g : j.at("generators"))
    gens.push_back(parse_lie(g.get<std::string>(), ctx));
  IwasawaElement zeta = IwasawaElement::from_generators(std::move(gens));
  for (const auto& t : j.at("terms"))
    zeta.add_term(t.at("alpha").get<std::vector<int>>(),
                  rational_from_json(t.at("coeff")));
  return zeta;
}

Json report_to_json(const std::vector<CheckReport>& checks, bool with_timing) {
  Json arr = Json::array();
  for (const CheckReport& c : checks) {
    Json jc{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}};
    jc["witnesses"] = c.witnesses;
    if (!c.details.empty()) jc["details"] = c.details;
    if (with_timing) jc["seconds"] = c.seconds;
    arr.push_back(std::move(jc));
  }
  return arr;
}

}  // namespace spmet
