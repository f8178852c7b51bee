#include "seqspace/json_io.hpp"

#include <cmath>

#include "seqspace/error.hpp"

namespace seqspace {

namespace {

const Json& field(const Json& j, const char* key, const char* what) {
  require(j.is_object(), ErrorCode::parse_error, std::string(what) + " must be a JSON object");
  auto it = j.find(key);
  require(it != j.end(), ErrorCode::parse_error, std::string(what) + ": missing field '" + key + "'");
  return *it;
}

double real(const Json& j, const char* key, const char* what, bool allow_inf = false) {
  const Json& v = field(j, key, what);
  if (v.is_string() && allow_inf && (v == "inf" || v == "Infinity")) return kInf;
  require(v.is_number(), ErrorCode::parse_error, std::string(what) + ": field '" + key + "' must be a number");
  return v.get<double>();
}

std::string kind_of(const Json& j, const char* key, const char* what) {
  const Json& v = field(j, key, what);
  require(v.is_string(), ErrorCode::parse_error, std::string(what) + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<double> reals(const Json& j, const char* what) {
  require(j.is_array(), ErrorCode::parse_error, std::string(what) + " must be an array of numbers");
  std::vector<double> v;
  for (const auto& e : j) {
    require(e.is_number(), ErrorCode::parse_error, std::string(what) + " must be an array of numbers");
    v.push_back(e.get<double>());
  }
  return v;
}

OrliczFn orlicz_from_json(const Json& j) {
  const auto form = kind_of(j, "form", "Orlicz function");
  if (form == "power") return OrliczFn::power(real(j, "p", "Orlicz function"));
  if (form == "power_log") return OrliczFn::power_log(real(j, "p", "Orlicz function"), real(j, "a", "Orlicz function"));
  fail(ErrorCode::unknown_kind, "unknown Orlicz function form '" + form + "'");
}

WeightSeq weight_from_json(const Json& j) {
  const auto form = kind_of(j, "form", "weight");
  if (form == "power") return WeightSeq::power(real(j, "theta", "weight"));
  if (form == "array") return WeightSeq::array(reals(field(j, "values", "weight"), "weight values"));
  fail(ErrorCode::unknown_kind, "unknown weight form '" + form + "'");
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::parse_error, std::string("malformed JSON: ") + e.what());
  }
}

SpaceSpec space_from_json(const Json& j) {
  const auto kind = kind_of(j, "kind", "space");
  if (kind == "lp") return SpaceSpec::lp(real(j, "p", "space", true));
  if (kind == "lpq") return SpaceSpec::lpq(real(j, "p", "space", true), real(j, "q", "space", true));
  if (kind == "lorentz") return SpaceSpec::lorentz(real(j, "q", "space"), weight_from_json(field(j, "w", "space")));
  if (kind == "orlicz") return SpaceSpec::orlicz(orlicz_from_json(field(j, "N", "space")));
  fail(ErrorCode::unknown_kind, "unknown space kind '" + kind + "'");
}

SpaceSpec space_from_text(const std::string& text) { return space_from_json(parse_json_text(text)); }

LatticeSpec lattice_from_json(const Json& j) {
  const auto kind = kind_of(j, "kind", "lattice");
  if (kind == "ex") return LatticeSpec::ex(space_from_json(field(j, "base", "lattice")));
  if (kind == "un") return LatticeSpec::un(orlicz_from_json(field(j, "N", "lattice")));
  if (kind == "wlq") {
    const double q = real(j, "q", "lattice");
    const Json& mu = field(j, "mu", "lattice");
    const auto form = kind_of(mu, "form", "mu");
    if (form == "geometric") return LatticeSpec::wlq(q, MuSeq::geometric(real(mu, "ratio", "mu")));
    if (form == "array") return LatticeSpec::wlq(q, MuSeq::array(reals(field(mu, "values", "mu"), "mu values")));
    if (form == "lorentz") return LatticeSpec::wlq(q, MuSeq::from_lorentz(q, WeightSeq::power(real(mu, "theta", "mu"))));
    fail(ErrorCode::unknown_kind, "unknown mu form '" + form + "'");
  }
  fail(ErrorCode::unknown_kind, "unknown lattice kind '" + kind + "'");
}

LatticeSpec lattice_from_text(const std::string& text) { return lattice_from_json(parse_json_text(text)); }

Seq seq_from_json(const Json& j) { return Seq(reals(j, "sequence")); }

Json to_json(const Seq& x) {
  Json a = Json::array();
  for (double v : x.coeffs()) a.push_back(number(v));
  return a;
}

Json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

Json to_json(const IndexReport& r) {
  auto tag = [&](const std::string& key) {
    auto it = r.method.find(key);
    return it == r.method.end() ? std::string("unknown") : it->second;
  };
  Json j;
  j["space"] = r.space;
  j["alpha"] = {{"lo", number(r.alpha.lo)}, {"hi", number(r.alpha.hi)}, {"point", number(r.alpha_point)},
                {"method", tag("alpha")}};
  j["beta"] = {{"lo", number(r.beta.lo)}, {"hi", number(r.beta.hi)}, {"point", number(r.beta_point)},
               {"method", tag("beta")}};
  j["mu"] = {{"value", number(r.mu)}, {"method", tag("mu")}};
  j["nu"] = {{"value", number(r.nu)}, {"method", tag("nu")}};
  j["f_interval"] = {{"lo", number(r.f_interval.first)}, {"hi", number(r.f_interval.second)}, {"method", tag("f_interval")}};
  j["params"] = {{"n_max", r.params.n_max},
                 {"j_max", r.params.j_max},
                 {"orlicz_n_max", r.params.orlicz_n_max},
                 {"orlicz_k_max", r.params.orlicz_k_max},
                 {"seed", r.params.seed}};
  j["notes"] = r.notes;
  return j;
}

Json to_json(const WitnessReport& r) {
  Json j;
  j["kind"] = "vn";
  j["lambda"] = number(r.lambda);
  j["n"] = r.n;
  j["residual"] = {{"value", number(r.residual)}, {"method", "direct_eval"}};
  j["residual_raw"] = {{"value", number(r.residual_raw)}, {"method", "direct_eval"}};
  if (r.predicted) j["predicted"] = {{"value", number(*r.predicted)}, {"method", "closed_form"}};
  j["vector"] = {{"support_size", number(static_cast<double>(r.support_size))}, {"norm", number(r.norm)},
                 {"representation", r.method}};
  return j;
}

Json to_json(const UnWitness& r) {
  Json j;
  j["kind"] = "un";
  j["p"] = number(r.p);
  j["n"] = r.n;
  j["norm"] = {{"value", number(r.norm)}, {"method", "direct_eval"}};
  j["d2_residual"] = {{"value", number(r.d2_residual)}, {"method", "direct_eval"}};
  j["d3_residual"] = {{"value", number(r.d3_residual)}, {"method", "direct_eval"}};
  j["d2_predicted"] = {{"value", number(r.d2_predicted)}, {"method", "closed_form"}};
  j["d3_predicted"] = {{"value", number(r.d3_predicted)}, {"method", "closed_form"}};
  j["d3_telescoped"] = {{"value", number(r.d3_telescoped)}, {"method", "closed_form"}};
  j["explicit_check"] = r.explicit_check;
  if (r.explicit_check) j["explicit_max_deviation"] = number(r.explicit_max_deviation);
  return j;
}

Json to_json(const ScanPoint& r) {
  Json j;
  j["lambda"] = number(r.lambda);
  j["residual_estimate"] = {{"value", number(r.estimate)}, {"method", "heuristic"}, {"source", r.method}};
  if (r.witness >= 0.0) j["vn_witness"] = number(r.witness);
  j["levels"] = r.levels;
  return j;
}

}  // namespace seqspace
