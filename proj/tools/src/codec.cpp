#include "codec.hpp"

#include <cmath>

#include "monadica/error.hpp"
#include "monadica/sequence.hpp"

namespace monadica::cli {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

double as_number(const json& j, const char* what) {
  if (!j.is_number()) bad(std::string(what) + " must be a number");
  return j.get<double>();
}

double endpoint(const json& j, const char* what) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "-inf") return -sets::kInf;
    if (s == "+inf" || s == "inf") return sets::kInf;
    bad(std::string(what) + ": expected a number, \"-inf\" or \"+inf\"");
  }
  const double v = as_number(j, what);
  if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteInput, "non-finite endpoint");
  return v;
}

json endpoint_json(double v) {
  if (v == -sets::kInf) return "-inf";
  if (v == sets::kInf) return "+inf";
  return number(v);
}

std::vector<double> number_list(const json& j, const char* what) {
  std::vector<double> out;
  if (j.is_null()) return out;
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  for (const auto& v : j) {
    const double d = as_number(v, what);
    if (!std::isfinite(d)) throw Error(ErrorCode::NonFiniteInput, "non-finite point");
    out.push_back(d);
  }
  return out;
}

json set_body(const sets::RealSet& s) {
  json intervals = json::array();
  json points = json::array();
  for (const auto& iv : s.intervals()) {
    intervals.push_back({{"lo", endpoint_json(iv.lo)},
                         {"hi", endpoint_json(iv.hi)},
                         {"lo_closed", iv.lo_closed},
                         {"hi_closed", iv.hi_closed}});
  }
  for (double p : s.points()) points.push_back(number(p));
  return {{"intervals", intervals}, {"points", points}};
}

}  // namespace

json number(double v) {
  if (v == std::trunc(v) && std::abs(v) < 9007199254740992.0) {
    return static_cast<std::int64_t>(v);
  }
  return v;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

json encode(const GeneralizedReal& x) {
  json d = json::object();
  for (const auto& [id, v] : x.coefficients()) d[id.str()] = number(v);
  return {{"shadow", number(x.shadow())}, {"d", d}};
}

GeneralizedReal decode_value(const json& j) {
  if (j.is_number()) return GeneralizedReal(j.get<double>());
  if (!j.is_object()) bad("a value must be a number or an object with \"shadow\" and \"d\"");
  for (const auto& [key, v] : j.items()) {
    if (key != "shadow" && key != "d") bad("unexpected key \"" + key + "\" in value");
  }
  if (!j.contains("shadow")) bad("value lacks \"shadow\"");
  const double shadow = as_number(j.at("shadow"), "shadow");
  GeneralizedReal::Coefficients c;
  if (j.contains("d")) {
    const json& d = j.at("d");
    if (!d.is_object()) bad("\"d\" must be an object");
    const auto& catalog = seq::Catalog::standard();
    for (const auto& [key, v] : d.items()) {
      GeneratorId id(key);
      if (!catalog.contains(id)) throw Error(ErrorCode::UnknownGenerator, "unknown generator '" + key + "'");
      c.emplace_back(std::move(id), as_number(v, "coefficient"));
    }
  }
  return GeneralizedReal::make(shadow, std::move(c));
}

json encode(const sets::RealSet& s) { return set_body(s); }

json encode(const sets::GeneralizedSet& g) {
  json out = set_body(g.base());
  json extras = json::array();
  for (double e : g.extras()) extras.push_back(number(e));
  out["extras"] = extras;
  return out;
}

sets::GeneralizedSet decode_set(const json& j) {
  if (!j.is_object()) bad("a set must be an object");
  for (const auto& [key, v] : j.items()) {
    if (key != "intervals" && key != "points" && key != "extras") bad("unexpected key \"" + key + "\" in set");
  }
  std::vector<sets::Interval> pieces;
  if (j.contains("intervals")) {
    const json& list = j.at("intervals");
    if (!list.is_array()) bad("\"intervals\" must be an array");
    for (const auto& iv : list) {
      if (!iv.is_object() || !iv.contains("lo") || !iv.contains("hi")) bad("an interval needs \"lo\" and \"hi\"");
      sets::Interval p;
      p.lo = endpoint(iv.at("lo"), "lo");
      p.hi = endpoint(iv.at("hi"), "hi");
      p.lo_closed = iv.value("lo_closed", std::isfinite(p.lo));
      p.hi_closed = iv.value("hi_closed", std::isfinite(p.hi));
      if (p.lo > p.hi) throw Error(ErrorCode::DomainError, "interval with lo > hi");
      if (!std::isfinite(p.lo)) p.lo_closed = false;
      if (!std::isfinite(p.hi)) p.hi_closed = false;
      pieces.push_back(p);
    }
  }
  for (double p : number_list(j.value("points", json()), "points")) pieces.push_back(sets::Interval::point(p));
  return sets::GeneralizedSet(sets::RealSet(std::move(pieces)), number_list(j.value("extras", json()), "extras"));
}

json encode(const calc::TaylorResult& t) {
  return {{"partial_sum", t.partial_sum},
          {"remainder_bound", t.remainder_bound},
          {"theta", t.theta ? json(*t.theta) : json()},
          {"function_value", t.function_value}};
}

json encode(const calc::OdeReport& r) {
  json regions = json::array();
  for (const auto& reg : r.regions) {
    regions.push_back({{"region", reg.region}, {"status", reg.pass ? "pass" : "fail"}, {"detail", reg.detail}});
  }
  return {{"regions", regions}, {"status", r.all_pass() ? "pass" : "fail"}};
}

json encode(const verify::SuiteReport& r) {
  json props = json::array();
  std::size_t failed = 0;
  for (const auto& p : r.results) {
    failed += p.pass ? 0 : 1;
    props.push_back({{"property", p.property},
                     {"status", p.pass ? "pass" : "fail"},
                     {"cases", p.cases},
                     {"detail", p.detail}});
  }
  return {{"suite", r.suite},
          {"seed", r.seed},
          {"status", failed == 0 ? "pass" : "fail"},
          {"passed", r.results.size() - failed},
          {"failed", failed},
          {"properties", props}};
}

}  // namespace monadica::cli
