#include "fibquad/serialize.hpp"

#include <stdexcept>

namespace fibquad {

using nlohmann::json;

json to_json(const Int& x) { return x.get_str(); }

json to_json(const Rat& x) { return x.str(); }

json to_json(const Triple& t) {
  const Primitivity p = primitivity(t);
  return {{"leg_a", to_json(t.leg_a())},
          {"leg_b", to_json(t.leg_b())},
          {"hyp", to_json(t.hyp())},
          {"gcd", to_json(p.g)},
          {"primitive", p.is_primitive}};
}

json to_json(const QuadPoly& q) { return {{"a", to_json(q.a())}, {"b", to_json(q.b())}, {"c", to_json(q.c())}}; }

json to_json(const RootPair& r) {
  json j = {{"kind", to_string(r.kind)}};
  if (r.rational()) {
    j["x1"] = to_json(r.x1);
    j["x2"] = to_json(r.x2);
  }
  return j;
}

json to_json(const AnalysisReport& r) {
  json j = {{"poly", to_json(r.poly)},
            {"roots", to_json(r.roots)},
            {"vertex", {{"x", to_json(r.vertex.x)}, {"y", to_json(r.vertex.y)}}},
            {"discriminant", to_json(r.discriminant)}};
  if (r.integral_signed) {
    j["integral_signed"] = to_json(*r.integral_signed);
    j["integral_abs"] = to_json(*r.integral_abs);
    j["breakdown"] = {{"P1", to_json(r.breakdown->p1)}, {"P2", to_json(r.breakdown->p2)}, {"P3", to_json(r.breakdown->p3)}};
  }
  return j;
}

json to_json(const Counterexample& c) { return {{"index", std::to_string(c.index)}, {"detail", c.detail}}; }

json to_json(const VerificationReport& r) {
  json cx = json::array();
  for (const auto& c : r.counterexamples) cx.push_back(to_json(c));
  return {{"claim", r.claim_id},
          {"range", r.range},
          {"status", to_string(r.status)},
          {"counterexamples", std::move(cx)},
          {"elapsed", r.elapsed}};
}

Rat rat_from_json(const json& j) {
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

std::string plain(const Rat& x) { return x.is_integer() ? x.num().get_str() : x.str(); }

std::string family_csv_row(const std::string& n, const AnalysisReport& r) {
  std::string row = n + "," + r.poly.a().get_str() + "," + r.poly.b().get_str() + "," + r.poly.c().get_str() + ",";
  if (r.roots.rational()) row += plain(r.roots.x1) + "," + plain(r.roots.x2);
  else row += ",";
  row += "," + plain(r.vertex.x) + "," + plain(r.vertex.y) + ",";
  if (r.integral_abs) row += plain(*r.integral_abs);
  return row;
}

}  // namespace fibquad
