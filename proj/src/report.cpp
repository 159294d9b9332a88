#include "growthlab/report.hpp"

#include <sstream>

namespace growthlab::report {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json enclosure(const RootEnclosure& e, unsigned places) {
  return {{"poly", e.poly.to_pretty()},
          {"lo", to_exact_string(e.lo)},
          {"hi", to_exact_string(e.hi)},
          {"bits", e.bits},
          {"decimal", e.decimal(places)},
          {"decimal_certain", e.decimal_certain(places)}};
}

Json sequence(const EnumSequence& s) {
  return {{"text", s.to_string()}, {"preperiod", s.preperiod()}, {"period", s.period()}};
}

Json gap_boundary(const GapBoundary& b, unsigned places) {
  return {{"where", enclosure(b.where, places)},
          {"raw_constraint", b.raw_constraint.to_pretty()},
          {"position", b.position}};
}

bool constants_ordered(const std::vector<NamedConstant>& cs) {
  for (std::size_t i = 0; i + 1 < cs.size(); ++i)
    if (!(cs[i].root.hi < cs[i + 1].root.lo)) return false;
  return true;
}

Json constants(const std::vector<NamedConstant>& cs, unsigned places) {
  Json list = Json::array();
  for (const auto& c : cs) list.push_back({{"name", c.name}, {"enclosure", enclosure(c.root, places)}});
  return {{"constants", list}, {"ordered", constants_ordered(cs)}};
}

Json interval(const IntervalReport& r, unsigned places) {
  Json profiles = Json::array();
  for (const auto& p : r.h_profiles) profiles.push_back(p.to_string());
  Json j{{"name", r.name},
         {"r", r.r},
         {"s", r.s},
         {"k", r.k},
         {"h_profile_count", r.h_profile_count},
         {"h_profiles", profiles},
         {"f_profile_count", r.f_profile_count},
         // The closed form summed from i = 0 and from i = 1; only the first
         // matches the brute-force count.
         {"f_profile_closed_forms",
          {{"from_i0", distinct_profiles_formula(r.r, r.s, 0)}, {"from_i1", distinct_profiles_formula(r.r, r.s, 1)}}},
         {"probe", to_exact_string(r.probe)},
         {"ell", sequence(r.ell_seq)},
         {"u", sequence(r.u_seq)},
         {"gr_lo", enclosure(r.gr_lo, places)},
         {"gr_hi", enclosure(r.gr_hi, places)},
         {"gamma_max", r.gamma_max ? gap_boundary(*r.gamma_max, places) : Json(nullptr)},
         {"gamma_min", r.gamma_min ? gap_boundary(*r.gamma_min, places) : Json(nullptr)},
         {"search_window", {to_exact_string(r.search_lo), to_exact_string(r.search_hi)}},
         {"feasible", r.feasible},
         {"violated_position", r.violated_position ? Json(*r.violated_position) : Json(nullptr)},
         {"extremes_stable", r.extremes_stable},
         {"h_extremes",
          {{"by_value", {r.h_min_value, r.h_max_value}},
           {"lexicographic", {r.h_min_lex, r.h_max_lex}},
           {"orders_agree", r.h_min_value == r.h_min_lex && r.h_max_value == r.h_max_lex}}}};
  return j;
}

Json theorem1(const Theorem1Report& r, unsigned places) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"k", row.k},
                    {"interval", interval(row.interval, places)},
                    {"predicted_eps", to_exact_string(row.predicted_eps)},
                    {"predicted_eps_decimal", to_decimal(row.predicted_eps, places)},
                    {"nonempty", row.nonempty},
                    {"within_predicted", row.within_predicted},
                    {"ok", row.ok}});
  return {{"theta_B", enclosure(r.theta_B, places)}, {"rows", rows}, {"ok", r.ok}};
}

Json theorem2(const Theorem2Report& r, unsigned places) {
  Json fams = Json::array();
  for (const auto& f : r.families) fams.push_back(interval(f, places));
  Json chain = Json::array();
  for (const auto& l : r.chain)
    chain.push_back({{"comparison", l.description},
                     {"margin", to_exact_string(l.margin)},
                     {"margin_decimal", to_decimal(l.margin, places + 3)},
                     {"ok", l.ok}});
  return {{"families", fams},
          {"lambda_B", enclosure(r.lambda_B, places)},
          {"lambda_A", enclosure(r.lambda_A, places)},
          {"chain", chain},
          {"ok", r.ok}};
}

std::string interval_csv(const std::vector<IntervalReport>& rows, unsigned places) {
  std::ostringstream out;
  out << "family,r,s,k,ell,u,gr_lo,gr_hi,gamma_min,gamma_max,feasible\n";
  for (const auto& r : rows) {
    out << csv_field(r.name) << ',' << r.r << ',' << r.s << ',' << r.k << ',' << csv_field(r.ell_seq.to_string())
        << ',' << csv_field(r.u_seq.to_string()) << ',' << r.gr_lo.decimal(places) << ',' << r.gr_hi.decimal(places)
        << ',' << (r.gamma_min ? r.gamma_min->where.decimal(places) : "") << ','
        << (r.gamma_max ? r.gamma_max->where.decimal(places) : "") << ',' << (r.feasible ? "yes" : "no") << '\n';
  }
  return out.str();
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace growthlab::report
