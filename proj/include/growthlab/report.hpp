#pragma once

#include <string>
#include <vector>

#include "growthlab/families.hpp"
#include "growthlab/growth.hpp"
#include "json.hpp"

// JSON and CSV renderings of results. Every number is carried as an exact
// enclosure with a decimal derived from it; keys come out sorted so equal
// inputs give byte-identical output.
namespace growthlab::report {

using Json = nlohmann::json;

Json enclosure(const RootEnclosure& e, unsigned places = 6);
Json sequence(const EnumSequence& s);
Json gap_boundary(const GapBoundary& b, unsigned places = 6);

Json constants(const std::vector<NamedConstant>& cs, unsigned places = 6);
/// The ordering chain phi < kappa < ... < lambda_A by disjoint enclosures.
bool constants_ordered(const std::vector<NamedConstant>& cs);

Json interval(const IntervalReport& r, unsigned places = 6);
Json theorem1(const Theorem1Report& r, unsigned places = 6);
Json theorem2(const Theorem2Report& r, unsigned places = 6);

/// One row per family: name, r, s, k, ell, u, gr_lo, gr_hi, gamma_min, gamma_max, feasible.
std::string interval_csv(const std::vector<IntervalReport>& rows, unsigned places = 6);

/// Two-space indented dump with a trailing newline.
std::string render(const Json& j);

}  // namespace growthlab::report
