#pragma once

// JSON and CSV renderings. Every integer and rational is emitted as a decimal
// string (rationals as "num/den") so consumers never overflow 64 bits.

#include <string>
#include <vector>

#include <json.hpp>

#include "fibquad/numeric.hpp"
#include "fibquad/quadratic.hpp"
#include "fibquad/report.hpp"
#include "fibquad/triples.hpp"

namespace fibquad {

nlohmann::json to_json(const Int& x);
nlohmann::json to_json(const Rat& x);
nlohmann::json to_json(const Triple& t);
nlohmann::json to_json(const QuadPoly& q);
nlohmann::json to_json(const RootPair& r);
nlohmann::json to_json(const AnalysisReport& r);
nlohmann::json to_json(const Counterexample& c);
nlohmann::json to_json(const VerificationReport& r);

/// Inverse of to_json(Rat); accepts "n/d" or a bare integer "n".
Rat rat_from_json(const nlohmann::json& j);

// Family-table CSV: n,a,b,c,x1,x2,vx,vy,integral_abs
inline constexpr const char* kFamilyCsvHeader = "n,a,b,c,x1,x2,vx,vy,integral_abs";

/// One row; `n` is written verbatim (may be empty). Rationals with den 1
/// print as plain integers, others as num/den.
std::string family_csv_row(const std::string& n, const AnalysisReport& r);

/// Integer when den == 1, "num/den" otherwise.
std::string plain(const Rat& x);

}  // namespace fibquad
