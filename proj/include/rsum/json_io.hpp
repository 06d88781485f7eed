#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "rsum/explorer.hpp"
#include "rsum/proof.hpp"

// JSON views of every report type, with stable (insertion-ordered) keys so
// seeded runs serialize byte-identically. Schemas are documented in the
// README. Parsers cover the value types, enough to round-trip reports.

namespace rsum {

using Json = nlohmann::ordered_json;

enum class OutputFormat { json, csv, human };
OutputFormat parse_format(const std::string& s);  // "json" | "csv" | "human"

// Value types.
Json to_json(const ResidueSet& s);                    // sorted array of residues
Json to_json(const Rational& q);                      // "num/den", lowest terms
Json to_json(const CycNum& x);                        // array of p-1 "num/den" strings
Json to_json(const ZpFunction& f);                    // array of p CycNum arrays
Json to_json(const BoundReport& r);                   // keys cd, eh, thm2, pan_sun, clamped

ResidueSet residue_set_from_json(PrimeModulus p, const Json& j);
Rational rational_from_json(const Json& j);
CycNum cycnum_from_json(PrimeModulus p, const Json& j);
ZpFunction zpfunction_from_json(PrimeModulus p, const Json& j);
BoundReport bound_report_from_json(const Json& j);

// Report types.
Json to_json(const TraceReport& r);
Json to_json(const SearchReport& r);  // omits elapsed time (kept out of JSON so seeded runs are byte-identical)
Json scan_to_json(PrimeModulus p, int max_s, const std::vector<ScanCell>& cells);

// CLI set literals: comma-separated canonical residues ("0,1,2"); "" is the
// empty set. Duplicates and out-of-range values are rejected.
ResidueSet parse_set_literal(const std::string& text, PrimeModulus p);
std::string set_literal(const ResidueSet& s);

// Fixed-header CSV views.
std::string bound_report_csv(const BoundReport& r);
std::string search_report_csv(const SearchReport& r);  // one row per extremal witness
std::string scan_csv(PrimeModulus p, const std::vector<ScanCell>& cells);

// Lossy single-purpose text for eyes only.
std::string bound_report_human(const BoundReport& r);
std::string search_report_human(const SearchReport& r);
std::string trace_report_human(const TraceReport& r);

}  // namespace rsum
