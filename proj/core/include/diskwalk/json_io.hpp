#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "diskwalk/coefficient_table.hpp"
#include "diskwalk/dimension_walks.hpp"
#include "diskwalk/families.hpp"
#include "diskwalk/index_set.hpp"
#include "diskwalk/positivity.hpp"

namespace diskwalk {

// Text serialization. Readers throw format_error on malformed input; doubles are written
// in shortest round-trip form so write → read is bit-exact.

/// { "alpha", "entries": [ {m, n, re, im} ... ] } with entries sorted by (m, n), plus an
/// optional "support": { "cones": [ { "base": [m, n], "generators": [[dm, dn], ...] } ] }.
std::string to_json(const CoefficientTable& table);
CoefficientTable table_from_json(std::string_view text);

/// { "constant": re, "table": {...} }; "constant_im" appears only when nonzero.
std::string to_json(const MonteeResult& result);
MonteeResult montee_from_json(std::string_view text);

/// Accepts either a plain table or a serialized MonteeResult (whose table is returned).
CoefficientTable any_table_from_json(std::string_view text);

std::string to_json(const IndexSet& set);
IndexSet index_set_from_json(std::string_view text);

/// { "verdict": "RefutedAt", "modulus", "residue" } and similarly for the other kinds.
std::string to_json(const SpdVerdict& verdict);
SpdVerdict verdict_from_json(std::string_view text);

std::string to_json(const PdReport& report);

/// { "family": name, "q": int, "params": { ... } }. Missing params take their defaults.
std::string to_json(const FamilySpec& spec);
FamilySpec family_from_json(std::string_view text);

}  // namespace diskwalk
