#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include <json.hpp>

#include "qkgr/giambelli.hpp"
#include "qkgr/qk_element.hpp"
#include "qkgr/verify.hpp"

namespace qkgr {

using Json = nlohmann::ordered_json;

// Checked narrowing; coefficients beyond long long indicate a context far
// outside the supported range and throw internal_error.
long long to_ll(const Int& v);

// Text form: terms ordered by (q-degree, partition), joined with signed
// separators; "q*O[1,1] + q*O[2] - q*O[2,1]", unit coefficients elided,
// q^d O_empty rendered as a bare q power, the unit as "1", zero as "0".
std::string render_text(const QKElement& x);

std::string render_qpoly(const QPoly& p);  // e.g. "14*q^2 + q^3"

// JSON form: array of {"nu": [...], "d": int, "coeff": int} in the same
// order; parse rejects malformed records. Round-trips are lossless.
Json element_to_json(const QKElement& x);
QKElement element_from_json(const GrassCtx& ctx, const Json& j);

// Giambelli polynomial as text, e.g. "O[1]*O[1] + O[2]*O[1] - O[2]".
std::string render_giambelli(GiambelliCache& cache, const Partition& lambda);

Json report_to_json(const Report& r);

using Table = std::map<std::pair<Partition, Partition>, QKElement>;

// Line-delimited JSON table cache with a version-checked header; unknown
// versions are rejected, never migrated.
void write_cache(std::ostream& os, const GrassCtx& ctx, const Table& table);
Table read_cache(std::istream& is, const GrassCtx& ctx);

void write_table_text(std::ostream& os, const Table& table);

} // namespace qkgr
