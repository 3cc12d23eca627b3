#ifndef HILBEMB_IO_HPP
#define HILBEMB_IO_HPP

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hilbemb/distraction.hpp"
#include "hilbemb/ideal.hpp"
#include "hilbemb/order.hpp"

namespace hilbemb {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Parse errors carry the source name and line:column.
Json parse_json_text(std::string_view text, const std::string& source);
Json read_json_file(const std::string& path);

// Inputs may carry "schema_version" (must equal kSchemaVersion); any other
// field not listed is rejected.

/// {"vars": [...], "relations": [...], "cap": c, "truncate_above": d0}.
/// "relations" and "truncate_above" are optional. Relations of degree <= 1
/// are rejected.
RingPtr parse_ring(const Json& j);
Json ring_to_json(const QuotientRing& ring);
/// Same variables, minimal generators, cap and truncation.
bool same_ring(const QuotientRing& a, const QuotientRing& b);

/// {"gens": [...]}: the ideal they generate, truncated at the ring's cap.
MonomialIdeal parse_ideal(const Json& j, const RingPtr& ring);
Json ideal_to_json(const MonomialIdeal& ideal);

/// {"degrees": {"0": ["1"], "1": [...], ...}} with every degree 0..cap
/// present; degree 0 may be omitted.
GradedOrder parse_order(const Json& j, const RingPtr& ring);
Json order_to_json(const GradedOrder& order);

/// {"rows": {"z": {"1": "x+z"}}, "N": 2}. Entries are linear-form strings or
/// coefficient maps {"x": 1, "z": "-1/2"}.
DistractionMatrix parse_distraction(const Json& j, const QuotientRing& ring);
Json distraction_to_json(const DistractionMatrix& l, const QuotientRing& ring);

Json series_to_json(const HilbertSeries& h);
HilbertSeries parse_series_json(const Json& j);

/// Integer >= 1 or "inf" (nothing).
std::optional<int> parse_t(std::string_view text);
std::string format_t(std::optional<int> t);

/// FNV-1a of the compact dump, as 16 hex digits.
std::string inputs_digest(const Json& inputs);

} // namespace hilbemb

#endif
