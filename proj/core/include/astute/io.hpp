#pragma once

// Text, JSON, DOT and CSV renderings of factors.
//
// JSON factors use the versioned schema
//   {"schema":"astute/1","b":..,"n":..,"k":..,"count":..,
//    "cycles":[[["word",phase],...],...], ...}
// with optional extra keys ("rule", "optimal", "nodes_explored").

#include "astute/graph.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace astute {

inline constexpr std::string_view kSchema = "astute/1";

struct FactorDocument {
  Factor factor;
  std::optional<std::string> rule;
  std::optional<bool> optimal;
  std::optional<std::uint64_t> nodes_explored;
};

std::string to_json(const FactorDocument& doc, int indent = -1);
/// Throws ParseError on malformed input or a schema mismatch; the factor is
/// not validated against the graph here.
FactorDocument factor_from_json(std::string_view text);

/// One line per cycle: "word@phase -> word@phase -> ...".
void write_text(std::ostream& out, const Factor& f);

/// Every vertex labelled "word@phase"; factor arcs get color=`factor_color`,
/// the remaining arcs of the graph are drawn light grey.
void write_dot(std::ostream& out, const Factor& f, std::string_view factor_color = "magenta");

/// vertex,orbit,re,im,distinguished for every vertex of every pure cycling
/// register orbit of Gamma(n, k).
void write_spectral_csv(std::ostream& out, const GraphParams& p);

}  // namespace astute
