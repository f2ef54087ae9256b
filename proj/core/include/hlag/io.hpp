#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hlag/hypergraph.hpp"

namespace hlag {

/// Reads the `.hg` text format: first line `r n`, then one edge per line as r
/// strictly increasing labels separated by single spaces. Blank lines and
/// lines starting with `#` are skipped. Errors carry the offending line number.
Hypergraph read_hg(std::istream& in);
Hypergraph parse_hg(const std::string& text);

/// JSON object {"r": .., "n": .., "edges": [[..], ..]}.
Hypergraph parse_hg_json(const std::string& text);

/// Picks JSON when the first non-space character is `{`, `.hg` otherwise.
Hypergraph parse_graph(const std::string& text);

void write_hg(std::ostream& out, const Hypergraph& g);
std::string to_hg(const Hypergraph& g);
std::string to_hg_json(const Hypergraph& g);

/// n whitespace-separated decimals.
std::vector<double> parse_weights(const std::string& text);

/// Shortest round-trip representation with 17 significant digits.
std::string format_real(double v);

}  // namespace hlag
