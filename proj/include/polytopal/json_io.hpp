/*
 * JSON serialization: complexes (explicit as vertex coordinates + face list,
 * products as factor lists), chains, vertex maps, splittings and reports.
 * Rationals are carried as exact "p/q" strings.
 */

#ifndef POLYTOPAL_JSON_IO_HPP
#define POLYTOPAL_JSON_IO_HPP

#include <json.hpp>

#include "polytopal/chains.hpp"
#include "polytopal/complex.hpp"
#include "polytopal/dold.hpp"
#include "polytopal/necklace.hpp"
#include "polytopal/polymap.hpp"

namespace polytopal {

using Json = nlohmann::json;

Json complex_to_json(const Complex& c);
std::shared_ptr<const Complex> complex_from_json(const Json& j);

Json chain_to_json(const Chain& c);
Chain chain_from_json(const Json& j, const Complex& home);

Json map_to_json(const PolytopalMap& m);

Json splitting_to_json(const Splitting& s);
Splitting splitting_from_json(const Json& j, int n, int q);

Json split_report_to_json(const SplitReport& rep, const Necklace& nk, int q);
Json pairing_report_to_json(const PairingReport& rep);

/// Necklace from a CLI argument: either a plain bead string or a JSON
/// object {"beads": ["a", "b", ...]}.
Necklace necklace_from_arg(const std::string& arg);

}  // namespace polytopal

#endif
