#pragma once

#include <json.hpp>

#include <string>

#include "seqspace/indices.hpp"
#include "seqspace/lattices.hpp"
#include "seqspace/q0.hpp"
#include "seqspace/seq.hpp"
#include "seqspace/spaces.hpp"
#include "seqspace/spectral.hpp"

namespace seqspace {

using Json = nlohmann::ordered_json;

/// Parses JSON text; malformed input raises parse_error.
Json parse_json_text(const std::string& text);

/// {"kind":"lp","p":2}, {"kind":"lpq","p":2,"q":1},
/// {"kind":"lorentz","q":2,"w":{"form":"power","theta":0.25}} or "w":{"form":"array","values":[...]},
/// {"kind":"orlicz","N":{"form":"power","p":3}} or {"form":"power_log","p":2,"a":0.5}.
/// p (and q) may be the string "inf".
SpaceSpec space_from_json(const Json& j);
SpaceSpec space_from_text(const std::string& text);

/// {"kind":"ex","base":{...space...}}, {"kind":"un","N":{...}},
/// {"kind":"wlq","q":2,"mu":{"form":"geometric","ratio":2}} (also "array" with
/// "values", or "lorentz" with "theta": mu from w_k = k^{-theta}).
LatticeSpec lattice_from_json(const Json& j);
LatticeSpec lattice_from_text(const std::string& text);

Seq seq_from_json(const Json& j);
Json to_json(const Seq& x);

/// Finite doubles as numbers, infinities as "inf" / "-inf".
Json number(double v);

Json to_json(const IndexReport& r);
Json to_json(const WitnessReport& r);
Json to_json(const UnWitness& r);
Json to_json(const ScanPoint& r);

}  // namespace seqspace
