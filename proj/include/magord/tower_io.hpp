#pragma once

#include <map>
#include <optional>
#include <string>

#include "magord/tower.hpp"

namespace magord {

/// Faithful ambient representation: one automorphism of F_{ambient_rank}
/// (with its inverse) per tower generator, keyed by (factor, generator).
struct WitnessEntry {
  EndoTable table;
  EndoTable inverse;

  friend bool operator==(const WitnessEntry&, const WitnessEntry&) = default;
};

struct Witness {
  int ambient_rank = 1;
  std::map<std::pair<int, int>, WitnessEntry> tables;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// A tower-spec file: the spec plus optional name/provenance/witness.
struct TowerFile {
  TowerSpec spec;
  std::string name;
  std::string provenance;
  std::optional<Witness> witness;
};

/// Parses the JSON tower-spec format.  Malformed input throws ParseError
/// with the byte offset; schema violations name the offending path.
TowerFile parse_tower_file(const std::string& json_text);
TowerFile load_tower_file(const std::string& path);

std::string write_tower_file(const TowerFile& file);

}  // namespace magord
