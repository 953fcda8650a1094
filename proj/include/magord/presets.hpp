#pragma once

#include <optional>
#include <string>
#include <vector>

#include "magord/tower.hpp"
#include "magord/tower_io.hpp"

namespace magord {

/// A named tower with provenance and, where one exists, a faithful ambient
/// automorphism representation used to certify the action tables.
struct PresetBundle {
  std::string name;
  std::string provenance;
  TowerSpec tower;
  std::optional<Witness> witness;
};

/// P_n = F_{n-1} x| ... x| F_1; factor i is free on A_{q,i+1}, q = 1..i.
/// Action tables follow the Artin conjugation action; the witness is the
/// Artin embedding into Aut(F_n).  Requires n >= 2.
PresetBundle pure_braid(int n);

/// Upper McCool group Cb_n^+; factor i is free on the basis-conjugating
/// automorphisms with first index n-i.  Requires n >= 2.
PresetBundle upper_mccool(int n);

/// Partial inner automorphism group I_n; factor i is the rank-(i+1) group
/// of simultaneous conjugations of x_1..x_{i+1}.  Requires n >= 2.
PresetBundle partial_inner(int n);

/// Pure monomial braid group P(r,n).  n = 1 yields a single infinite cyclic
/// factor for any r; for 2 <= n <= 3 and r <= 3 the action tables are
/// loaded from checked-in data files.  Other parameters are unsupported.
PresetBundle pure_monomial(int r, int n, const std::string& data_dir = "");

/// Data directory for shipped preset files: MAGORD_DATA_DIR if set, else
/// the compiled-in path.
std::string default_data_dir();

struct PresetReport {
  SpecReport spec_report;
  std::vector<std::string> failures;  // relation/witness level findings
  int checks_run = 0;
  bool ok() const { return spec_report.ok() && failures.empty(); }
  std::string str() const;
};

/// Full certification: validate_spec, then the defining relations checked
/// at the endomorphism level (action compatibility across factor triples),
/// then, when a witness exists, every defining relation as an identity of
/// ambient automorphisms.
PresetReport validate_preset(const PresetBundle& b);

/// Parses references like `pure_braid:3` or `pure_monomial:2,2`.
PresetBundle load_preset(const std::string& ref, const std::string& data_dir = "");

std::vector<std::string> preset_names();

/// The preset as a tower-spec file (includes the witness section).
TowerFile to_tower_file(const PresetBundle& b);

}  // namespace magord
