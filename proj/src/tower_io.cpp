#include "magord/tower_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "magord/parse.hpp"

namespace magord {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw ParseError("tower spec: " + path + ": " + what, 1);
}

int get_int(const json& j, const std::string& path, const std::string& key) {
  if (!j.contains(key)) schema_error(path, "missing \"" + key + "\"");
  if (!j[key].is_number_integer()) schema_error(path + "." + key, "expected an integer");
  return j[key].get<int>();
}

std::vector<Word> parse_table(const json& j, const std::string& path, int rank) {
  if (!j.is_array()) schema_error(path, "expected an array of words");
  if (j.size() != static_cast<size_t>(rank))
    schema_error(path, "expected " + std::to_string(rank) +
                           " image words, got " + std::to_string(j.size()));
  std::vector<Word> out;
  out.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_string()) schema_error(p, "expected a word string");
    try {
      out.push_back(parse_word(j[i].get<std::string>(), rank));
    } catch (const ParseError& e) {
      schema_error(p, e.what());
    }
  }
  return out;
}

}  // namespace

TowerFile parse_tower_file(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("tower spec: ") + e.what(),
                     static_cast<int>(e.byte));
  }
  if (!j.is_object()) schema_error("$", "expected a JSON object");
  if (!j.contains("factors") || !j["factors"].is_array() || j["factors"].empty())
    schema_error("factors", "expected a non-empty array");

  std::vector<Factor> factors;
  for (size_t i = 0; i < j["factors"].size(); ++i) {
    const std::string path = "factors[" + std::to_string(i) + "]";
    const json& jf = j["factors"][i];
    if (!jf.is_object()) schema_error(path, "expected an object");
    Factor f;
    f.rank = get_int(jf, path, "rank");
    if (f.rank < 1) schema_error(path + ".rank", "must be positive");
    std::string kind = jf.value("kind", "free");
    if (kind == "free")
      f.kind = FactorKind::Free;
    else if (kind == "reduced")
      f.kind = FactorKind::Reduced;
    else
      schema_error(path + ".kind", "expected \"free\" or \"reduced\"");
    factors.push_back(f);
  }

  std::map<ActionKey, ActionPair> actions;
  if (j.contains("actions")) {
    if (!j["actions"].is_array()) schema_error("actions", "expected an array");
    for (size_t i = 0; i < j["actions"].size(); ++i) {
      const std::string path = "actions[" + std::to_string(i) + "]";
      const json& ja = j["actions"][i];
      if (!ja.is_object()) schema_error(path, "expected an object");
      ActionKey key;
      key.source_factor = get_int(ja, path, "source_factor");
      key.source_gen = get_int(ja, path, "source_generator");
      key.target_factor = get_int(ja, path, "target_factor");
      if (key.target_factor < 1 ||
          key.target_factor > static_cast<int>(factors.size()))
        schema_error(path + ".target_factor", "out of range");
      int rank = factors[static_cast<size_t>(key.target_factor - 1)].rank;
      if (!ja.contains("table")) schema_error(path, "missing \"table\"");
      if (!ja.contains("inverse_table"))
        schema_error(path, "missing \"inverse_table\"");
      ActionPair pair{EndoTable(rank, parse_table(ja["table"], path + ".table", rank)),
                      EndoTable(rank, parse_table(ja["inverse_table"],
                                                  path + ".inverse_table", rank))};
      if (!actions.emplace(key, std::move(pair)).second)
        schema_error(path, "duplicate action entry");
    }
  }

  TowerFile file{TowerSpec(std::move(factors), std::move(actions)),
                 j.value("name", ""), j.value("provenance", ""), std::nullopt};

  if (j.contains("witness")) {
    const json& jw = j["witness"];
    if (!jw.is_object()) schema_error("witness", "expected an object");
    Witness w;
    w.ambient_rank = get_int(jw, "witness", "ambient_rank");
    if (!jw.contains("tables") || !jw["tables"].is_array())
      schema_error("witness.tables", "expected an array");
    for (size_t i = 0; i < jw["tables"].size(); ++i) {
      const std::string path = "witness.tables[" + std::to_string(i) + "]";
      const json& jt = jw["tables"][i];
      int f = get_int(jt, path, "factor");
      int g = get_int(jt, path, "generator");
      if (!jt.contains("images")) schema_error(path, "missing \"images\"");
      if (!jt.contains("inverse_images"))
        schema_error(path, "missing \"inverse_images\"");
      WitnessEntry entry{
          EndoTable(w.ambient_rank,
                    parse_table(jt["images"], path + ".images", w.ambient_rank)),
          EndoTable(w.ambient_rank,
                    parse_table(jt["inverse_images"], path + ".inverse_images",
                                w.ambient_rank))};
      w.tables.emplace(std::make_pair(f, g), std::move(entry));
    }
    file.witness = std::move(w);
  }
  return file;
}

TowerFile load_tower_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open tower spec file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tower_file(buf.str());
}

std::string write_tower_file(const TowerFile& file) {
  json j;
  if (!file.name.empty()) j["name"] = file.name;
  if (!file.provenance.empty()) j["provenance"] = file.provenance;
  j["factors"] = json::array();
  for (const auto& f : file.spec.factors())
    j["factors"].push_back(
        {{"rank", f.rank},
         {"kind", f.kind == FactorKind::Free ? "free" : "reduced"}});
  j["actions"] = json::array();
  for (const auto& [k, pair] : file.spec.actions()) {
    json ja{{"source_factor", k.source_factor},
            {"source_generator", k.source_gen},
            {"target_factor", k.target_factor}};
    for (const auto& w : pair.table.images())
      ja["table"].push_back(to_string(w));
    for (const auto& w : pair.inverse.images())
      ja["inverse_table"].push_back(to_string(w));
    j["actions"].push_back(std::move(ja));
  }
  if (file.witness) {
    json jw{{"ambient_rank", file.witness->ambient_rank}};
    jw["tables"] = json::array();
    for (const auto& [key, entry] : file.witness->tables) {
      json jt{{"factor", key.first}, {"generator", key.second}};
      for (const auto& w : entry.table.images())
        jt["images"].push_back(to_string(w));
      for (const auto& w : entry.inverse.images())
        jt["inverse_images"].push_back(to_string(w));
      jw["tables"].push_back(std::move(jt));
    }
    j["witness"] = std::move(jw);
  }
  return j.dump(1) + "\n";
}

}  // namespace magord
