#include "brauer/json_io.hpp"

#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

#include <json.hpp>

namespace brauer {

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& ex) {
    throw FormatError(std::string("invalid JSON: ") + ex.what());
  }
}

bool listed(const std::string& key, std::initializer_list<const char*> names) {
  for (const char* name : names) {
    if (key == name) return true;
  }
  return false;
}

void check_fields(const json& obj, const char* what,
                  std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {}) {
  if (!obj.is_object()) {
    throw FormatError(std::string(what) + " must be a JSON object");
  }
  for (const auto& item : obj.items()) {
    if (!listed(item.key(), required) && !listed(item.key(), optional)) {
      throw FormatError(std::string("unknown field \"") + item.key() +
                        "\" in " + what);
    }
  }
  for (const char* name : required) {
    if (!obj.contains(name)) {
      throw FormatError(std::string(what) + " is missing field \"" + name +
                        "\"");
    }
  }
}

BrauerTree tree_from_json(const json& doc) {
  check_fields(doc, "tree document",
               {"edges", "rotations", "exceptional", "multiplicity",
                "real_stem"},
               {"positive_vertex"});
  BrauerTree tree;
  if (!doc.at("edges").is_array()) {
    throw FormatError("\"edges\" must be an array");
  }
  for (const json& e : doc.at("edges")) {
    check_fields(e, "edge record", {"id", "ends"});
    TreeEdge edge;
    edge.id = e.at("id").get<std::string>();
    const json& ends = e.at("ends");
    if (!ends.is_array() || ends.size() != 2) {
      throw FormatError("edge \"" + edge.id + "\" needs exactly two ends");
    }
    edge.ends = {ends.at(0).get<std::string>(), ends.at(1).get<std::string>()};
    tree.edges.push_back(std::move(edge));
  }
  const json& rotations = doc.at("rotations");
  if (!rotations.is_object()) {
    throw FormatError("\"rotations\" must map vertices to edge lists");
  }
  for (const auto& item : rotations.items()) {
    tree.rotations[item.key()] = item.value().get<std::vector<std::string>>();
  }
  tree.exceptional = doc.at("exceptional").get<std::string>();
  tree.multiplicity = doc.at("multiplicity").get<int>();
  tree.real_stem = doc.at("real_stem").get<std::vector<std::string>>();
  if (doc.contains("positive_vertex")) {
    tree.positive_vertex = doc.at("positive_vertex").get<std::string>();
  }
  return tree;
}

json tree_to_json(const BrauerTree& tree) {
  json edges = json::array();
  for (const TreeEdge& e : tree.edges) {
    edges.push_back({{"id", e.id}, {"ends", {e.ends[0], e.ends[1]}}});
  }
  json rotations = json::object();
  for (const auto& [vertex, rot] : tree.rotations) {
    rotations[vertex] = rot;
  }
  json doc{{"edges", std::move(edges)},
           {"rotations", std::move(rotations)},
           {"exceptional", tree.exceptional},
           {"multiplicity", tree.multiplicity},
           {"real_stem", tree.real_stem}};
  if (tree.positive_vertex) {
    doc["positive_vertex"] = *tree.positive_vertex;
  }
  return doc;
}

json descriptor_to_json(const JanuszDescriptor& d) {
  return {{"edges", d.edges},
          {"dir", {d.dir_first, d.dir_last}},
          {"mu", d.mu}};
}

CatalogFamily family_from_string(const std::string& name) {
  for (CatalogFamily f :
       {CatalogFamily::C, CatalogFamily::DI, CatalogFamily::DII,
        CatalogFamily::DIII, CatalogFamily::DIV}) {
    if (name == to_string(f)) return f;
  }
  throw FormatError("unknown path family \"" + name + "\"");
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

BrauerTree parse_tree(const std::string& text) {
  json doc = parse_document(text);
  try {
    return tree_from_json(doc);
  } catch (const json::exception& ex) {
    throw FormatError(std::string("malformed tree document: ") + ex.what());
  }
}

std::string serialize_tree(const BrauerTree& tree) {
  return dump(tree_to_json(tree));
}

std::string serialize_catalog(const BrauerTree& tree,
                              const SelfDualCatalog& cat) {
  json paths = json::array();
  for (const CatalogEntry& entry : cat.paths) {
    paths.push_back({{"descriptor", descriptor_to_json(entry.descriptor)},
                     {"family", to_string(entry.family)},
                     {"count_index", entry.count_index}});
  }
  json doc{{"tree", tree_to_json(tree)}, {"b", cat.b},
           {"kappa", cat.kappa},        {"irreducibles", cat.irreducibles},
           {"pims", cat.pims},          {"paths", std::move(paths)}};
  return dump(doc);
}

CatalogDocument parse_catalog(const std::string& text) {
  json doc = parse_document(text);
  try {
    check_fields(doc, "catalog document",
                 {"tree", "b", "kappa", "irreducibles", "pims", "paths"});
    CatalogDocument out;
    out.tree = tree_from_json(doc.at("tree"));
    out.catalog.b = doc.at("b").get<int>();
    out.catalog.kappa = doc.at("kappa").get<int>();
    out.catalog.irreducibles =
        doc.at("irreducibles").get<std::vector<std::string>>();
    out.catalog.pims = doc.at("pims").get<std::vector<std::string>>();
    if (!doc.at("paths").is_array()) {
      throw FormatError("\"paths\" must be an array");
    }
    for (const json& p : doc.at("paths")) {
      check_fields(p, "path record", {"descriptor", "family", "count_index"});
      const json& d = p.at("descriptor");
      check_fields(d, "descriptor record", {"edges", "dir", "mu"});
      const json& dir = d.at("dir");
      if (!dir.is_array() || dir.size() != 2) {
        throw FormatError("\"dir\" must hold the two endpoint directions");
      }
      CatalogEntry entry;
      entry.family = family_from_string(p.at("family").get<std::string>());
      entry.count_index = p.at("count_index").get<int>();
      entry.descriptor = make_descriptor(
          out.tree, d.at("edges").get<std::vector<std::string>>(),
          dir.at(0).get<int>(), d.at("mu").get<int>());
      if (entry.descriptor.dir_last != dir.at(1).get<int>()) {
        throw FormatError("descriptor direction pair is inconsistent");
      }
      entry.edge = entry.descriptor.edges.front();
      out.catalog.paths.push_back(std::move(entry));
    }
    return out;
  } catch (const json::exception& ex) {
    throw FormatError(std::string("malformed catalog document: ") + ex.what());
  }
}

CharacterTable parse_character_table(const std::string& text) {
  json doc = parse_document(text);
  CharacterTable table;
  try {
    check_fields(doc, "character table", {"order", "classes", "characters"});
    table.order = doc.at("order").get<long long>();
    if (!doc.at("classes").is_array() || !doc.at("characters").is_array()) {
      throw FormatError("\"classes\" and \"characters\" must be arrays");
    }
    for (const json& c : doc.at("classes")) {
      check_fields(c, "class record", {"name", "size", "square"});
      ConjugacyClass cls;
      cls.name = c.at("name").get<std::string>();
      cls.size = c.at("size").get<long long>();
      cls.square = c.at("square").get<int>();
      table.classes.push_back(std::move(cls));
    }
    for (const json& r : doc.at("characters")) {
      check_fields(r, "character record", {"name", "values"});
      CharacterRow row;
      row.name = r.at("name").get<std::string>();
      if (!r.at("values").is_array()) {
        throw FormatError("character values must be an array");
      }
      for (const json& v : r.at("values")) {
        if (!v.is_array() || v.size() != 2) {
          throw FormatError("each character value is a [re, im] pair");
        }
        row.values.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
      }
      table.characters.push_back(std::move(row));
    }
  } catch (const json::exception& ex) {
    throw FormatError(std::string("malformed character table: ") + ex.what());
  }
  table.validate();
  return table;
}

std::string serialize_character_table(const CharacterTable& t) {
  json classes = json::array();
  for (const ConjugacyClass& c : t.classes) {
    classes.push_back(
        {{"name", c.name}, {"size", c.size}, {"square", c.square}});
  }
  json characters = json::array();
  for (const CharacterRow& row : t.characters) {
    json values = json::array();
    for (const std::complex<double>& v : row.values) {
      values.push_back({v.real(), v.imag()});
    }
    characters.push_back({{"name", row.name}, {"values", std::move(values)}});
  }
  json doc{{"order", t.order},
           {"classes", std::move(classes)},
           {"characters", std::move(characters)}};
  return dump(doc);
}

}  // namespace brauer
