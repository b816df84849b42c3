#pragma once

#include <string>

#include "brauer/catalog.hpp"
#include "brauer/chartab.hpp"
#include "brauer/tree.hpp"

namespace brauer {

// Document parsers and canonical serializers.  All emitted documents are
// UTF-8 JSON with sorted keys; arrays keep their stored order.  Malformed
// documents, wrong types, and unknown fields raise FormatError; semantic
// violations surface through the usual validation errors.

BrauerTree parse_tree(const std::string& text);
std::string serialize_tree(const BrauerTree& tree);

struct CatalogDocument {
  BrauerTree tree;
  SelfDualCatalog catalog;
};

std::string serialize_catalog(const BrauerTree& tree,
                              const SelfDualCatalog& cat);
CatalogDocument parse_catalog(const std::string& text);

CharacterTable parse_character_table(const std::string& text);
std::string serialize_character_table(const CharacterTable& t);

}  // namespace brauer
