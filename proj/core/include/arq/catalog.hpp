#pragma once

// Named arrangements. Fixed examples are stored as explicit normal lists;
// parametric families are constructed on demand. Names are stable
// identifiers used by the CLI and the test suite.

#include "arq/arrangement.hpp"

#include <string>
#include <vector>

namespace arq {

struct CatalogEntry {
  std::string name;    // identifier as typed on the command line
  std::string params;  // parameter grammar, empty when the entry takes none
  std::string note;    // one-line description
};

// Every recognized name, in display order.
const std::vector<CatalogEntry>& catalog_entries();

// Builds the arrangement named by `spec`, either a bare name ("d4") or a
// name with parameters ("er(-1)", "boolean(3)", "graphic(1-2,2-3,1-3)",
// "ziegler(special)"). Throws std::invalid_argument for unknown names or
// malformed parameters.
Arrangement catalog_get(const std::string& spec);

}  // namespace arq
