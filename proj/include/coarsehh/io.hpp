#pragma once

// JSON space descriptions and built-in named spaces.
//
//   {
//     "points": ["a", "b", ...],
//     "entourage_generators": [["a", "b"], ...],      // labels or indices
//     "bornology_generators": [["a"], ["b", "c"]],    // optional, default singletons
//     "group": {"elements": ["e", "g"], "table": [[0, 1], [1, 0]]},  // optional, default trivial
//     "action": [[0, 1, ...], [1, 0, ...]]             // |G| x |X|; optional for the trivial group
//   }
//
// Unknown fields are rejected. Errors carry a field path ("$.group.table[1]")
// or, for syntax errors, a line and column.

#include "coarsehh/coarse_space.hpp"

#include <json.hpp>
#include <string>

namespace coarsehh {

SpacePtr parse_space(const std::string& json_text);
SpacePtr parse_space(const nlohmann::json& doc);
/// A file path, or a built-in name starting with '@'.
SpacePtr load_space(const std::string& source);

/// @point, @empty, @gcanmin:<G>, @gmodh:<G>/<H>, @minmax:<G>/<H>,
/// @discrete:<n>, @component:<n>, @components:<n1>,<n2>,...
/// Groups: 1, Z<n>, S3. @gmodh is (G/H)_{min,max} ⊗ G_{can,min}.
SpacePtr builtin_space(const std::string& name);

nlohmann::ordered_json space_to_json(const GBornCoarseSpace& x);

}  // namespace coarsehh
