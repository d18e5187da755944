#pragma once

#include <array>

#include "ube/book.hpp"
#include "ube/graph.hpp"

namespace ube {

struct ConstructionStats {
    int faces = 0;
    std::array<int, 5> cases{};  // faces handled by case 1..4 (index 0 unused)
    int invariant_checks = 0;
};

// Embedding-preserving HP-completion of a graph whose internal faces have at
// least two edges on the left path and three on the right path. Faces are
// added left to right in the least topological order of the dual; after
// each face, of any two consecutive right-boundary edges at least one lies
// on the Hamiltonian path (checked, std::logic_error otherwise).
HpCompletion hp_complete_long_right(const PlaneStGraph& g, ConstructionStats* stats = nullptr);

// Same for graphs whose internal faces are all rhombi; one dummy edge per
// face.
HpCompletion hp_complete_rhombi(const PlaneStGraph& g, ConstructionStats* stats = nullptr);

}  // namespace ube
