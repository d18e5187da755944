#pragma once

#include <string>
#include <vector>

#include "ube/book.hpp"
#include "ube/graph.hpp"

namespace ube {

// One drawn arc: spine positions of its ends (low < high) and the side it
// is drawn on. Page 1 is drawn left, every other page right; pages beyond
// the second are dashed and fan out with wider arcs.
struct ArcLayout {
    int edge = -1;
    int page = 1;
    int low = 0;
    int high = 0;
    bool left = true;
};

std::vector<ArcLayout> arc_layout(const Digraph& g, const BookEmbedding& be);

// Arc diagram with a vertical spine; vertex v sits at height pi(v) from the
// bottom. Throws std::invalid_argument if be is not valid for g.
std::string render_arc_diagram(const Digraph& g, const BookEmbedding& be,
                               const std::vector<std::string>& labels = {});

}  // namespace ube
