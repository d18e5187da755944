#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "ube/book.hpp"
#include "ube/graph.hpp"

namespace ube {

// `.stg` text: "n m", m lines "tail head", then optionally a ROTATION
// block with one clockwise edge-index list per vertex and an
// "OUTER v0 v1 ..." face walk (face on the right). Lines starting with '#'
// are comments. Without a rotation block a planar embedding with s and t on
// the outer face is computed.
PlaneStGraph read_stg(std::istream& in);
void write_stg(std::ostream& out, const PlaneStGraph& g);
// Plain digraph part only; the rotation block is ignored.
Digraph read_digraph_stg(std::istream& in);
void write_digraph_stg(std::ostream& out, const Digraph& g);

// JSON mirror: {"n", "edges": [[u,v],...], "rotation": [[e,...],...],
// "outer": [v0, v1, ...]}.
nlohmann::json graph_to_json(const PlaneStGraph& g);
PlaneStGraph graph_from_json(const nlohmann::json& j);

// `.ube`: {"k", "pi": [spine order], "sigma": {"edge index": page}}.
nlohmann::json book_to_json(const BookEmbedding& be);
BookEmbedding book_from_json(const nlohmann::json& j, int m);

// Files; format chosen by extension (.json or .stg).
PlaneStGraph load_graph(const std::string& path);
// Edges only; no planarity or st requirements.
Digraph load_digraph(const std::string& path);
void save_graph(const std::string& path, const PlaneStGraph& g);
BookEmbedding load_book(const std::string& path, int m);
void save_book(const std::string& path, const BookEmbedding& be);

// Vertex walk of the outer face with the face on the right.
std::vector<int> outer_walk(const PlaneStGraph& g);
// Planar embedding with s and t on the outer face for an st-digraph.
PlaneStGraph embed_st_digraph(const Digraph& g);

}  // namespace ube
