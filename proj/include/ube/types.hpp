#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ube/book.hpp"
#include "ube/graph.hpp"

namespace ube {

// Visibility letter. L: visible from the left page side, R: from the right,
// N: from neither, B: both (spine slot only).
enum class Vis : std::uint8_t { L, R, N, B };
char to_char(Vis v);

struct EmbeddingType {
    Vis s = Vis::N;
    Vis spine = Vis::N;
    Vis t = Vis::N;

    bool operator==(const EmbeddingType&) const = default;
};

inline constexpr int kNumTypes = 18;

bool is_admissible(EmbeddingType t);
// Index in 0..17, or -1 for an inadmissible triple.
int type_index(EmbeddingType t);
const std::array<EmbeddingType, kNumTypes>& all_types();
// Three letters, e.g. "LBR".
std::string to_string(EmbeddingType t);
EmbeddingType parse_type(const std::string& s);

// L <-> R in every slot.
EmbeddingType mirror_horizontal(EmbeddingType t);
// s and t slots exchanged.
EmbeddingType mirror_vertical(EmbeddingType t);

// Set of embedding types as an 18-bit mask.
class TypeSet {
public:
    TypeSet() = default;
    TypeSet(std::initializer_list<EmbeddingType> ts);
    static TypeSet from_mask(std::uint32_t mask) {
        TypeSet s;
        s.mask_ = mask;
        return s;
    }
    static TypeSet all();
    static TypeSet q_node() { return {parse_type("LLL"), parse_type("RRR")}; }

    std::uint32_t mask() const { return mask_; }
    bool empty() const { return mask_ == 0; }
    int size() const;
    bool contains(EmbeddingType t) const;
    void insert(EmbeddingType t);
    std::vector<EmbeddingType> types() const;
    std::vector<std::string> names() const;
    TypeSet mirrored_horizontal() const;
    TypeSet mirrored_vertical() const;

    TypeSet operator|(const TypeSet& o) const { return from_mask(mask_ | o.mask_); }
    TypeSet& operator|=(const TypeSet& o) {
        mask_ |= o.mask_;
        return *this;
    }
    TypeSet operator&(const TypeSet& o) const { return from_mask(mask_ & o.mask_); }
    bool operator==(const TypeSet&) const = default;

private:
    std::uint32_t mask_ = 0;
};

// Letter of the spine interval between order[i] and order[i+1] in a
// 2-page embedding: L if no page-1 arc covers it, R if no page-2 arc does,
// N if both pages cover it.
std::vector<Vis> interval_letters(const Digraph& g, const BookEmbedding& be);
// Type of a valid 2UBE of an st-graph whose source and sink are the first
// and last spine vertices.
EmbeddingType classify_embedding_type(const Digraph& g, const BookEmbedding& be);

// Series composition: the first set belongs to the lower child.
TypeSet s_node_compose(const TypeSet& lower, const TypeSet& upper);

// Parallel composition with the children in the given left-to-right order.
// is_q marks children that are single edges; an empty vector means none.
TypeSet p_node_types_fixed(const std::vector<TypeSet>& children, const std::vector<bool>& is_q = {});
// Parallel composition over all orders of the children.
TypeSet p_node_types_variable(const std::vector<TypeSet>& children, const std::vector<bool>& is_q = {});

// Types reachable by a fixed order, computed directly from the spine-walk
// model by enumerating the walk's extreme and end positions. Reference
// implementation used to cross-check the fold.
TypeSet p_node_types_fixed_enumerated(const std::vector<TypeSet>& children, const std::vector<bool>& is_q = {});

// The types evaluated directly by p_node_types_variable; the others are
// obtained through the horizontal mirror.
const std::vector<EmbeddingType>& relevant_types();

// A P-node pattern: the children, from left to right, fall into groups of
// consecutive children; every child of a group gets the group's type and
// must satisfy its single-edge constraint.
struct PGroup {
    EmbeddingType type;
    bool allow_q = false;
    bool allow_non_q = false;
    bool unbounded = false;  // otherwise exactly one child
};

struct PPattern {
    EmbeddingType result;
    std::vector<PGroup> groups;
};

// All patterns for the relevant result types, derived from the spine-walk
// model by enumerating concrete configurations with up to max_children
// children and compressing runs.
std::vector<PPattern> derive_p_patterns(int max_children);
const std::vector<PPattern>& p_patterns();

}  // namespace ube
