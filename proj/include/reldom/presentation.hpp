#pragma once

#include <map>
#include <string>
#include <vector>

#include "reldom/errors.hpp"

namespace reldom {

struct Quiver {
    std::vector<std::string> vertices;
    struct Arrow {
        std::string label;
        int src = 0;
        int tgt = 0;
    };
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& label) const {
        for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
            if (vertices[i] == label) return i;
        return -1;
    }
    int arrow_index(const std::string& label) const {
        for (int i = 0; i < static_cast<int>(arrows.size()); ++i)
            if (arrows[i].label == label) return i;
        return -1;
    }

    Quiver reversed() const {
        Quiver q;
        q.vertices = vertices;
        for (const auto& a : arrows) q.arrows.push_back({a.label, a.tgt, a.src});
        return q;
    }
};

// One summand of a relation: a scalar (kept as text until a field is chosen)
// times a path. Arrows are stored in order of action: arrows[0] acts first,
// so the printed form  a_k * ... * a_1  lists them reversed.
struct PathTerm {
    std::string coeff = "1";
    std::vector<int> arrows;  // indices into Quiver::arrows, first-acting first
};

struct PathExpr {
    std::vector<PathTerm> terms;
};

struct BoundQuiverPresentation {
    std::string name = "A";
    std::string field_spec = "QQ";  // "QQ" or "GF:p"
    Quiver quiver;
    std::vector<PathExpr> relations;
};

}  // namespace reldom
