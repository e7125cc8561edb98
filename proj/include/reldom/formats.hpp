#pragma once

#include <map>
#include <string>
#include <vector>

#include "reldom/errors.hpp"
#include "reldom/presentation.hpp"

namespace reldom {

// Parse the line-oriented .alg grammar:
//   # comment
//   field QQ            or   field GF 7
//   vertex 1 2 3 4
//   arrow a: 1 -> 2
//   relation 1*n*a - 1*g*b
// Composition is function-style: in a chain x*y*z the rightmost arrow acts
// first. Coefficients are optional leading numeric factors.
BoundQuiverPresentation parse_algebra_file(const std::string& text,
                                           const std::string& name_hint = "A");

// One module block of a .mod file:
//   module M over sq
//   dim 1 = 2
//   map a = [[1,0],[0,1]]
// Matrices are row-major, dim(target) x dim(source); entries are field
// literals kept as text until a field is chosen.
struct ParsedModule {
    std::string name;
    std::string over;
    std::map<std::string, int> dims;  // vertex label -> dimension (absent = 0)
    std::map<std::string, std::vector<std::vector<std::string>>> maps;  // arrow label -> rows
    int line = 0;
};

std::vector<ParsedModule> parse_module_file(const std::string& text);

std::string read_text_file(const std::string& path);

}  // namespace reldom
