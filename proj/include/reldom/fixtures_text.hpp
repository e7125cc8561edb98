#pragma once

#include <map>
#include <string>

// Embedded copies of the bundled fixture files. A unit test keeps these
// byte-identical with the files under fixtures/.

namespace reldom::fixture_text {

inline const char* const ss_alg = R"FIX(# one vertex, no arrows: the smallest semisimple algebra
field QQ
vertex 1
)FIX";

inline const char* const a2_alg = R"FIX(# the path algebra of 1 --a--> 2
field QQ
vertex 1 2
arrow a: 1 -> 2
)FIX";

inline const char* const a3_alg = R"FIX(# the path algebra of the linear quiver 1 --a--> 2 --b--> 3
field QQ
vertex 1 2 3
arrow a: 1 -> 2
arrow b: 2 -> 3
)FIX";

inline const char* const sq_alg = R"FIX(# commutative square: two paths from 1 to 4 identified
field QQ
vertex 1 2 3 4
arrow b: 1 -> 2
arrow a: 1 -> 3
arrow g: 2 -> 4
arrow n: 3 -> 4
relation 1*n*a - 1*g*b
)FIX";

inline const char* const sq_op_alg = R"FIX(# the square with all arrows reversed, vertices relabeled 1<->4, 2<->3
field QQ
vertex 1 2 3 4
arrow n: 1 -> 2
arrow g: 1 -> 3
arrow a: 2 -> 4
arrow b: 3 -> 4
relation 1*a*n - 1*b*g
)FIX";

inline const char* const loops_alg = R"FIX(# two loops joined by an arrow; a^2 = b^2 = 0 and g*a = b*g
field QQ
vertex 1 2
arrow a: 1 -> 1
arrow b: 2 -> 2
arrow g: 1 -> 2
relation 1*a*a
relation 1*b*b
relation 1*g*a - 1*b*g
)FIX";

inline const char* const six_alg = R"FIX(# the square with a tail 6 --e--> 5 --t--> 4 and t*e = 0
field QQ
vertex 1 2 3 4 5 6
arrow b: 1 -> 2
arrow a: 1 -> 3
arrow g: 2 -> 4
arrow n: 3 -> 4
arrow t: 5 -> 4
arrow e: 6 -> 5
relation 1*n*a - 1*g*b
relation 1*t*e
)FIX";

inline const char* const sq_mod = R"FIX(# Q = I2 + I3 + I4, written out explicitly (one block per arrow)
module Q over sq
dim 1 = 3
dim 2 = 2
dim 3 = 2
dim 4 = 1
map b = [[1,0,0],[0,0,1]]
map a = [[0,1,0],[0,0,1]]
map g = [[0,1]]
map n = [[0,1]]
)FIX";

inline std::map<std::string, std::string> algebra_files() {
    return {
        {"ss", ss_alg},
        {"a2", a2_alg},
        {"a3", a3_alg},
        {"sq", sq_alg},
        {"sq_op", sq_op_alg},
        {"loops", loops_alg},
        {"six", six_alg},
    };
}

}  // namespace reldom::fixture_text
