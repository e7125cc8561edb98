#pragma once

#include <string>
#include <vector>

#include "reldom/presentation.hpp"

namespace fixtures {

using reldom::BoundQuiverPresentation;
using reldom::PathExpr;
using reldom::PathTerm;
using reldom::Quiver;

// one vertex, no arrows
inline BoundQuiverPresentation ss() {
    BoundQuiverPresentation p;
    p.name = "ss";
    p.quiver.vertices = {"1"};
    return p;
}

// 1 --a--> 2
inline BoundQuiverPresentation a2() {
    BoundQuiverPresentation p;
    p.name = "a2";
    p.quiver.vertices = {"1", "2"};
    p.quiver.arrows = {{"a", 0, 1}};
    return p;
}

// 1 --a--> 2 --b--> 3
inline BoundQuiverPresentation a3() {
    BoundQuiverPresentation p;
    p.name = "a3";
    p.quiver.vertices = {"1", "2", "3"};
    p.quiver.arrows = {{"a", 0, 1}, {"b", 1, 2}};
    return p;
}

// commutative square: b:1->2, a:1->3, g:2->4, n:3->4 with n*a = g*b
inline BoundQuiverPresentation sq() {
    BoundQuiverPresentation p;
    p.name = "sq";
    p.quiver.vertices = {"1", "2", "3", "4"};
    p.quiver.arrows = {{"b", 0, 1}, {"a", 0, 2}, {"g", 1, 3}, {"n", 2, 3}};
    PathExpr rel;
    rel.terms.push_back({"1", {1, 3}});   // first a then n
    rel.terms.push_back({"-1", {0, 2}});  // first b then g
    p.relations = {rel};
    return p;
}

// the square with all arrows reversed and vertices relabeled so that the
// projectives at 1,2,3 play the role the injectives played before:
// n:1->2, g:1->3, a:2->4, b:3->4 with a*n = b*g
inline BoundQuiverPresentation sq_op() {
    BoundQuiverPresentation p;
    p.name = "sq_op";
    p.quiver.vertices = {"1", "2", "3", "4"};
    p.quiver.arrows = {{"n", 0, 1}, {"g", 0, 2}, {"a", 1, 3}, {"b", 2, 3}};
    PathExpr rel;
    rel.terms.push_back({"1", {0, 2}});   // first n then a
    rel.terms.push_back({"-1", {1, 3}});  // first g then b
    p.relations = {rel};
    return p;
}

// two loops: a at 1, b at 2, g:1->2 with a^2 = b^2 = 0, g*a = b*g
inline BoundQuiverPresentation loops() {
    BoundQuiverPresentation p;
    p.name = "loops";
    p.quiver.vertices = {"1", "2"};
    p.quiver.arrows = {{"a", 0, 0}, {"b", 1, 1}, {"g", 0, 1}};
    PathExpr r1;
    r1.terms.push_back({"1", {0, 0}});  // a then a
    PathExpr r2;
    r2.terms.push_back({"1", {1, 1}});  // b then b
    PathExpr r3;
    r3.terms.push_back({"1", {0, 2}});   // first a then g
    r3.terms.push_back({"-1", {2, 1}});  // first g then b
    p.relations = {r1, r2, r3};
    return p;
}

// six vertices: b:1->2, a:1->3, g:2->4, n:3->4, t:5->4, e:6->5
// with n*a = g*b and t*e = 0
inline BoundQuiverPresentation six() {
    BoundQuiverPresentation p;
    p.name = "six";
    p.quiver.vertices = {"1", "2", "3", "4", "5", "6"};
    p.quiver.arrows = {{"b", 0, 1}, {"a", 0, 2}, {"g", 1, 3}, {"n", 2, 3}, {"t", 4, 3}, {"e", 5, 4}};
    PathExpr r1;
    r1.terms.push_back({"1", {1, 3}});
    r1.terms.push_back({"-1", {0, 2}});
    PathExpr r2;
    r2.terms.push_back({"1", {5, 4}});  // first e then t
    p.relations = {r1, r2};
    return p;
}

}  // namespace fixtures
