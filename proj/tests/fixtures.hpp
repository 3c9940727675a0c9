#pragma once

#include "cotor/algebra.hpp"

namespace cotor::fixtures {

// k(1 -> 2), arrow a with a = e2 a e1 (right-to-left composition).
inline Quiver a2_quiver() {
  Quiver q;
  q.vertices = {"1", "2"};
  q.arrows = {{0, 1, "a"}};
  return q;
}

inline AlgebraPtr a2_path_algebra(Field f) {
  return path_algebra(a2_quiver(), {}, f);
}

// k(1 -> 2 -> 3).
inline AlgebraPtr a3_path_algebra(Field f) {
  Quiver q;
  q.vertices = {"1", "2", "3"};
  q.arrows = {{0, 1, "a"}, {1, 2, "b"}};
  return path_algebra(q, {}, f);
}

// One vertex, no arrows: the ground field.
inline AlgebraPtr field_algebra(Field f) {
  Quiver q;
  q.vertices = {"*"};
  return path_algebra(q, {}, f);
}

// 1 <=> 2 with both composites zero; dim 4.
inline AlgebraPtr two_cycle_algebra(Field f) {
  Quiver q;
  q.vertices = {"1", "2"};
  q.arrows = {{0, 1, "a"}, {1, 0, "b"}};
  Relation ab = {{f.one(), Path{{0, 1}, 0}}};  // a after b
  Relation ba = {{f.one(), Path{{1, 0}, 0}}};  // b after a
  return path_algebra(q, {ab, ba}, f);
}

// Loop x at vertex 1 plus an arrow 1 -> 2, with x^2 = 0 and ax = 0; dim 4.
// The corner at e1 is k[x]/(x^2).
inline AlgebraPtr loop_to_point_algebra(Field f) {
  Quiver q;
  q.vertices = {"1", "2"};
  q.arrows = {{0, 0, "x"}, {0, 1, "a"}};
  Relation xx = {{f.one(), Path{{0, 0}, 0}}};
  Relation ax = {{f.one(), Path{{1, 0}, 0}}};  // a after x
  return path_algebra(q, {xx, ax}, f);
}

}  // namespace cotor::fixtures
