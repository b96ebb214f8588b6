// Generated by tools/derive_catalog.py -- do not edit by hand.
// Direction lattices are fixed lattices of integral point-group
// involutions (dihedral mirrors) resp. integer orthogonal
// complements of rotation-axis planes (icosahedral lattices).
#include "projcoh/catalog_data.hpp"

namespace projcoh::detail {

const std::vector<RawScheme>& raw_catalog() {
  static const std::vector<RawScheme> cat = {
    {"ammann_beenker", 4, 2, {
      {"a0", {{1,0,0,0},{0,1,0,-1}}, {"0/1","0/1","0/1","0/1"}},
      {"a1", {{1,0,1,0},{0,1,0,0}}, {"0/1","0/1","0/1","0/1"}},
      {"a2", {{0,1,0,1},{0,0,1,0}}, {"0/1","0/1","0/1","0/1"}},
      {"a3", {{1,0,-1,0},{0,0,0,1}}, {"0/1","0/1","0/1","0/1"}},
    }},
    {"ammann_beenker_coloured", 4, 2, {
      {"b0", {{1,1,0,0},{0,0,1,-1}}, {"0/1","0/1","0/1","0/1"}},
      {"b1", {{1,0,0,1},{0,1,1,0}}, {"0/1","0/1","0/1","0/1"}},
      {"b2", {{1,-1,0,0},{0,0,1,1}}, {"0/1","0/1","0/1","0/1"}},
      {"b3", {{1,0,0,-1},{0,1,-1,0}}, {"0/1","0/1","0/1","0/1"}},
    }},
    {"ammann_beenker_decorated", 4, 2, {
      {"a0", {{1,0,0,0},{0,1,0,-1}}, {"0/1","0/1","0/1","0/1"}},
      {"a1", {{1,0,1,0},{0,1,0,0}}, {"0/1","0/1","0/1","0/1"}},
      {"a2", {{0,1,0,1},{0,0,1,0}}, {"0/1","0/1","0/1","0/1"}},
      {"a3", {{1,0,-1,0},{0,0,0,1}}, {"0/1","0/1","0/1","0/1"}},
      {"b0", {{1,1,0,0},{0,0,1,-1}}, {"0/1","0/1","0/1","0/1"}},
      {"b1", {{1,0,0,1},{0,1,1,0}}, {"0/1","0/1","0/1","0/1"}},
      {"b2", {{1,-1,0,0},{0,0,1,1}}, {"0/1","0/1","0/1","0/1"}},
      {"b3", {{1,0,0,-1},{0,1,-1,0}}, {"0/1","0/1","0/1","0/1"}},
    }},
    {"penrose", 4, 2, {
      {"a0", {{1,0,0,0},{0,0,1,-1}}, {"0/1","0/1","0/1","0/1"}},
      {"a1", {{1,0,1,0},{0,1,0,0}}, {"0/1","0/1","0/1","0/1"}},
      {"a2", {{0,1,0,1},{0,0,1,0}}, {"0/1","0/1","0/1","0/1"}},
      {"a3", {{1,-1,0,0},{0,0,0,1}}, {"0/1","0/1","0/1","0/1"}},
      {"a4", {{1,0,0,-1},{0,1,-1,0}}, {"0/1","0/1","0/1","0/1"}},
    }},
    {"ttt", 4, 2, {
      {"b0", {{1,1,0,0},{0,2,-2,1}}, {"0/1","0/1","0/1","0/1"}},
      {"b1", {{1,0,0,1},{0,1,1,0}}, {"0/1","0/1","0/1","0/1"}},
      {"b2", {{1,-2,0,-2},{0,0,1,1}}, {"0/1","0/1","0/1","0/1"}},
      {"b3", {{1,0,-1,0},{0,1,-2,2}}, {"0/1","0/1","0/1","0/1"}},
      {"b4", {{2,0,1,-2},{0,1,0,-1}}, {"0/1","0/1","0/1","0/1"}},
    }},
    {"generalized_penrose", 4, 2, {
      {"p0", {{1,0,0,0},{0,0,1,-1}}, {"0/1","-1/3","0/1","0/1"}},
      {"q0", {{1,0,0,0},{0,0,1,-1}}, {"0/1","1/3","1/3","0/1"}},
      {"p1", {{0,1,0,1},{0,0,1,0}}, {"0/1","0/1","0/1","-1/3"}},
      {"q1", {{0,1,0,1},{0,0,1,0}}, {"-1/3","1/3","-1/3","2/3"}},
      {"p2", {{1,0,0,-1},{0,1,-1,0}}, {"1/3","0/1","0/1","0/1"}},
      {"q2", {{1,0,0,-1},{0,1,-1,0}}, {"-1/3","-1/3","0/1","0/1"}},
      {"p3", {{1,0,1,0},{0,1,0,0}}, {"0/1","0/1","1/3","0/1"}},
      {"q3", {{1,0,1,0},{0,1,0,0}}, {"0/1","0/1","-1/3","-1/3"}},
      {"p4", {{1,-1,0,0},{0,0,0,1}}, {"-1/3","1/3","-1/3","1/3"}},
      {"q4", {{1,-1,0,0},{0,0,0,1}}, {"2/3","-1/3","1/3","-1/3"}},
    }},
    {"socolar", 4, 2, {
      {"a0", {{1,0,0,0},{0,2,0,-1}}, {"0/1","0/1","0/1","0/1"}},
      {"a1", {{1,0,1,0},{0,1,0,0}}, {"0/1","0/1","0/1","0/1"}},
      {"a2", {{0,1,0,1},{0,0,1,0}}, {"0/1","0/1","0/1","0/1"}},
      {"a3", {{1,0,-2,0},{0,0,0,1}}, {"0/1","0/1","0/1","0/1"}},
      {"a4", {{1,0,-1,0},{0,1,0,-2}}, {"0/1","0/1","0/1","0/1"}},
      {"a5", {{2,0,-1,0},{0,1,0,-1}}, {"0/1","0/1","0/1","0/1"}},
    }},
    {"socolar_decorated", 4, 2, {
      {"a0", {{1,0,0,0},{0,2,0,-1}}, {"0/1","0/1","0/1","0/1"}},
      {"a1", {{1,0,1,0},{0,1,0,0}}, {"0/1","0/1","0/1","0/1"}},
      {"a2", {{0,1,0,1},{0,0,1,0}}, {"0/1","0/1","0/1","0/1"}},
      {"a3", {{1,0,-2,0},{0,0,0,1}}, {"0/1","0/1","0/1","0/1"}},
      {"a4", {{1,0,-1,0},{0,1,0,-2}}, {"0/1","0/1","0/1","0/1"}},
      {"a5", {{2,0,-1,0},{0,1,0,-1}}, {"0/1","0/1","0/1","0/1"}},
      {"b0", {{1,0,-1,1},{0,1,1,-1}}, {"0/1","0/1","0/1","0/1"}},
      {"b1", {{1,0,0,1},{0,1,1,0}}, {"0/1","0/1","0/1","0/1"}},
      {"b2", {{1,-1,0,1},{0,0,1,1}}, {"0/1","0/1","0/1","0/1"}},
      {"b3", {{1,0,-1,-1},{0,1,-1,-1}}, {"0/1","0/1","0/1","0/1"}},
      {"b4", {{1,0,0,-1},{0,1,-1,0}}, {"0/1","0/1","0/1","0/1"}},
      {"b5", {{1,1,0,-1},{0,0,1,-1}}, {"0/1","0/1","0/1","0/1"}},
    }},
    {"heptagonal_a", 6, 2, {
      {"a0", {{1,0,0,0,0,0},{0,0,1,0,0,-1},{0,0,0,1,-1,0}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"a1", {{1,0,1,0,0,0},{0,1,0,0,0,0},{0,0,0,0,1,-1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"a2", {{1,0,0,0,1,0},{0,1,0,1,0,0},{0,0,1,0,0,0}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"a3", {{0,1,0,0,0,1},{0,0,1,0,1,0},{0,0,0,1,0,0}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"a4", {{1,-1,0,0,0,0},{0,0,0,1,0,1},{0,0,0,0,1,0}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"a5", {{1,0,0,-1,0,0},{0,1,-1,0,0,0},{0,0,0,0,0,1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"a6", {{1,0,0,0,0,-1},{0,1,0,0,-1,0},{0,0,1,-1,0,0}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
    }},
    {"heptagonal_b", 6, 2, {
      {"b0", {{1,1,0,0,0,0},{0,2,-2,0,-1,2},{0,0,0,1,0,-1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"b1", {{1,0,0,1,0,0},{0,1,1,0,0,0},{0,0,2,-2,2,-1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"b2", {{1,0,0,0,0,1},{0,1,0,0,1,0},{0,0,1,1,0,0}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"b3", {{1,-2,0,0,2,-2},{0,0,1,0,0,1},{0,0,0,1,1,0}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"b4", {{1,0,-1,0,0,0},{0,1,-2,2,0,2},{0,0,0,0,1,1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"b5", {{1,0,0,0,-1,0},{0,1,0,-1,0,0},{0,0,1,-2,2,-2}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"b6", {{2,0,0,-1,2,-2},{0,1,0,0,0,-1},{0,0,1,0,-1,0}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
    }},
    {"ammann_kramer", 6, 3, {
      {"m0", {{1,0,0,0,-1,0},{0,1,-1,0,0,0},{0,0,0,1,0,0},{0,0,0,0,0,1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"m1", {{1,0,0,0,0,0},{0,1,0,0,0,1},{0,0,1,0,-1,0},{0,0,0,1,0,0}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"m2", {{1,0,-1,0,0,0},{0,1,0,-1,0,0},{0,0,0,0,1,0},{0,0,0,0,0,1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"m3", {{1,0,0,0,0,0},{0,1,0,0,-1,0},{0,0,1,1,0,0},{0,0,0,0,0,1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"m4", {{1,0,0,0,0,0},{0,1,0,0,0,0},{0,0,1,0,0,1},{0,0,0,1,-1,0}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"m5", {{1,-1,0,0,0,0},{0,0,1,0,0,-1},{0,0,0,1,0,0},{0,0,0,0,1,0}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"m6", {{1,0,0,1,0,0},{0,1,0,0,0,-1},{0,0,1,0,0,0},{0,0,0,0,1,0}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"m7", {{1,0,0,0,0,1},{0,1,0,0,0,0},{0,0,1,-1,0,0},{0,0,0,0,1,0}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"m8", {{1,0,0,0,0,-1},{0,1,0,0,1,0},{0,0,1,0,0,0},{0,0,0,1,0,0}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"m9", {{1,1,0,0,0,0},{0,0,1,0,0,0},{0,0,0,1,1,0},{0,0,0,0,0,1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"m10", {{1,0,0,-1,0,0},{0,1,0,0,0,0},{0,0,1,0,1,0},{0,0,0,0,0,1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"m11", {{1,0,0,0,0,0},{0,1,0,1,0,0},{0,0,1,0,0,0},{0,0,0,0,1,-1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"m12", {{1,0,0,0,1,0},{0,1,0,0,0,0},{0,0,1,0,0,0},{0,0,0,1,0,-1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"m13", {{1,0,1,0,0,0},{0,1,0,0,0,0},{0,0,0,1,0,0},{0,0,0,0,1,1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"m14", {{1,0,0,0,0,0},{0,1,1,0,0,0},{0,0,0,1,0,1},{0,0,0,0,1,0}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
    }},
    {"dual_canonical_d6", 6, 3, {
      {"m0", {{1,0,0,0,-1,0},{0,1,-1,0,0,0},{0,0,0,1,0,0},{0,0,0,0,0,1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"m1", {{1,0,0,1,0,-1},{0,1,0,0,0,0},{0,0,1,0,-1,0},{0,0,0,2,0,-1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"m2", {{1,0,-1,0,0,0},{0,1,0,-1,0,0},{0,0,0,0,1,0},{0,0,0,0,0,1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"m3", {{1,0,0,0,0,0},{0,1,0,0,-1,0},{0,0,1,1,0,0},{0,0,0,0,0,1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"m4", {{1,1,0,0,0,-1},{0,2,0,0,0,-1},{0,0,1,0,0,0},{0,0,0,1,-1,0}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"m5", {{1,-1,0,0,0,0},{0,0,1,0,0,-1},{0,0,0,1,1,-1},{0,0,0,0,2,-1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"m6", {{1,0,0,1,0,-1},{0,1,0,0,0,-1},{0,0,1,0,1,-1},{0,0,0,0,2,-1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"m7", {{1,0,0,0,0,0},{0,1,0,0,1,-1},{0,0,1,-1,0,0},{0,0,0,0,2,-1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"m8", {{1,0,0,0,0,-1},{0,1,0,0,1,-1},{0,0,1,1,0,-1},{0,0,0,2,0,-1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"m9", {{1,1,0,0,0,0},{0,0,1,0,0,0},{0,0,0,1,1,0},{0,0,0,0,0,1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"m10", {{1,0,0,-1,0,0},{0,1,0,0,0,0},{0,0,1,0,1,0},{0,0,0,0,0,1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"m11", {{1,0,1,0,0,-1},{0,1,0,1,0,-1},{0,0,2,0,0,-1},{0,0,0,0,1,-1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"m12", {{1,0,0,0,1,-1},{0,1,1,0,0,-1},{0,0,2,0,0,-1},{0,0,0,1,0,-1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"m13", {{1,0,1,0,0,-1},{0,1,0,1,0,-1},{0,0,0,2,0,-1},{0,0,0,0,1,0}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"m14", {{1,0,0,0,1,-1},{0,1,1,0,0,-1},{0,0,0,1,0,0},{0,0,0,0,2,-1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
    }},
    {"danzer", 6, 3, {
      {"p0", {{1,0,0,0,0,0},{0,1,0,0,0,0},{0,0,0,1,0,0},{0,0,0,0,1,0}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"p1", {{1,0,0,0,0,-1},{0,0,1,0,0,-1},{0,0,0,1,0,0},{0,0,0,0,1,-1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"p2", {{0,1,0,0,0,-1},{0,0,1,0,0,-1},{0,0,0,1,0,-1},{0,0,0,0,1,0}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"p3", {{1,0,0,0,0,-1},{0,1,0,0,0,0},{0,0,1,0,0,0},{0,0,0,1,0,-1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"p4", {{1,0,0,0,0,0},{0,1,0,0,0,-1},{0,0,1,0,0,0},{0,0,0,0,1,-1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"p5", {{1,0,0,0,1,-1},{0,1,0,0,1,-1},{0,0,1,0,-1,0},{0,0,0,1,-1,0}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
    }},
    {"canonical_d6", 6, 3, {
      {"p0", {{1,0,0,0,0,0},{0,1,0,0,0,0},{0,0,0,1,0,0},{0,0,0,0,1,0}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"p1", {{1,0,0,0,0,-1},{0,0,1,0,0,-1},{0,0,0,1,0,0},{0,0,0,0,1,-1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"p2", {{0,1,0,0,0,-1},{0,0,1,0,0,-1},{0,0,0,1,0,-1},{0,0,0,0,1,0}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"p3", {{1,0,0,0,0,-1},{0,1,0,0,0,0},{0,0,1,0,0,0},{0,0,0,1,0,-1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"p4", {{1,0,0,0,0,0},{0,1,0,0,0,-1},{0,0,1,0,0,0},{0,0,0,0,1,-1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"p5", {{1,0,0,0,1,-1},{0,1,0,0,1,-1},{0,0,1,0,-1,0},{0,0,0,1,-1,0}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"t0", {{1,0,0,0,-1,0},{0,1,0,0,1,-1},{0,0,1,0,0,0},{0,0,0,1,0,0}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"t1", {{1,0,0,0,1,-1},{0,1,0,0,0,0},{0,0,1,0,0,-1},{0,0,0,1,1,-1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"t2", {{1,0,0,0,0,-1},{0,1,0,0,0,-1},{0,0,1,0,1,-1},{0,0,0,1,-1,0}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"t3", {{1,0,-1,0,0,0},{0,1,-1,0,0,0},{0,0,0,1,0,-1},{0,0,0,0,1,-1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"t4", {{1,0,0,1,0,-1},{0,1,0,-1,0,0},{0,0,1,0,0,0},{0,0,0,0,1,0}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"t5", {{1,0,0,0,0,-1},{0,1,0,-1,0,0},{0,0,1,1,0,-1},{0,0,0,0,1,0}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"t6", {{1,0,0,0,-1,0},{0,1,0,0,0,-1},{0,0,1,0,1,-1},{0,0,0,1,0,0}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"t7", {{1,0,0,0,0,0},{0,1,0,0,-1,0},{0,0,1,0,-1,0},{0,0,0,1,0,-1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"t8", {{1,0,0,-1,0,0},{0,1,0,0,0,0},{0,0,1,-1,0,0},{0,0,0,0,1,-1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
      {"t9", {{1,0,0,0,0,0},{0,1,0,0,-1,0},{0,0,1,0,0,-1},{0,0,0,1,1,-1}}, {"0/1","0/1","0/1","0/1","0/1","0/1"}},
    }},
  };
  return cat;
}

const std::vector<std::vector<long long>>& rotation_8() {
  static const std::vector<std::vector<long long>> m = {{0,0,0,-1},{1,0,0,0},{0,1,0,0},{0,0,1,0}};
  return m;
}
const std::vector<std::vector<long long>>& rotation_10() {
  static const std::vector<std::vector<long long>> m = {{0,0,0,-1},{1,0,0,1},{0,1,0,-1},{0,0,1,1}};
  return m;
}
const std::vector<std::vector<long long>>& rotation_12() {
  static const std::vector<std::vector<long long>> m = {{0,0,0,-1},{1,0,0,0},{0,1,0,1},{0,0,1,0}};
  return m;
}
const std::vector<std::vector<long long>>& rotation_14() {
  static const std::vector<std::vector<long long>> m = {{0,0,0,0,0,-1},{1,0,0,0,0,1},{0,1,0,0,0,-1},{0,0,1,0,0,1},{0,0,0,1,0,-1},{0,0,0,0,1,1}};
  return m;
}
const std::vector<std::vector<long long>>& icosa_F_basis_in_P() {
  static const std::vector<std::vector<long long>> m = {{1,0,0,0,0,0},{0,1,0,0,0,0},{0,0,1,0,0,0},{0,0,0,1,0,0},{0,0,0,0,1,0},{1,1,1,1,1,2}};
  return m;
}

}  // namespace projcoh::detail
