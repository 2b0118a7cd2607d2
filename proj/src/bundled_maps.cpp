#include "cubicspec/maps.hpp"

namespace cubicspec {

// Found by tests/oracles/mobius_kantor_search.cpp (first of 18 rotation
// systems of P(8,3) with six octagonal faces). Dart 2e sits at the smaller
// endpoint of edge e of families::gen_petersen(8, 3).
Map mobius_kantor_map() {
  std::vector<std::vector<Dart>> rotations{
      {0, 16, 14},  {1, 2, 18},   {3, 4, 20},   {5, 6, 22},
      {7, 8, 24},   {9, 10, 26},  {11, 12, 28}, {13, 15, 30},
      {17, 42, 32}, {19, 44, 34}, {21, 46, 36}, {23, 33, 38},
      {25, 35, 40}, {27, 37, 43}, {29, 39, 45}, {31, 41, 47},
  };
  return Map::from_rotations(16, 24, std::move(rotations));
}

}  // namespace cubicspec
