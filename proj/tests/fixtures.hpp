#pragma once

// Hand-written rotation systems for the unit tests, independent of the
// generator module.

#include <vector>

#include "tricirc/embedding.hpp"

namespace fixtures {

inline tricirc::Embedding k4() {
  return tricirc::Embedding::from_rotation(
      4, {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}});
}

inline tricirc::Embedding octahedron() {
  return tricirc::Embedding::from_rotation(6, {{1, 4, 3, 5},
                                               {2, 4, 0, 5},
                                               {3, 4, 1, 5},
                                               {0, 4, 2, 5},
                                               {0, 1, 2, 3},
                                               {3, 2, 1, 0}});
}

// 3-regular with six quadrilateral faces.
inline tricirc::Embedding cube() {
  return tricirc::Embedding::from_rotation(8, {{1, 4, 3},
                                               {2, 5, 0},
                                               {3, 6, 1},
                                               {2, 0, 7},
                                               {5, 7, 0},
                                               {6, 4, 1},
                                               {2, 7, 5},
                                               {6, 3, 4}});
}

// A consistent (non-spherical) rotation system of K5.
inline std::vector<std::vector<int>> k5_rotation() {
  return {{1, 2, 3, 4}, {0, 2, 3, 4}, {0, 1, 3, 4}, {0, 1, 2, 4}, {0, 1, 2, 3}};
}

}  // namespace fixtures
