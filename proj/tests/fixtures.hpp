// Tableaux transcribed from the worked figures.
#pragma once

#include "ptab/tableau.hpp"

namespace fixtures {

using ptab::BoxAddr;
using ptab::ShiftedShape;
using ptab::TableauB;
using ptab::TableauKind;

/// zeta^{-1}(-2,-4,5,3,1).
inline TableauB sigma_example() {
  return TableauB::from_ones(ShiftedShape(5, {3}), TableauKind::permutation,
                             {{-2, 5}, {-2, 2}, {-1, 2}, {-1, 1}, {3, 5}, {3, 4}});
}

/// The permutation tableau of length 8 with rows -8,-6,-5,-3,1,2,4,7.
inline TableauB length8_permutation() {
  return TableauB::from_ones(ShiftedShape(8, {1, 2, 4, 7}), TableauKind::permutation,
                             {{-8, 8},
                              {-5, 8}, {-5, 6}, {-5, 5},
                              {-3, 8}, {-3, 6}, {-3, 5}, {-3, 3},
                              {1, 3},
                              {2, 8}, {2, 6}, {2, 5}, {2, 3},
                              {4, 6}, {4, 5},
                              {7, 8}});
}

/// The bare tableau drawn beside it.
inline TableauB length8_bare() {
  return TableauB::from_ones(ShiftedShape(8, {1, 2, 4, 7}), TableauKind::bare,
                             {{-8, 8},
                              {-5, 8}, {-5, 5},
                              {-3, 5}, {-3, 3},
                              {1, 8}, {1, 6},
                              {2, 8},
                              {4, 6},
                              {7, 8}});
}

/// The extended-representation example (n = 9). Row -3 has a 0 diagonal
/// next to a 1, so this filling is not a valid tableau.
inline TableauB extended_example() {
  return TableauB::from_ones(ShiftedShape(9, {2, 4, 7, 9}), TableauKind::permutation,
                             {{-6, 8}, {-6, 6},
                              {-3, 5},
                              {-1, 8}, {-1, 6}, {-1, 5}, {-1, 3}, {-1, 1},
                              {2, 6}, {2, 5}, {2, 3},
                              {4, 8}, {4, 6}, {4, 5}});
}

/// The bare tableau of sigma = (2,-3,-1,4).
inline TableauB path_cycle_example() {
  return TableauB::from_ones(ShiftedShape(4, {1}), TableauKind::bare,
                             {{-3, 4}, {1, 4}, {-3, 3}, {-2, 3}, {-2, 2}});
}

/// zeta^{-1}(-4,1,2,-3) and its image under the cover by s_2.
inline TableauB fixup_before() {
  return TableauB::from_ones(ShiftedShape(4, {}), TableauKind::permutation,
                             {{-4, 4}, {-1, 4}, {-1, 3}, {-1, 2}, {-1, 1}});
}

inline TableauB fixup_after() {
  return TableauB::from_ones(ShiftedShape(4, {2}), TableauKind::permutation,
                             {{-4, 4}, {-1, 4}, {-1, 3}, {-1, 1}});
}

/// zeta^{-1}(2,-4,5,3,1), which s_0 carries to sigma_example().
inline TableauB s0_predecessor() {
  return TableauB::from_ones(ShiftedShape(5, {1, 3}), TableauKind::permutation,
                             {{-2, 5}, {-2, 2}, {1, 2}, {3, 5}, {3, 4}});
}

}  // namespace fixtures
