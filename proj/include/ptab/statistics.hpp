#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ptab/signed_permutation.hpp"

namespace ptab {

struct StatRecord {
  int wex = 0;   // #{i : sigma(i) >= i}
  int drop = 0;  // #{i : sigma(i) < i}
  int neg = 0;   // negative window entries
  int cyc = 0;   // cycles of the full cycle notation
  int fwex = 0;  // 2 wex + neg

  friend bool operator==(const StatRecord&, const StatRecord&) = default;
};

StatRecord basic_stats(const SignedPermutation& sigma);

enum class PairKind { nest, en, ne, crossing, inversion_a, inversion_b };

std::string to_string(PairKind kind);

/// A set of position pairs (i, j) in [n] x [n], kept sorted.
struct PairSet {
  PairKind kind;
  std::vector<std::pair<int, int>> pairs;

  int size() const noexcept { return static_cast<int>(pairs.size()); }
  bool contains(int i, int j) const;
  std::string to_string() const;  // "{(2,1),(5,4)}"
};

struct AlignmentSets {
  PairSet nest;
  PairSet en;
  PairSet ne;

  int total() const noexcept { return nest.size() + en.size() + ne.size(); }
};

AlignmentSets alignment_sets(const SignedPermutation& sigma);
PairSet crossing_set(const SignedPermutation& sigma);

/// The two inversion families {i<j : sigma(i)>sigma(j)} and
/// {i<=j : sigma(-i)>sigma(j)}.
std::pair<PairSet, PairSet> inversion_sets(const SignedPermutation& sigma);

/// Coxeter length; the two families are counted separately, so a pair lying
/// in both contributes twice.
int inversion_count(const SignedPermutation& sigma);

/// A cycle rewritten so that an entry followed by a negative entry becomes
/// the pair x, -x. Entries are distinct signed values.
struct PathCycle {
  std::vector<int> entries;

  friend bool operator==(const PathCycle&, const PathCycle&) = default;
};

/// One path cycle per cycle of full_cycles(sigma), in the same order.
std::vector<PathCycle> path_cycles(const SignedPermutation& sigma);

/// Rewrites a single cycle (c_1, ..., c_m) to its path cycle.
PathCycle to_path_cycle(const std::vector<int>& cycle);

/// Inverse of path_cycles: reads the sign of each successor off the x, -x
/// pairs. Throws std::invalid_argument when the cycles do not describe an
/// element of B_n.
SignedPermutation from_path_cycles(int n, const std::vector<PathCycle>& cycles);

std::string to_string(const PathCycle& cycle);  // "<2,-2,3,-3,1,4>"

}  // namespace ptab
