#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ptab/signed_permutation.hpp"
#include "ptab/statistics.hpp"
#include "ptab/tableau.hpp"

namespace ptab {

/// A row label or a column label. Walks start and end at one.
struct Endpoint {
  enum class Side { row, column };
  Side side = Side::row;
  int label = 0;

  static Endpoint row(int label) { return {Side::row, label}; }
  static Endpoint column(int label) { return {Side::column, label}; }
  bool is_row() const noexcept { return side == Side::row; }

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

std::string to_string(const Endpoint& e);  // "row -2" / "col 5"

enum class Direction { east, south };

struct ZigzagStep {
  BoxAddr box;
  Direction heading;  // direction on entry

  friend bool operator==(const ZigzagStep&, const ZigzagStep&) = default;
};

struct ZigzagTrace {
  Endpoint start;
  std::vector<ZigzagStep> steps;
  Endpoint end;

  /// One line per step, "(row,col) dir", then "end=<label>".
  std::string dump() const;
};

/// Walks from a row (entering its first box heading east) or a column
/// (entering its top box heading south), turning at every 1. Rows without
/// boxes give the empty trace ending at the same row. Throws
/// std::invalid_argument for a label that is not in the shape.
ZigzagTrace zigzag_path(const TableauB& t, const Endpoint& start);

/// The zigzag map on permutation tableaux. Throws std::invalid_argument if
/// T is not a valid permutation tableau.
SignedPermutation zeta(const TableauB& t);
/// The same rule on bare tableaux.
SignedPermutation zeta_bare(const TableauB& t);
/// The three-case rule without kind or validity checks.
SignedPermutation zeta_unchecked(const TableauB& t);

enum class ZeroType { EE, NN, EN, nontyped };

std::string to_string(ZeroType type);

struct ZeroEntry {
  BoxAddr box;
  ZeroType type;
  Endpoint horizontal;  // origin of the walk entering heading east
  Endpoint vertical;    // origin of the walk entering heading south
};

struct ZeroTypeMap {
  std::vector<ZeroEntry> entries;  // reading order
  int zero_EE = 0;
  int zero_NN = 0;
  int zero_EN = 0;
  int nontyped = 0;
  /// Set when two 0s see the same pair of walk origins.
  bool repeated_crossing = false;

  int zero() const noexcept { return zero_EE + zero_NN + zero_EN; }
  ZeroType type_at(const BoxAddr& b) const;  // throws std::out_of_range
};

/// Types every 0 by tracing both walks through it back to their origins.
/// Works on any filling; validity is not required.
ZeroTypeMap classify_zeros(const TableauB& t);

/// The unique permutation tableau with zeta(T) = sigma, looked up in an
/// index built once per rank from enumerate_tableaux. Throws
/// std::out_of_range when the rank exceeds `bound`.
TableauB zeta_inverse(const SignedPermutation& sigma, int bound = kDefaultTableauBound);

/// Direct construction of the bare tableau from the path cycles of sigma.
/// Throws std::logic_error if the result is not a valid bare tableau.
TableauB zeta_bare_inverse(const SignedPermutation& sigma);

/// The set V of 1-boxes produced by the path-cycle splitting, in the order
/// the boxes are created.
std::vector<BoxAddr> bare_one_boxes(const SignedPermutation& sigma);

/// Permutation kind to bare kind and back, through the two zigzag maps.
TableauB pt_bt_convert(const TableauB& t, int bound = kDefaultTableauBound);

}  // namespace ptab
