#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ptab/signed_permutation.hpp"
#include "ptab/tableau.hpp"

namespace ptab {

/// Right multiplications sigma * s_i that raise the length by one, as
/// (i, sigma s_i) pairs in increasing i.
std::vector<std::pair<int, SignedPermutation>> weak_covers(const SignedPermutation& sigma);

/// True iff sigma * s_i is longer than sigma.
bool raises_length(const SignedPermutation& sigma, int i);

enum class CoverCase { WB1, WB2, WB3, WB4_1, WB4_2, WB5_1, WB5_2, WB6_1, WB6_2 };

std::string to_string(CoverCase c);  // "WB4-1"
CoverCase parse_cover_case(const std::string& text);

/// What the surgery does to the filling.
enum class Surgery {
  add_diagonal,      // WB1
  add_box,           // WB2
  new_column,        // WB3
  flip_one,          // two walks meet at a 1, which becomes 0
  row_rectangle,     // rectangle exchange between two rows
  column_rectangle,  // rectangle exchange between two columns
  hook_exchange,     // WB6-2: row -i and column i move into row -(i+1) and column i+1
};

std::string to_string(Surgery s);  // "row-rectangle"
Surgery parse_surgery(const std::string& text);

struct CoverMove {
  int generator = 0;
  CoverCase cover_case = CoverCase::WB1;
  Surgery surgery = Surgery::add_diagonal;
  /// The emptied-column repair ran: a column without 1 was removed together
  /// with its negative row and replaced by a positive zero row.
  bool fixup = false;
  /// The new 1 (WB1-WB3), the 1 turned into 0, or the new 0 at the corner of
  /// an exchanged rectangle. Labels are those of the tableau before fixup.
  std::optional<BoxAddr> pivot;
  /// Zeros moved by a rectangle or hook exchange, as (box in T, box in T'
  /// before fixup). A 0 that becomes 1 lands on the next box of the other
  /// line that held 1; a 0 facing a 0 swaps with it. Each keeps its type.
  std::vector<std::pair<BoxAddr, BoxAddr>> relocated;
};

/// Picks the case for s_i from sigma = zeta(T) and, for WB4-WB6, from the two
/// walks. Throws std::invalid_argument if T is not a valid permutation
/// tableau or if s_i does not raise the length of zeta(T).
CoverMove classify_cover(const TableauB& t, int i);

struct CoverResult {
  CoverMove move;
  TableauB before_fixup;
  TableauB tableau;
};

/// Performs the surgery for s_i. The result is checked: it must be a valid
/// permutation tableau with zeta(result) = zeta(T) s_i, otherwise
/// std::logic_error is thrown.
CoverResult apply_cover_detailed(const TableauB& t, int i);
TableauB apply_cover(const TableauB& t, int i);

struct PosetEdge {
  int from = 0;  // element indices
  int to = 0;
  int generator = 0;
  CoverCase cover_case = CoverCase::WB1;
  Surgery surgery = Surgery::add_diagonal;
  bool fixup = false;

  friend bool operator==(const PosetEdge&, const PosetEdge&) = default;
};

/// The Hasse diagram of the right weak order on B_n.
struct HassePoset {
  int n = 0;
  std::vector<SignedPermutation> elements;  // enumeration order
  std::vector<int> length;                  // per element
  std::vector<PosetEdge> edges;             // by source, then generator

  int index_of(const SignedPermutation& s) const;  // -1 if absent

  friend bool operator==(const HassePoset&, const HassePoset&) = default;
};

inline constexpr int kPosetBound = 5;

/// Every edge is classified through tableaux. Throws std::out_of_range when
/// n is outside [1, bound].
HassePoset build_weak_order(int n, int bound = kPosetBound);

enum class PosetFormat { dot, json };

PosetFormat parse_poset_format(const std::string& text);

/// DOT: edges point from sigma to its cover and carry the case as label.
/// JSON: {"n", "nodes":[{"window","length"}], "edges":[{"from","to","gen",
/// "case","surgery","fixup"}]} with windows as comma separated text.
std::string export_poset(const HassePoset& p, PosetFormat format);

/// Inverse of export_poset. Throws ParseError on malformed input.
HassePoset import_poset(const std::string& text, PosetFormat format);

}  // namespace ptab
