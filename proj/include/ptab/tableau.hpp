#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ptab/shifted_shape.hpp"

namespace ptab {

enum class TableauKind { permutation, bare };

std::string to_string(TableauKind kind);
/// Accepts "permutation"/"pt" and "bare"/"bt"; throws std::invalid_argument.
TableauKind parse_kind(const std::string& text);

/// A 0/1 filling of a shifted shape. Only existing boxes are addressable.
class TableauB {
 public:
  /// All boxes 0.
  TableauB(ShiftedShape shape, TableauKind kind);
  /// `fill` is indexed in the shape's reading order.
  TableauB(ShiftedShape shape, TableauKind kind, std::vector<std::uint8_t> fill);

  /// Every box of the shape must appear exactly once with value 0 or 1.
  static TableauB from_entries(ShiftedShape shape, TableauKind kind,
                               const std::map<BoxAddr, int>& entries);
  /// Listed boxes are 1, the rest 0. Throws for boxes outside the shape.
  static TableauB from_ones(ShiftedShape shape, TableauKind kind, const std::vector<BoxAddr>& ones);

  const ShiftedShape& shape() const noexcept { return shape_; }
  TableauKind kind() const noexcept { return kind_; }
  int n() const noexcept { return shape_.n(); }

  /// Throws std::out_of_range for a box outside the shape.
  int at(int row, int col) const;
  int at(const BoxAddr& b) const { return at(b.row, b.col); }
  void set(const BoxAddr& b, int value);

  const std::vector<std::uint8_t>& fill() const noexcept { return fill_; }
  std::vector<BoxAddr> ones() const;

  /// Same shape and fill, different kind tag.
  TableauB with_kind(TableauKind kind) const;

  /// Grid dump, one line per row: "-2 | 1 0 1".
  std::string to_string() const;

  friend bool operator==(const TableauB& a, const TableauB& b) {
    return a.kind_ == b.kind_ && a.shape_ == b.shape_ && a.fill_ == b.fill_;
  }

 private:
  ShiftedShape shape_;
  TableauKind kind_;
  std::vector<std::uint8_t> fill_;
};

enum class Rule { column_without_one, one_hinge, zero_hinge, zero_diagonal_row };

std::string to_string(Rule rule);

struct Violation {
  BoxAddr box;
  Rule rule;

  std::string to_string() const;
};

/// Empty when T satisfies every rule of its kind.
std::vector<Violation> validate(const TableauB& t);
inline bool is_valid(const TableauB& t) { return validate(t).empty(); }

inline constexpr int kDefaultTableauBound = 6;

/// Every valid tableau of rank n and the given kind, exactly once. Shapes are
/// visited by increasing row mask (bit i-1 for label i); within a shape boxes
/// are assigned in reading order, 0 before 1. Throws std::out_of_range when
/// n is outside [1, bound].
void for_each_tableau(int n, TableauKind kind, const std::function<void(const TableauB&)>& visit,
                      int bound = kDefaultTableauBound);
std::vector<TableauB> enumerate_tableaux(int n, TableauKind kind, int bound = kDefaultTableauBound);

struct FillingStats {
  int one = 0;
  int two = 0;
  int so = 0;       // 1s that are not topmost in their column
  int dess = 0;     // 1s both topmost in column and leftmost in row
  int row = 0;      // positive rows
  int zerorow = 0;  // positive rows with no 1
  int col = 0;
  int diag = 0;     // diagonal boxes holding 1

  friend bool operator==(const FillingStats&, const FillingStats&) = default;
};

FillingStats filling_stats(const TableauB& t);

/// {"n":..,"kind":..,"positive_rows":[..],"ones":[[r,c],..]}
std::string tableau_to_json(const TableauB& t, int indent = -1);
/// Parses and validates. Throws ParseError on malformed documents and
/// std::invalid_argument when the filling breaks a tableau rule.
TableauB tableau_from_json(const std::string& text);

}  // namespace ptab
