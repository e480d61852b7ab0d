#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace ptab {

/// A box addressed by labels: `row` in [+-n], `col` in [n].
struct BoxAddr {
  int row = 0;
  int col = 0;

  friend bool operator==(const BoxAddr&, const BoxAddr&) = default;
  friend auto operator<=>(const BoxAddr&, const BoxAddr&) = default;
};

std::string to_string(const BoxAddr& b);  // "(-2,5)"

/// A shifted (k,n)-diagram, determined by its set R of positive row labels.
///
/// Columns are the labels [n] \ R, drawn left to right in decreasing order.
/// Rows are drawn top to bottom as -c for every column c (largest c first),
/// followed by R in increasing order. Box (j,c) exists for j in R iff c > j;
/// box (-i,c) exists iff c >= i, and (-i,i) is the diagonal of row -i.
class ShiftedShape {
 public:
  /// Throws std::invalid_argument for labels outside [n] or n < 1.
  ShiftedShape(int n, std::vector<int> positive_rows);

  int n() const noexcept { return n_; }
  const std::vector<int>& positive_rows() const noexcept { return positive_rows_; }
  /// Left to right (decreasing labels).
  const std::vector<int>& columns() const noexcept { return columns_; }
  /// Top to bottom.
  const std::vector<int>& rows() const noexcept { return rows_; }

  bool is_row(int label) const noexcept;
  bool is_column(int label) const noexcept;
  bool has_box(int row, int col) const noexcept;
  bool has_box(const BoxAddr& b) const noexcept { return has_box(b.row, b.col); }

  /// Position of the box in reading order, or -1 if absent.
  int box_index(int row, int col) const noexcept;
  int box_index(const BoxAddr& b) const noexcept { return box_index(b.row, b.col); }
  int box_count() const noexcept { return static_cast<int>(boxes_.size()); }
  /// All boxes, top row first, left to right within a row.
  const std::vector<BoxAddr>& boxes() const noexcept { return boxes_; }

  /// Column labels of the boxes in a row, left to right.
  std::vector<int> row_boxes(int row) const;
  /// Row labels of the boxes in a column, top to bottom.
  std::vector<int> column_boxes(int col) const;

  std::optional<BoxAddr> west_of(const BoxAddr& b) const;
  std::optional<BoxAddr> east_of(const BoxAddr& b) const;
  std::optional<BoxAddr> north_of(const BoxAddr& b) const;
  std::optional<BoxAddr> south_of(const BoxAddr& b) const;

  /// Bit i-1 set iff i is a positive row.
  unsigned row_mask() const noexcept;

  friend bool operator==(const ShiftedShape& a, const ShiftedShape& b) {
    return a.n_ == b.n_ && a.positive_rows_ == b.positive_rows_;
  }

 private:
  int slot(int label) const noexcept { return label + n_; }

  int n_;
  std::vector<int> positive_rows_;
  std::vector<int> columns_;
  std::vector<int> rows_;
  std::vector<int> row_pos_;     // label + n -> index in rows_, or -1
  std::vector<int> column_pos_;  // label -> index in columns_, or -1
  std::vector<BoxAddr> boxes_;
  std::vector<int> index_;       // (row + n) * (n + 1) + col -> reading index
};

/// Throws std::invalid_argument when a label lies outside [n].
ShiftedShape shape_from_rows(int n, const std::vector<int>& positive_rows);

/// Shape with positive rows given by the bits of `mask` (bit i-1 for label i).
ShiftedShape shape_from_mask(int n, unsigned mask);

std::vector<BoxAddr> boxes_of(const ShiftedShape& shape);

/// The 2-cells (j,c) with j in R, c a column and c < j.
std::vector<BoxAddr> extended_cells(const ShiftedShape& shape);

/// m(2n-m+1)/2 with m the number of columns: boxes plus 2-cells.
int extended_size(const ShiftedShape& shape);

}  // namespace ptab
