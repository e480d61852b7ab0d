#include "ptab/shifted_shape.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptab {

std::string to_string(const BoxAddr& b) {
  return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
}

ShiftedShape::ShiftedShape(int n, std::vector<int> positive_rows)
    : n_(n), positive_rows_(std::move(positive_rows)) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  std::sort(positive_rows_.begin(), positive_rows_.end());
  for (std::size_t k = 0; k < positive_rows_.size(); ++k) {
    const int j = positive_rows_[k];
    if (j < 1 || j > n)
      throw std::invalid_argument("row label " + std::to_string(j) + " outside [1," +
                                  std::to_string(n) + "]");
    if (k > 0 && positive_rows_[k - 1] == j)
      throw std::invalid_argument("row label " + std::to_string(j) + " repeated");
  }
  std::vector<bool> in_r(static_cast<std::size_t>(n) + 1, false);
  for (int j : positive_rows_) in_r[static_cast<std::size_t>(j)] = true;
  for (int c = n; c >= 1; --c)
    if (!in_r[static_cast<std::size_t>(c)]) columns_.push_back(c);
  for (int c : columns_) rows_.push_back(-c);
  for (int j : positive_rows_) rows_.push_back(j);

  row_pos_.assign(static_cast<std::size_t>(2 * n + 1), -1);
  column_pos_.assign(static_cast<std::size_t>(n + 1), -1);
  for (std::size_t k = 0; k < rows_.size(); ++k)
    row_pos_[static_cast<std::size_t>(slot(rows_[k]))] = static_cast<int>(k);
  for (std::size_t k = 0; k < columns_.size(); ++k)
    column_pos_[static_cast<std::size_t>(columns_[k])] = static_cast<int>(k);

  index_.assign(static_cast<std::size_t>((2 * n + 1) * (n + 1)), -1);
  for (int r : rows_)
    for (int c : columns_)
      if (r > 0 ? c > r : c >= -r) {
        index_[static_cast<std::size_t>(slot(r) * (n + 1) + c)] = static_cast<int>(boxes_.size());
        boxes_.push_back({r, c});
      }
}

bool ShiftedShape::is_row(int label) const noexcept {
  return label != 0 && label >= -n_ && label <= n_ &&
         row_pos_[static_cast<std::size_t>(slot(label))] >= 0;
}

bool ShiftedShape::is_column(int label) const noexcept {
  return label >= 1 && label <= n_ && column_pos_[static_cast<std::size_t>(label)] >= 0;
}

int ShiftedShape::box_index(int row, int col) const noexcept {
  if (row == 0 || row < -n_ || row > n_ || col < 1 || col > n_) return -1;
  return index_[static_cast<std::size_t>(slot(row) * (n_ + 1) + col)];
}

bool ShiftedShape::has_box(int row, int col) const noexcept { return box_index(row, col) >= 0; }

std::vector<int> ShiftedShape::row_boxes(int row) const {
  if (!is_row(row)) throw std::invalid_argument("unknown row label " + std::to_string(row));
  std::vector<int> out;
  for (int c : columns_)
    if (has_box(row, c)) out.push_back(c);
  return out;
}

std::vector<int> ShiftedShape::column_boxes(int col) const {
  if (!is_column(col)) throw std::invalid_argument("unknown column label " + std::to_string(col));
  std::vector<int> out;
  for (int r : rows_)
    if (has_box(r, col)) out.push_back(r);
  return out;
}

std::optional<BoxAddr> ShiftedShape::west_of(const BoxAddr& b) const {
  const int k = column_pos_[static_cast<std::size_t>(b.col)];
  if (k <= 0) return std::nullopt;
  const BoxAddr w{b.row, columns_[static_cast<std::size_t>(k - 1)]};
  return has_box(w) ? std::optional<BoxAddr>(w) : std::nullopt;
}

std::optional<BoxAddr> ShiftedShape::east_of(const BoxAddr& b) const {
  const int k = column_pos_[static_cast<std::size_t>(b.col)];
  if (k < 0 || k + 1 >= static_cast<int>(columns_.size())) return std::nullopt;
  const BoxAddr e{b.row, columns_[static_cast<std::size_t>(k + 1)]};
  return has_box(e) ? std::optional<BoxAddr>(e) : std::nullopt;
}

std::optional<BoxAddr> ShiftedShape::north_of(const BoxAddr& b) const {
  const int k = row_pos_[static_cast<std::size_t>(slot(b.row))];
  if (k <= 0) return std::nullopt;
  const BoxAddr up{rows_[static_cast<std::size_t>(k - 1)], b.col};
  return has_box(up) ? std::optional<BoxAddr>(up) : std::nullopt;
}

std::optional<BoxAddr> ShiftedShape::south_of(const BoxAddr& b) const {
  const int k = row_pos_[static_cast<std::size_t>(slot(b.row))];
  if (k < 0 || k + 1 >= static_cast<int>(rows_.size())) return std::nullopt;
  const BoxAddr down{rows_[static_cast<std::size_t>(k + 1)], b.col};
  return has_box(down) ? std::optional<BoxAddr>(down) : std::nullopt;
}

unsigned ShiftedShape::row_mask() const noexcept {
  unsigned m = 0;
  for (int j : positive_rows_) m |= 1u << (j - 1);
  return m;
}

ShiftedShape shape_from_rows(int n, const std::vector<int>& positive_rows) {
  return ShiftedShape(n, positive_rows);
}

ShiftedShape shape_from_mask(int n, unsigned mask) {
  if (n < 1 || n > 30) throw std::invalid_argument("rank outside [1,30]");
  if (mask >> n) throw std::invalid_argument("mask has bits above rank");
  std::vector<int> r;
  for (int i = 1; i <= n; ++i)
    if (mask & (1u << (i - 1))) r.push_back(i);
  return ShiftedShape(n, std::move(r));
}

std::vector<BoxAddr> boxes_of(const ShiftedShape& shape) { return shape.boxes(); }

std::vector<BoxAddr> extended_cells(const ShiftedShape& shape) {
  std::vector<BoxAddr> out;
  for (int j : shape.positive_rows())
    for (int c : shape.columns())
      if (c < j) out.push_back({j, c});
  return out;
}

int extended_size(const ShiftedShape& shape) {
  const int m = static_cast<int>(shape.columns().size());
  return m * (2 * shape.n() - m + 1) / 2;
}

}  // namespace ptab
