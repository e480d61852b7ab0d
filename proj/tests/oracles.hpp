// Independent reference implementations used only by the tests. None of
// these call into the library code they check.
#pragma once

#include <cstdlib>
#include <map>
#include <queue>
#include <vector>

namespace oracle {

using Window = std::vector<int>;

/// Right multiplication by s_i on a window: s_0 negates the first entry,
/// s_i swaps entries i and i+1.
inline Window times_generator(Window w, int i) {
  if (i == 0)
    w[0] = -w[0];
  else
    std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
  return w;
}

/// Distance from the identity in the Cayley graph of B_n.
inline std::map<Window, int> cayley_lengths(int n) {
  Window id(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i + 1;
  std::map<Window, int> dist{{id, 0}};
  std::queue<Window> q;
  q.push(id);
  while (!q.empty()) {
    Window w = q.front();
    q.pop();
    for (int i = 0; i < n; ++i) {
      Window x = times_generator(w, i);
      if (dist.emplace(x, dist[w] + 1).second) q.push(x);
    }
  }
  return dist;
}

/// Labels the southeast border of the Young diagram `lambda` (row lengths,
/// weakly decreasing, inside k x (n-k)) from the northeast corner to the
/// southwest corner; returns the labels earned by vertical (row) steps.
inline std::vector<int> border_row_labels(const std::vector<int>& lambda, int n) {
  const int k = static_cast<int>(lambda.size());
  int x = n - k;  // distance from the left edge
  int y = 0;      // rows passed
  std::vector<int> rows;
  for (int label = 1; label <= n; ++label) {
    if (y < k && lambda[static_cast<std::size_t>(y)] == x) {
      rows.push_back(label);
      ++y;
    } else {
      --x;
    }
  }
  return rows;
}

/// Grid model of a shifted shape: rows and columns by position, with each
/// row given as the number of boxes (left-justified).
struct Grid {
  std::vector<int> row_labels;  // top to bottom
  std::vector<int> col_labels;  // left to right
  std::vector<int> length;      // boxes per row
};

/// Builds the shifted shape for row set R by counting: positive row j has
/// one box for every column label larger than j, negative row -c has one box
/// for every column label >= c.
inline Grid grid_for(int n, const std::vector<int>& positive_rows) {
  Grid g;
  std::vector<bool> in_r(static_cast<std::size_t>(n) + 1, false);
  for (int j : positive_rows) in_r[static_cast<std::size_t>(j)] = true;
  for (int c = n; c >= 1; --c)
    if (!in_r[static_cast<std::size_t>(c)]) g.col_labels.push_back(c);
  for (int c : g.col_labels) g.row_labels.push_back(-c);
  for (int j = 1; j <= n; ++j)
    if (in_r[static_cast<std::size_t>(j)]) g.row_labels.push_back(j);
  for (int r : g.row_labels) {
    int len = 0;
    for (int c : g.col_labels) len += r > 0 ? (c > r) : (c >= -r);
    g.length.push_back(len);
  }
  return g;
}

/// Checks the three tableau rules on a grid filling (`fill[r][c]`, only
/// c < length[r] meaningful). `permutation` selects the hinge variant.
inline bool grid_valid(const Grid& g, const std::vector<std::vector<int>>& fill, bool permutation) {
  const std::size_t rows = g.row_labels.size();
  const std::size_t cols = g.col_labels.size();
  for (std::size_t c = 0; c < cols; ++c) {
    bool any = false;
    for (std::size_t r = 0; r < rows; ++r)
      if (static_cast<int>(c) < g.length[r] && fill[r][c]) any = true;
    if (!any) return false;
  }
  for (std::size_t r = 0; r < rows; ++r) {
    for (int c = 0; c < g.length[r]; ++c) {
      bool left = false, above = false;
      for (int cc = 0; cc < c; ++cc) left = left || fill[r][static_cast<std::size_t>(cc)];
      for (std::size_t rr = 0; rr < r; ++rr)
        if (c < g.length[rr]) above = above || fill[rr][static_cast<std::size_t>(c)];
      if (left && above && fill[r][static_cast<std::size_t>(c)] != (permutation ? 1 : 0))
        return false;
    }
    if (g.row_labels[r] < 0) {
      const int last = g.length[r] - 1;  // the diagonal
      if (!fill[r][static_cast<std::size_t>(last)])
        for (int c = 0; c < last; ++c)
          if (fill[r][static_cast<std::size_t>(c)]) return false;
    }
  }
  return true;
}

/// Counts valid fillings of all 2^n shapes by trying every 0/1 assignment.
inline long brute_force_count(int n, bool permutation) {
  long total = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> r;
    for (int i = 1; i <= n; ++i)
      if (mask & (1u << (i - 1))) r.push_back(i);
    const Grid g = grid_for(n, r);
    int boxes = 0;
    for (int len : g.length) boxes += len;
    for (long bits = 0; bits < (1L << boxes); ++bits) {
      std::vector<std::vector<int>> fill(g.row_labels.size(),
                                         std::vector<int>(g.col_labels.size(), 0));
      int k = 0;
      for (std::size_t row = 0; row < g.row_labels.size(); ++row)
        for (int c = 0; c < g.length[row]; ++c) fill[row][static_cast<std::size_t>(c)] = (bits >> k++) & 1;
      if (grid_valid(g, fill, permutation)) ++total;
    }
  }
  return total;
}

}  // namespace oracle
