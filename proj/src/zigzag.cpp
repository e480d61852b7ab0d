#include "ptab/zigzag.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace ptab {

std::string to_string(const Endpoint& e) {
  return (e.is_row() ? "row " : "col ") + std::to_string(e.label);
}

std::string ZigzagTrace::dump() const {
  std::ostringstream os;
  for (const auto& s : steps)
    os << to_string(s.box) << ' ' << (s.heading == Direction::east ? "east" : "south") << '\n';
  os << "end=" << end.label << '\n';
  return os.str();
}

ZigzagTrace zigzag_path(const TableauB& t, const Endpoint& start) {
  const auto& shape = t.shape();
  ZigzagTrace trace{start, {}, start};
  BoxAddr box;
  Direction dir;
  if (start.is_row()) {
    if (!shape.is_row(start.label))
      throw std::invalid_argument("no row labeled " + std::to_string(start.label));
    const auto cols = shape.row_boxes(start.label);
    if (cols.empty()) return trace;
    box = {start.label, cols.front()};
    dir = Direction::east;
  } else {
    if (!shape.is_column(start.label))
      throw std::invalid_argument("no column labeled " + std::to_string(start.label));
    box = {-start.label, start.label};
    dir = Direction::south;
  }
  const std::size_t limit = 2 * static_cast<std::size_t>(shape.box_count()) + 1;
  while (true) {
    trace.steps.push_back({box, dir});
    if (trace.steps.size() > limit) throw std::logic_error("zigzag walk does not terminate");
    if (t.at(box)) dir = dir == Direction::east ? Direction::south : Direction::east;
    const auto next = dir == Direction::east ? shape.east_of(box) : shape.south_of(box);
    if (!next) {
      trace.end = dir == Direction::east ? Endpoint::row(box.row) : Endpoint::column(box.col);
      return trace;
    }
    box = *next;
  }
}

SignedPermutation zeta_unchecked(const TableauB& t) {
  const auto& shape = t.shape();
  std::vector<int> w(static_cast<std::size_t>(t.n()));
  for (int i = 1; i <= t.n(); ++i) {
    int v;
    if (shape.is_row(i)) {
      v = zigzag_path(t, Endpoint::row(i)).end.label;
    } else if (t.at(-i, i) == 0) {
      v = zigzag_path(t, Endpoint::column(i)).end.label;
    } else {
      v = -zigzag_path(t, Endpoint::row(-i)).end.label;
    }
    w[static_cast<std::size_t>(i - 1)] = v;
  }
  return SignedPermutation(std::move(w));
}

namespace {

void require(const TableauB& t, TableauKind kind) {
  if (t.kind() != kind)
    throw std::invalid_argument("expected a " + to_string(kind) + " tableau, got " +
                                to_string(t.kind()));
  const auto v = validate(t);
  if (!v.empty())
    throw std::invalid_argument("invalid " + to_string(kind) + " tableau: " + v.front().to_string());
}

}  // namespace

SignedPermutation zeta(const TableauB& t) {
  require(t, TableauKind::permutation);
  return zeta_unchecked(t);
}

SignedPermutation zeta_bare(const TableauB& t) {
  require(t, TableauKind::bare);
  return zeta_unchecked(t);
}

std::string to_string(ZeroType type) {
  switch (type) {
    case ZeroType::EE: return "EE";
    case ZeroType::NN: return "NN";
    case ZeroType::EN: return "EN";
    case ZeroType::nontyped: return "nontyped";
  }
  return "?";
}

ZeroType ZeroTypeMap::type_at(const BoxAddr& b) const {
  for (const auto& e : entries)
    if (e.box == b) return e.type;
  throw std::out_of_range("no 0 at " + to_string(b));
}

ZeroTypeMap classify_zeros(const TableauB& t) {
  const auto& shape = t.shape();
  const auto& boxes = shape.boxes();
  const auto& fill = t.fill();
  std::vector<Endpoint> h(boxes.size()), v(boxes.size());
  // Reading order visits west and north neighbours first.
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    const auto& b = boxes[k];
    if (auto w = shape.west_of(b)) {
      const auto kw = static_cast<std::size_t>(shape.box_index(*w));
      h[k] = fill[kw] ? v[kw] : h[kw];
    } else {
      h[k] = Endpoint::row(b.row);
    }
    if (auto up = shape.north_of(b)) {
      const auto ku = static_cast<std::size_t>(shape.box_index(*up));
      v[k] = fill[ku] ? h[ku] : v[ku];
    } else {
      v[k] = Endpoint::column(b.col);
    }
  }

  std::set<int> zero_negative_rows;
  for (int r : shape.rows()) {
    if (r > 0) continue;
    bool any = false;
    for (int c : shape.row_boxes(r)) any = any || t.at(r, c);
    if (!any) zero_negative_rows.insert(r);
  }

  ZeroTypeMap out;
  std::set<std::pair<Endpoint, Endpoint>> crossings;
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    if (fill[k]) continue;
    ZeroType type;
    if (h[k].is_row() && v[k].is_row()) {
      type = ZeroType::EE;
      ++out.zero_EE;
    } else if (!h[k].is_row() && !v[k].is_row()) {
      type = ZeroType::NN;
      ++out.zero_NN;
    } else if (zero_negative_rows.count(boxes[k].row)) {
      type = ZeroType::nontyped;
      ++out.nontyped;
    } else {
      type = ZeroType::EN;
      ++out.zero_EN;
    }
    auto key = std::minmax(h[k], v[k]);
    if (!crossings.insert(key).second) out.repeated_crossing = true;
    out.entries.push_back({boxes[k], type, h[k], v[k]});
  }
  return out;
}

namespace {

using InverseIndex = std::unordered_map<SignedPermutation, TableauB>;

std::shared_ptr<const InverseIndex> inverse_index(int n, int bound) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const InverseIndex>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto index = std::make_shared<InverseIndex>();
  for_each_tableau(
      n, TableauKind::permutation,
      [&](const TableauB& t) {
        if (!index->emplace(zeta_unchecked(t), t).second)
          throw std::logic_error("zeta is not injective at rank " + std::to_string(n));
      },
      bound);
  cache.emplace(n, index);
  return index;
}

}  // namespace

TableauB zeta_inverse(const SignedPermutation& sigma, int bound) {
  const int n = sigma.rank();
  if (n > bound)
    throw std::out_of_range("rank " + std::to_string(n) + " exceeds the inverse bound " +
                            std::to_string(bound));
  const auto index = inverse_index(n, bound);
  const auto it = index->find(sigma);
  if (it == index->end()) throw std::logic_error("no tableau maps to " + sigma.to_string());
  const TableauB& t = it->second;
  std::vector<int> wex_set;
  for (int i = 1; i <= n; ++i)
    if (sigma(i) >= i) wex_set.push_back(i);
  if (t.shape().positive_rows() != wex_set)
    throw std::logic_error("row labels of the preimage of " + sigma.to_string() +
                           " differ from its weak excedances");
  for (int c : t.shape().columns())
    if ((t.at(-c, c) == 1) != (sigma(c) < 0))
      throw std::logic_error("diagonal of row " + std::to_string(-c) + " disagrees with the sign of " +
                             sigma.to_string());
  return t;
}

std::vector<BoxAddr> bare_one_boxes(const SignedPermutation& sigma) {
  std::vector<BoxAddr> v;
  std::vector<std::vector<int>> work;
  for (auto& pc : path_cycles(sigma)) work.push_back(std::move(pc.entries));
  std::reverse(work.begin(), work.end());
  while (!work.empty()) {
    std::vector<int> a = std::move(work.back());
    work.pop_back();
    const std::size_t l = a.size();
    if (l <= 1) continue;
    const auto i = static_cast<std::size_t>(std::min_element(a.begin(), a.end()) - a.begin());
    const auto j = static_cast<std::size_t>(std::max_element(a.begin(), a.end()) - a.begin());
    if (std::count(a.begin(), a.end(), a[i]) != 1 || std::count(a.begin(), a.end(), a[j]) != 1)
      throw std::logic_error("path cycle has a repeated extreme entry");
    v.push_back({a[i], a[j]});
    // 0-based i, j; the two pieces follow the 1-based recipe.
    std::vector<int> first, second;
    if (i < j) {
      first.assign(a.begin() + static_cast<long>(i) + 1, a.begin() + static_cast<long>(j) + 1);
      second.assign(a.begin(), a.begin() + static_cast<long>(i) + 1);
      second.insert(second.end(), a.begin() + static_cast<long>(j) + 1, a.end());
    } else {
      first.assign(a.begin(), a.begin() + static_cast<long>(j) + 1);
      first.insert(first.end(), a.begin() + static_cast<long>(i) + 1, a.end());
      second.assign(a.begin() + static_cast<long>(j) + 1, a.begin() + static_cast<long>(i) + 1);
    }
    work.push_back(std::move(second));
    work.push_back(std::move(first));
  }
  return v;
}

TableauB zeta_bare_inverse(const SignedPermutation& sigma) {
  std::vector<int> wex_set;
  for (int i = 1; i <= sigma.rank(); ++i)
    if (sigma(i) >= i) wex_set.push_back(i);
  ShiftedShape shape(sigma.rank(), wex_set);
  const auto ones = bare_one_boxes(sigma);
  for (const auto& b : ones)
    if (!shape.has_box(b))
      throw std::logic_error("path-cycle box " + to_string(b) + " for " + sigma.to_string() +
                             " is outside the shape");
  TableauB t = TableauB::from_ones(std::move(shape), TableauKind::bare, ones);
  const auto violations = validate(t);
  if (!violations.empty())
    throw std::logic_error("bare tableau built for " + sigma.to_string() + " breaks " +
                           violations.front().to_string());
  return t;
}

TableauB pt_bt_convert(const TableauB& t, int bound) {
  if (t.kind() == TableauKind::permutation) return zeta_bare_inverse(zeta(t));
  return zeta_inverse(zeta_bare(t), bound);
}

}  // namespace ptab
