#include "ptab/statistics.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace ptab {

namespace {

PairSet make_set(PairKind kind, std::vector<std::pair<int, int>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return PairSet{kind, std::move(pairs)};
}

template <typename Pred>
PairSet scan_pairs(const SignedPermutation& s, PairKind kind, Pred pred) {
  std::vector<std::pair<int, int>> out;
  const int n = s.rank();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (pred(i, j)) out.emplace_back(i, j);
  return make_set(kind, std::move(out));
}

}  // namespace

StatRecord basic_stats(const SignedPermutation& sigma) {
  StatRecord r;
  for (int i = 1; i <= sigma.rank(); ++i) {
    const int v = sigma(i);
    if (v >= i)
      ++r.wex;
    else
      ++r.drop;
    if (v < 0) ++r.neg;
  }
  r.cyc = static_cast<int>(full_cycles(sigma).size());
  r.fwex = 2 * r.wex + r.neg;
  return r;
}

std::string to_string(PairKind kind) {
  switch (kind) {
    case PairKind::nest: return "nest";
    case PairKind::en: return "EN";
    case PairKind::ne: return "NE";
    case PairKind::crossing: return "crossing";
    case PairKind::inversion_a: return "inversion-A";
    case PairKind::inversion_b: return "inversion-B";
  }
  return "?";
}

bool PairSet::contains(int i, int j) const {
  return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(i, j));
}

std::string PairSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < pairs.size(); ++k)
    os << (k ? "," : "") << '(' << pairs[k].first << ',' << pairs[k].second << ')';
  os << '}';
  return os.str();
}

AlignmentSets alignment_sets(const SignedPermutation& s) {
  auto nest = scan_pairs(s, PairKind::nest, [&](int i, int j) {
    const int si = s(i), sj = s(j);
    return (-i < -j && -j < -sj && -sj < -si) || (-i < j && j <= sj && sj < -si) ||
           (i < j && j <= sj && sj < si);
  });
  auto en = scan_pairs(s, PairKind::en, [&](int i, int j) {
    const int si = s(i), sj = s(j);
    return (-i < 0 && 0 < -si && -si < sj && sj < j) || (i <= si && si < sj && sj < j);
  });
  auto ne = scan_pairs(s, PairKind::ne, [&](int i, int j) {
    const int si = s(i), sj = s(j);
    return si < i && i < j && j <= sj;
  });
  return {std::move(nest), std::move(en), std::move(ne)};
}

PairSet crossing_set(const SignedPermutation& s) {
  return scan_pairs(s, PairKind::crossing, [&](int i, int j) {
    const int si = s(i), sj = s(j);
    return (i < j && j <= si && si < sj) || (-i < -j && -j < -si && -si < -sj) ||
           (-i < j && j <= -si && -si < sj);
  });
}

std::pair<PairSet, PairSet> inversion_sets(const SignedPermutation& s) {
  auto a = scan_pairs(s, PairKind::inversion_a, [&](int i, int j) { return i < j && s(i) > s(j); });
  auto b = scan_pairs(s, PairKind::inversion_b, [&](int i, int j) { return i <= j && s(-i) > s(j); });
  return {std::move(a), std::move(b)};
}

int inversion_count(const SignedPermutation& s) {
  const int n = s.rank();
  int count = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      if (i < j && s(i) > s(j)) ++count;
      if (s(-i) > s(j)) ++count;
    }
  return count;
}

PathCycle to_path_cycle(const std::vector<int>& cycle) {
  PathCycle out;
  const std::size_t m = cycle.size();
  for (std::size_t x = 0; x < m; ++x) {
    const int a = std::abs(cycle[x]);
    out.entries.push_back(a);
    if (cycle[(x + 1) % m] < 0) out.entries.push_back(-a);
  }
  return out;
}

std::vector<PathCycle> path_cycles(const SignedPermutation& sigma) {
  std::vector<PathCycle> out;
  for (const auto& c : full_cycles(sigma)) out.push_back(to_path_cycle(c));
  return out;
}

SignedPermutation from_path_cycles(int n, const std::vector<PathCycle>& cycles) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  for (const auto& pc : cycles) {
    // Group into (a, followed_by_negative) items.
    std::vector<std::pair<int, bool>> items;
    for (std::size_t k = 0; k < pc.entries.size(); ++k) {
      const int v = pc.entries[k];
      if (v <= 0 || v > n)
        throw std::invalid_argument("path cycle " + to_string(pc) + " has a misplaced entry " +
                                    std::to_string(v));
      const bool paired = k + 1 < pc.entries.size() && pc.entries[k + 1] == -v;
      items.emplace_back(v, paired);
      if (paired) ++k;
    }
    if (items.empty()) throw std::invalid_argument("empty path cycle");
    const std::size_t m = items.size();
    for (std::size_t x = 0; x < m; ++x) {
      const int a = items[x].first;
      const auto& next = items[(x + 1) % m];
      if (w[static_cast<std::size_t>(a - 1)] != 0)
        throw std::invalid_argument("value " + std::to_string(a) + " appears twice");
      w[static_cast<std::size_t>(a - 1)] = items[x].second ? -next.first : next.first;
    }
  }
  for (int v : w)
    if (v == 0) throw std::invalid_argument("path cycles do not cover [n]");
  return SignedPermutation(std::move(w));
}

std::string to_string(const PathCycle& cycle) {
  std::ostringstream os;
  os << '<';
  for (std::size_t k = 0; k < cycle.entries.size(); ++k) os << (k ? "," : "") << cycle.entries[k];
  os << '>';
  return os.str();
}

}  // namespace ptab
