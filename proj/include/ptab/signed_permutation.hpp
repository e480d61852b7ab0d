#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ptab {

/// Thrown when text input cannot be turned into a domain object. `where()`
/// is the 0-based character offset of the offending token, or npos when the
/// failure is not tied to one token (wrong length, repeated value, ...).
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t where = npos)
      : std::invalid_argument(what), where_(where) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t where() const noexcept { return where_; }

 private:
  std::size_t where_;
};

/// An element of the hyperoctahedral group B_n, stored as its window
/// sigma(1), ..., sigma(n). sigma(-i) is always -sigma(i).
class SignedPermutation {
 public:
  /// Validates that |window| is exactly {1..n}; throws std::invalid_argument.
  explicit SignedPermutation(std::vector<int> window);

  static SignedPermutation identity(int n);
  /// s_0 = (-1), s_i = (i, i+1) for 1 <= i < n.
  static SignedPermutation generator(int n, int i);
  /// w0 = -1, -2, ..., -n.
  static SignedPermutation longest(int n);

  int rank() const noexcept { return static_cast<int>(window_.size()); }

  /// sigma(i) for i in [+-n].
  int operator()(int i) const {
    return i > 0 ? window_[static_cast<std::size_t>(i - 1)]
                 : -window_[static_cast<std::size_t>(-i - 1)];
  }

  std::span<const int> window() const noexcept { return window_; }

  SignedPermutation inverse() const;
  bool is_identity() const noexcept;

  /// Comma separated window, e.g. "-2,-4,5,3,1".
  std::string to_string() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> window_;
};

/// (sigma tau)(i) = sigma(tau(i)). Throws std::invalid_argument on rank mismatch.
SignedPermutation compose(const SignedPermutation& sigma, const SignedPermutation& tau);

inline SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
  return compose(a, b);
}

/// Parses the comma separated window form. Whitespace is ignored.
SignedPermutation parse_window(std::string_view text, int n);
/// Same, with the rank taken from the number of entries.
SignedPermutation parse_window(std::string_view text);

/// Parses cycle notation such as "(2,-3,-1,4)(5)". Omitted positive
/// fixed points are allowed.
SignedPermutation parse_cycles(std::string_view text, int n);

/// Cycles of the full cycle notation in canonical form: every cycle starts
/// at its smallest absolute value and cycles are sorted by that value.
/// Positive fixed points appear as (i).
std::vector<std::vector<int>> full_cycles(const SignedPermutation& sigma);

std::string cycles_to_string(const std::vector<std::vector<int>>& cycles);

inline constexpr int kDefaultGroupBound = 7;

/// Visits every element of B_n once, lexicographically by window with the
/// integer order on entries (-n < ... < -1 < 1 < ... < n). Throws
/// std::out_of_range when n is outside [1, bound].
void for_each_signed_permutation(int n, const std::function<void(const SignedPermutation&)>& visit,
                                 int bound = kDefaultGroupBound);

std::vector<SignedPermutation> enumerate_group(int n, int bound = kDefaultGroupBound);

}  // namespace ptab

template <>
struct std::hash<ptab::SignedPermutation> {
  std::size_t operator()(const ptab::SignedPermutation& s) const noexcept {
    std::size_t h = 0;
    for (int v : s.window()) h = h * 31 + static_cast<std::size_t>(v + 64);
    return h;
  }
};
