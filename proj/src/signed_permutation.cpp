#include "ptab/signed_permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace ptab {

namespace {

void check_window(const std::vector<int>& window) {
  const int n = static_cast<int>(window.size());
  if (n < 1) throw std::invalid_argument("signed permutation must have rank >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : window) {
    const int a = std::abs(v);
    if (a < 1 || a > n)
      throw std::invalid_argument("value " + std::to_string(v) + " is outside [-" +
                                  std::to_string(n) + "," + std::to_string(n) + "]");
    if (seen[static_cast<std::size_t>(a)])
      throw std::invalid_argument("absolute value " + std::to_string(a) + " is repeated");
    seen[static_cast<std::size_t>(a)] = true;
  }
}

struct Token {
  int value;
  std::size_t offset;
};

// Splits "a,b,c" into signed integers, skipping whitespace.
std::vector<Token> split_integers(std::string_view text, std::size_t base_offset) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::size_t start = pos;
    std::string digits;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      negative = text[pos] == '-';
      ++pos;
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      digits.push_back(text[pos]);
      ++pos;
    }
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (digits.empty() || (pos < text.size() && text[pos] != ',')) {
      std::size_t bad = pos < text.size() ? pos : start;
      throw ParseError("malformed token at offset " + std::to_string(base_offset + bad),
                       base_offset + bad);
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
      throw ParseError("integer out of range at offset " + std::to_string(base_offset + start),
                       base_offset + start);
    out.push_back({negative ? -value : value, base_offset + start});
    if (pos == text.size()) break;
    ++pos;  // comma
  }
  return out;
}

void enumerate_rec(int n, std::vector<int>& window, std::vector<bool>& used,
                   const std::function<void(const SignedPermutation&)>& visit) {
  if (static_cast<int>(window.size()) == n) {
    visit(SignedPermutation(window));
    return;
  }
  for (int v = -n; v <= n; ++v) {
    if (v == 0 || used[static_cast<std::size_t>(std::abs(v))]) continue;
    used[static_cast<std::size_t>(std::abs(v))] = true;
    window.push_back(v);
    enumerate_rec(n, window, used, visit);
    window.pop_back();
    used[static_cast<std::size_t>(std::abs(v))] = false;
  }
}

}  // namespace

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
  check_window(window_);
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::generator(int n, int i) {
  if (i < 0 || i >= n)
    throw std::out_of_range("generator index " + std::to_string(i) + " outside [0," +
                            std::to_string(n - 1) + "]");
  std::vector<int> w = identity(n).window_;
  if (i == 0) {
    w[0] = -1;
  } else {
    std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
  }
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::longest(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = -(i + 1);
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> w(window_.size());
  for (int i = 1; i <= rank(); ++i) {
    const int v = (*this)(i);
    w[static_cast<std::size_t>(std::abs(v) - 1)] = v > 0 ? i : -i;
  }
  return SignedPermutation(std::move(w));
}

bool SignedPermutation::is_identity() const noexcept {
  for (int i = 0; i < rank(); ++i)
    if (window_[static_cast<std::size_t>(i)] != i + 1) return false;
  return true;
}

std::string SignedPermutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(window_[i]);
  }
  return out;
}

SignedPermutation compose(const SignedPermutation& sigma, const SignedPermutation& tau) {
  if (sigma.rank() != tau.rank())
    throw std::invalid_argument("rank mismatch: " + std::to_string(sigma.rank()) + " vs " +
                                std::to_string(tau.rank()));
  std::vector<int> w(static_cast<std::size_t>(sigma.rank()));
  for (int i = 1; i <= sigma.rank(); ++i) w[static_cast<std::size_t>(i - 1)] = sigma(tau(i));
  return SignedPermutation(std::move(w));
}

SignedPermutation parse_window(std::string_view text) {
  const auto tokens = split_integers(text, 0);
  std::vector<int> w;
  w.reserve(tokens.size());
  const int n = static_cast<int>(tokens.size());
  std::vector<bool> seen(tokens.size() + 1, false);
  for (const auto& t : tokens) {
    const int a = std::abs(t.value);
    if (a < 1 || a > n)
      throw ParseError("value " + std::to_string(t.value) + " at offset " +
                           std::to_string(t.offset) + " is outside [-" + std::to_string(n) +
                           "," + std::to_string(n) + "]",
                       t.offset);
    if (seen[static_cast<std::size_t>(a)])
      throw ParseError("repeated absolute value " + std::to_string(a) + " at offset " +
                           std::to_string(t.offset),
                       t.offset);
    seen[static_cast<std::size_t>(a)] = true;
    w.push_back(t.value);
  }
  return SignedPermutation(std::move(w));
}

SignedPermutation parse_window(std::string_view text, int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  const auto tokens = split_integers(text, 0);
  for (const auto& t : tokens) {
    if (std::abs(t.value) > n || t.value == 0)
      throw ParseError("value " + std::to_string(t.value) + " at offset " +
                           std::to_string(t.offset) + " is outside [-" + std::to_string(n) +
                           "," + std::to_string(n) + "]",
                       t.offset);
  }
  if (static_cast<int>(tokens.size()) != n)
    throw ParseError("expected " + std::to_string(n) + " entries, got " +
                     std::to_string(tokens.size()));
  return parse_window(text);
}

SignedPermutation parse_cycles(std::string_view text, int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw ParseError("empty cycle notation", 0);
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw ParseError("expected '(' at offset " + std::to_string(pos), pos);
    const std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos)
      throw ParseError("unterminated cycle starting at offset " + std::to_string(pos), pos);
    const auto tokens = split_integers(text.substr(pos + 1, close - pos - 1), pos + 1);
    for (std::size_t j = 0; j < tokens.size(); ++j) {
      const auto& t = tokens[j];
      const int a = std::abs(t.value);
      if (a < 1 || a > n)
        throw ParseError("value " + std::to_string(t.value) + " at offset " +
                             std::to_string(t.offset) + " is outside [-" + std::to_string(n) +
                             "," + std::to_string(n) + "]",
                         t.offset);
      if (w[static_cast<std::size_t>(a - 1)] != 0)
        throw ParseError("repeated absolute value " + std::to_string(a) + " at offset " +
                             std::to_string(t.offset),
                         t.offset);
      const int next = tokens[(j + 1) % tokens.size()].value;
      w[static_cast<std::size_t>(a - 1)] = next;
    }
    pos = close + 1;
  }
  for (int i = 0; i < n; ++i)
    if (w[static_cast<std::size_t>(i)] == 0) w[static_cast<std::size_t>(i)] = i + 1;
  return SignedPermutation(std::move(w));
}

std::vector<std::vector<int>> full_cycles(const SignedPermutation& sigma) {
  const int n = sigma.rank();
  std::vector<bool> done(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::vector<int>> cycles;
  for (int start = 1; start <= n; ++start) {
    if (done[static_cast<std::size_t>(start)]) continue;
    std::vector<int> abs_orbit;
    for (int b = start; !done[static_cast<std::size_t>(b)]; b = std::abs(sigma(b))) {
      done[static_cast<std::size_t>(b)] = true;
      abs_orbit.push_back(b);
    }
    // c_{j+1} = sigma(b_j); c_1 = sigma(b_m).
    std::vector<int> cycle(abs_orbit.size());
    for (std::size_t j = 0; j < abs_orbit.size(); ++j)
      cycle[(j + 1) % abs_orbit.size()] = sigma(abs_orbit[j]);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

std::string cycles_to_string(const std::vector<std::vector<int>>& cycles) {
  std::ostringstream os;
  for (const auto& c : cycles) {
    os << '(';
    for (std::size_t j = 0; j < c.size(); ++j) os << (j ? "," : "") << c[j];
    os << ')';
  }
  return os.str();
}

void for_each_signed_permutation(int n, const std::function<void(const SignedPermutation&)>& visit,
                                 int bound) {
  if (n < 1 || n > bound)
    throw std::out_of_range("rank " + std::to_string(n) + " outside [1," + std::to_string(bound) +
                            "]");
  std::vector<int> window;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  enumerate_rec(n, window, used, visit);
}

std::vector<SignedPermutation> enumerate_group(int n, int bound) {
  std::vector<SignedPermutation> out;
  for_each_signed_permutation(n, [&](const SignedPermutation& s) { out.push_back(s); }, bound);
  return out;
}

}  // namespace ptab
