#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "ptab/signed_permutation.hpp"
#include "ptab/statistics.hpp"

using namespace ptab;

namespace {

SignedPermutation W(const char* text) { return parse_window(text); }

}  // namespace

TEST(SignedPermutation, RejectsNonBijectiveWindows) {
  EXPECT_THROW(SignedPermutation({1, 1}), std::invalid_argument);
  EXPECT_THROW(SignedPermutation({1, -1}), std::invalid_argument);
  EXPECT_THROW(SignedPermutation({3, 1}), std::invalid_argument);
  EXPECT_THROW(SignedPermutation({0}), std::invalid_argument);
  EXPECT_THROW(SignedPermutation(std::vector<int>{}), std::invalid_argument);
}

TEST(SignedPermutation, NegativeArgumentsAreOdd) {
  const auto s = W("-2,-4,5,3,1");
  for (int i = 1; i <= 5; ++i) EXPECT_EQ(s(-i), -s(i));
}

TEST(SignedPermutation, ComposeWithGenerators) {
  const auto s = W("-2,-4,5,3,1");
  EXPECT_EQ(s * SignedPermutation::generator(5, 2), W("-2,5,-4,3,1"));
  EXPECT_EQ(s * SignedPermutation::identity(5), s);
  EXPECT_EQ(W("1,2") * SignedPermutation::generator(2, 0), W("-1,2"));
  EXPECT_THROW(compose(W("1,2"), W("1")), std::invalid_argument);
  EXPECT_THROW(SignedPermutation::generator(3, 3), std::out_of_range);
}

TEST(SignedPermutation, ComposeIsPointwise) {
  for (const auto& a : enumerate_group(3))
    for (const auto& b : {W("2,-1,3"), W("-3,1,-2")}) {
      const auto ab = a * b;
      for (int i = -3; i <= 3; ++i) {
        if (i == 0) continue;
        EXPECT_EQ(ab(i), a(b(i)));
      }
    }
}

TEST(SignedPermutation, InverseAndLongest) {
  for (const auto& s : enumerate_group(3)) {
    EXPECT_TRUE((s * s.inverse()).is_identity()) << s.to_string();
    EXPECT_TRUE((s.inverse() * s).is_identity()) << s.to_string();
  }
  EXPECT_EQ(SignedPermutation::longest(3), W("-1,-2,-3"));
}

TEST(Parse, WindowForms) {
  EXPECT_EQ(parse_window(" -2, -4,5 ,3,1 "), W("-2,-4,5,3,1"));
  EXPECT_EQ(parse_window("+1,2", 2), W("1,2"));
  EXPECT_EQ(W("-2,-4,5,3,1").to_string(), "-2,-4,5,3,1");
}

TEST(Parse, ErrorsCarryOffsets) {
  try {
    parse_window("1,x,3");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.where(), 2u);
  }
  try {
    parse_window("1,2,2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.where(), 4u);
  }
  EXPECT_THROW(parse_window("1,2", 3), ParseError);
  EXPECT_THROW(parse_window("1,4,2", 3), ParseError);
  EXPECT_THROW(parse_window(""), ParseError);
  EXPECT_THROW(parse_window("1,,2"), ParseError);
}

TEST(Parse, Cycles) {
  // sigma(2) = -3, sigma(3) = -1, sigma(1) = 4, sigma(4) = 2.
  EXPECT_EQ(parse_cycles("(2,-3,-1,4)", 4), W("4,-3,-1,2"));
  EXPECT_EQ(parse_cycles("(1)(-2)", 3), W("1,-2,3"));
  EXPECT_THROW(parse_cycles("(1,2", 2), ParseError);
  EXPECT_THROW(parse_cycles("(1,2)(2)", 2), ParseError);
  EXPECT_THROW(parse_cycles("(5)", 2), ParseError);
  for (const auto& s : enumerate_group(4))
    EXPECT_EQ(parse_cycles(cycles_to_string(full_cycles(s)), 4), s) << s.to_string();
}

TEST(FullCycles, CanonicalForm) {
  EXPECT_EQ(cycles_to_string(full_cycles(W("4,-2,1,-3"))), "(1,4,-3)(-2)");
  EXPECT_EQ(cycles_to_string(full_cycles(W("4,-3,-1,2"))), "(-1,4,2,-3)");
  for (const auto& s : enumerate_group(4)) {
    int prev = 0;
    for (const auto& c : full_cycles(s)) {
      const int lead = std::abs(c.front());
      EXPECT_GT(lead, prev);
      for (int v : c) EXPECT_GE(std::abs(v), lead);
      prev = lead;
    }
  }
}

TEST(BasicStats, PaperValues) {
  EXPECT_EQ(basic_stats(W("4,-2,1,-3")), (StatRecord{1, 3, 2, 2, 4}));
  EXPECT_EQ(basic_stats(W("-1,2,3")), (StatRecord{2, 1, 1, 3, 5}));
  EXPECT_EQ(basic_stats(SignedPermutation::identity(6)), (StatRecord{6, 0, 0, 6, 12}));
}

TEST(BasicStats, Identities) {
  for (int n = 1; n <= 6; ++n)
    for_each_signed_permutation(n, [&](const SignedPermutation& s) {
      const auto r = basic_stats(s);
      EXPECT_EQ(r.wex + r.drop, n);
      EXPECT_EQ(r.fwex, 2 * r.wex + r.neg);
    });
}

TEST(Alignments, PaperExample) {
  const auto s = W("-2,-4,5,3,1");
  const auto a = alignment_sets(s);
  EXPECT_EQ(a.nest.to_string(), "{(2,1),(5,4)}");
  EXPECT_EQ(a.en.to_string(), "{(1,4)}");
  EXPECT_EQ(a.ne.to_string(), "{(1,3),(2,3)}");
  EXPECT_EQ(a.total(), 5);
  EXPECT_EQ(crossing_set(s).to_string(), "{(2,3),(5,2)}");
  EXPECT_TRUE(crossing_set(s).contains(5, 2));
  EXPECT_TRUE(crossing_set(s).contains(2, 3));
  EXPECT_EQ(crossing_set(s).size(), 2);
}

TEST(Alignments, TrivialCases) {
  const auto id = alignment_sets(SignedPermutation::identity(5));
  EXPECT_EQ(id.total(), 0);
  EXPECT_EQ(crossing_set(SignedPermutation::identity(5)).size(), 0);
  EXPECT_EQ(alignment_sets(W("-1")).total(), 0);
  // -1,-2: no pair of [2]x[2] meets a crossing clause; (2,1) is a nesting.
  EXPECT_EQ(crossing_set(W("-1,-2")).to_string(), "{}");
  EXPECT_EQ(alignment_sets(W("-1,-2")).nest.to_string(), "{(2,1)}");
}

TEST(Alignments, SumTheorem) {
  for (int n = 1; n <= 6; ++n)
    for_each_signed_permutation(n, [&](const SignedPermutation& s) {
      const auto r = basic_stats(s);
      const int lhs = alignment_sets(s).total() + crossing_set(s).size();
      // (n - fwex/2)(wex - 1 + neg) + neg*wex/2, doubled to stay integral.
      const int twice = (2 * n - r.fwex) * (r.wex - 1 + r.neg) + r.neg * r.wex;
      EXPECT_EQ(twice % 2, 0) << s.to_string();
      EXPECT_EQ(2 * lhs, twice) << s.to_string();
    });
}

TEST(Inversions, Values) {
  const auto s = W("-2,-4,5,3,1");
  EXPECT_EQ(inversion_count(s), 10);
  const auto [a, b] = inversion_sets(s);
  EXPECT_EQ(a.size() + b.size(), 10);
  EXPECT_TRUE(a.contains(1, 2));
  EXPECT_TRUE(b.contains(1, 2));
  EXPECT_EQ(inversion_count(SignedPermutation::identity(4)), 0);
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(inversion_count(SignedPermutation::longest(n)), n * n);
}

TEST(Inversions, MatchCayleyDistance) {
  for (int n = 1; n <= 5; ++n) {
    const auto dist = oracle::cayley_lengths(n);
    ASSERT_EQ(dist.size(), enumerate_group(n).size());
    for (const auto& [w, d] : dist) EXPECT_EQ(inversion_count(SignedPermutation(w)), d);
  }
}

TEST(Inversions, GeneratorsChangeLengthByOne) {
  for (int n = 1; n <= 5; ++n)
    for_each_signed_permutation(n, [&](const SignedPermutation& s) {
      for (int i = 0; i < n; ++i)
        EXPECT_EQ(std::abs(inversion_count(s * SignedPermutation::generator(n, i)) -
                           inversion_count(s)),
                  1);
    });
}

TEST(Inversions, Corollary) {
  for (int n = 1; n <= 6; ++n)
    for_each_signed_permutation(n, [&](const SignedPermutation& s) {
      const auto r = basic_stats(s);
      EXPECT_EQ(inversion_count(s),
                2 * alignment_sets(s).nest.size() + crossing_set(s).size() + n - r.wex)
          << s.to_string();
    });
}

TEST(PathCycles, Rewriting) {
  EXPECT_EQ(to_string(to_path_cycle({2, -3, -1, 4})), "<2,-2,3,-3,1,4>");
  EXPECT_EQ(to_string(to_path_cycle({-2})), "<2,-2>");
  EXPECT_EQ(to_string(to_path_cycle({2})), "<2>");
  const auto id = path_cycles(SignedPermutation::identity(3));
  ASSERT_EQ(id.size(), 3u);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(id[static_cast<std::size_t>(i)].entries, std::vector<int>{i + 1});
}

TEST(PathCycles, ReassembleAndCount) {
  for (int n = 1; n <= 5; ++n)
    for_each_signed_permutation(n, [&](const SignedPermutation& s) {
      const auto pcs = path_cycles(s);
      EXPECT_EQ(static_cast<int>(pcs.size()), basic_stats(s).cyc);
      EXPECT_EQ(from_path_cycles(n, pcs), s) << s.to_string();
      for (const auto& pc : pcs) {
        std::multiset<int> abs_values;
        for (std::size_t k = 0; k < pc.entries.size(); ++k) {
          abs_values.insert(std::abs(pc.entries[k]));
          if (pc.entries[k] < 0) {
            ASSERT_GT(k, 0u);
            EXPECT_EQ(pc.entries[k - 1], -pc.entries[k]);
          }
        }
        for (int v : abs_values) EXPECT_LE(abs_values.count(v), 2u);
      }
    });
}

TEST(Enumeration, CountsAndOrder) {
  const auto one = enumerate_group(1);
  ASSERT_EQ(one.size(), 2u);
  EXPECT_EQ(one[0], W("-1"));
  EXPECT_EQ(one[1], W("1"));
  const auto three = enumerate_group(3);
  EXPECT_EQ(three.size(), 48u);
  EXPECT_TRUE(std::is_sorted(three.begin(), three.end()));
  EXPECT_EQ(std::set<SignedPermutation>(three.begin(), three.end()).size(), 48u);
  EXPECT_EQ(enumerate_group(5).size(), 3840u);
  EXPECT_THROW(enumerate_group(8), std::out_of_range);
  EXPECT_THROW(enumerate_group(0), std::out_of_range);
}
