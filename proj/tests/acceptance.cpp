// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if
// any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ptab/bruhat.hpp"
#include "ptab/harness.hpp"
#include "ptab/statistics.hpp"
#include "ptab/zigzag.hpp"

using namespace ptab;

namespace {

// Collects the first few mismatches of a criterion.
struct Check {
  long instances = 0;
  long failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++instances;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
};

long group_order(int n) {
  long order = 1;
  for (int k = 1; k <= n; ++k) order *= 2 * k;
  return order;
}

oracle::Window win(const SignedPermutation& s) { return {s.window().begin(), s.window().end()}; }

int bookkeeping(const TableauB& t) {
  const auto z = classify_zeros(t);
  return 2 * (z.zero_EE + z.zero_NN) + filling_stats(t).one;
}

void bijection_counts(Check& c) {
  for (int n = 1; n <= 5; ++n)
    for (auto kind : {TableauKind::permutation, TableauKind::bare}) {
      const auto all = enumerate_tableaux(n, kind);
      const std::string tag = "n=" + std::to_string(n) + " " + to_string(kind);
      c.expect(static_cast<long>(all.size()) == group_order(n),
               tag + ": " + std::to_string(all.size()) + " tableaux");
      if (n <= 4)
        c.expect(oracle::brute_force_count(n, kind == TableauKind::permutation) == group_order(n),
                 tag + ": brute-force count differs");
      std::set<SignedPermutation> images;
      for (const auto& t : all) {
        c.expect(is_valid(t), tag + ": invalid tableau " + tableau_to_json(t));
        images.insert(kind == TableauKind::permutation ? zeta(t) : zeta_bare(t));
      }
      c.expect(static_cast<long>(images.size()) == group_order(n), tag + ": map is not injective");
      c.expect(images.begin()->rank() == n && std::prev(images.end())->rank() == n,
               tag + ": image has the wrong rank");
    }
}

void roundtrips(Check& c) {
  for (int n = 1; n <= 5; ++n)
    for_each_signed_permutation(n, [&](const SignedPermutation& s) {
      c.expect(zeta(zeta_inverse(s)) == s, "zeta roundtrip at " + s.to_string());
      c.expect(zeta_bare(zeta_bare_inverse(s)) == s, "zeta_bare roundtrip at " + s.to_string());
    });
  for (int n = 1; n <= 4; ++n)
    for (auto kind : {TableauKind::permutation, TableauKind::bare})
      for (const auto& t : enumerate_tableaux(n, kind)) {
        const auto other = pt_bt_convert(t);
        c.expect(other.kind() != t.kind() && pt_bt_convert(other) == t,
                 "pt_bt_convert roundtrip at " + tableau_to_json(t));
      }
}

void statistics_dictionary(Check& c) {
  for (int n = 1; n <= 5; ++n)
    for_each_tableau(n, TableauKind::permutation, [&](const TableauB& t) {
      const auto s = zeta(t);
      const auto b = basic_stats(s);
      const auto a = alignment_sets(s);
      const auto f = filling_stats(t);
      const auto z = classify_zeros(t);
      const std::string at = " at " + s.to_string();
      c.expect(b.wex == f.row, "wex != row" + at);
      c.expect(crossing_set(s).size() == f.so, "crs != so" + at);
      c.expect(a.nest.size() == z.zero_EE + z.zero_NN, "al_nest != EE+NN" + at);
      c.expect(a.en.size() == z.zero_EN, "al_EN != EN" + at);
      c.expect(a.ne.size() == f.two, "al_NE != two" + at);
      c.expect(f.diag == b.neg, "diag != neg" + at);
    });
}

void sum_theorem(Check& c) {
  long visited = 0;
  for (int n = 1; n <= 6; ++n)
    for_each_signed_permutation(n, [&](const SignedPermutation& s) {
      ++visited;
      const auto r = basic_stats(s);
      const long lhs = alignment_sets(s).total() + crossing_set(s).size();
      const long twice = static_cast<long>(2 * n - r.fwex) * (r.wex - 1 + r.neg) + r.neg * r.wex;
      c.expect(2 * lhs == twice, "al+crs closed form fails at " + s.to_string());
    });
  const auto s = parse_window("-2,-4,5,3,1");
  c.expect(alignment_sets(s).total() + crossing_set(s).size() == 7, "spot value is not 7");
  const auto at6 = cmd_verify(Theorem::sum_al_cr, 6);
  c.expect(at6.instances == 46080 && at6.passed(), "harness sum-al-cr at n=6");
  c.expect(visited - 3840 - 384 - 48 - 8 - 2 == 46080, "n=6 did not cover 46080 elements");
}

void inversion_formulas(Check& c) {
  for (int n = 1; n <= 5; ++n)
    for_each_tableau(n, TableauKind::permutation, [&](const TableauB& t) {
      const auto s = zeta(t);
      c.expect(inversion_count(s) == bookkeeping(t), "inv != 2(EE+NN)+one at " + s.to_string());
    });
  for (int n = 1; n <= 6; ++n)
    for_each_signed_permutation(n, [&](const SignedPermutation& s) {
      c.expect(inversion_count(s) == 2 * alignment_sets(s).nest.size() + crossing_set(s).size() + n -
                                         basic_stats(s).wex,
               "inv != 2al_nest+crs+n-wex at " + s.to_string());
    });
  const auto t = fixtures::sigma_example();
  const auto s = zeta(t);
  const auto z = classify_zeros(t);
  c.expect(s == parse_window("-2,-4,5,3,1"), "figure tableau does not map to -2,-4,5,3,1");
  c.expect(z.zero_EE == 1 && z.zero_NN == 1 && filling_stats(t).one == 6, "figure counts 1, 1, 6");
  c.expect(inversion_count(s) == 10, "inv spot value is not 10");
  c.expect(alignment_sets(s).nest.size() == 2 && crossing_set(s).size() == 2 &&
               basic_stats(s).wex == 1,
           "corollary terms 2, 2, 1");
}

void length_oracle(Check& c) {
  for (int n = 1; n <= 4; ++n) {
    const auto dist = oracle::cayley_lengths(n);
    c.expect(static_cast<long>(dist.size()) == group_order(n), "BFS missed elements");
    for (const auto& [w, d] : dist) {
      const SignedPermutation s(w);
      c.expect(inversion_count(s) == d, "inv != BFS distance at " + s.to_string());
    }
  }
}

void cover_surgery(Check& c) {
  for (int n = 1; n <= 4; ++n)
    for_each_tableau(n, TableauKind::permutation, [&](const TableauB& t) {
      const auto s = zeta(t);
      for (int i = 0; i < n; ++i) {
        const auto up = oracle::times_generator(win(s), i);
        const SignedPermutation target(up);
        if (inversion_count(target) != inversion_count(s) + 1) continue;
        const std::string at = " at " + s.to_string() + " s" + std::to_string(i);
        try {
          const auto out = apply_cover(t, i);
          c.expect(is_valid(out), "invalid result" + at);
          c.expect(out == zeta_inverse(target), "result differs from zeta^-1" + at);
          c.expect(bookkeeping(out) == bookkeeping(t) + 1, "bookkeeping does not rise by 1" + at);
        } catch (const std::exception& e) {
          c.expect(false, std::string(e.what()) + at);
        }
      }
    });
  const auto fix = apply_cover_detailed(fixtures::fixup_before(), 2);
  c.expect(fix.move.fixup, "figure cover did not run the fixup");
  c.expect(fix.tableau == fixtures::fixup_after(), "figure cover result differs");
}

void cycle_theorem(Check& c) {
  for (int n = 1; n <= 5; ++n)
    for_each_tableau(n, TableauKind::bare, [&](const TableauB& t) {
      const auto f = filling_stats(t);
      c.expect(basic_stats(zeta_bare(t)).cyc == f.dess + f.zerorow,
               "cyc != dess+zerorow at " + zeta_bare(t).to_string());
    });
  const auto s = parse_cycles("(2,-3,-1,4)", 4);
  const std::vector<BoxAddr> v{{-3, 4}, {1, 4}, {-3, 3}, {-2, 3}, {-2, 2}};
  c.expect(bare_one_boxes(s) == v, "V-set differs");
  c.expect(zeta_bare_inverse(s) == fixtures::path_cycle_example(), "bare tableau differs");
}

void structural_counts(Check& c) {
  for (int n = 1; n <= 5; ++n)
    for_each_tableau(n, TableauKind::permutation, [&](const TableauB& t) {
      const auto z = classify_zeros(t);
      const auto f = filling_stats(t);
      const int m = f.col;
      const std::string at = " at " + zeta(t).to_string();
      c.expect(z.zero() + z.nontyped + f.one + f.two == m * (2 * n - m + 1) / 2, "cell total" + at);
      const int d = f.col - f.diag;
      c.expect(2 * z.nontyped == d * (d + 1), "nontyped count" + at);
    });
}

void weak_order(Check& c) {
  for (int n = 1; n <= 4; ++n) {
    const auto p = build_weak_order(n);
    const std::string tag = "n=" + std::to_string(n);
    c.expect(static_cast<long>(p.elements.size()) == group_order(n), tag + ": element count");
    std::vector<int> in(p.elements.size(), 0), out(p.elements.size(), 0);
    for (const auto& e : p.edges) {
      ++out[static_cast<std::size_t>(e.from)];
      ++in[static_cast<std::size_t>(e.to)];
      c.expect(p.length[static_cast<std::size_t>(e.to)] == p.length[static_cast<std::size_t>(e.from)] + 1,
               tag + ": edge does not raise rank by 1");
    }
    int bottoms = 0, tops = 0;
    for (std::size_t k = 0; k < p.elements.size(); ++k) {
      c.expect(p.length[k] == inversion_count(p.elements[k]), tag + ": rank != inv");
      if (in[k] == 0) {
        ++bottoms;
        c.expect(p.elements[k].is_identity(), tag + ": bottom is not the identity");
      }
      if (out[k] == 0) {
        ++tops;
        c.expect(p.length[k] == n * n, tag + ": top rank is not n^2");
      }
    }
    c.expect(bottoms == 1 && tops == 1, tag + ": bottom/top not unique");
    for (auto f : {PosetFormat::dot, PosetFormat::json})
      c.expect(import_poset(export_poset(p, f), f) == p, tag + ": export does not re-import");
  }
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Check&)> run;
  double limit_seconds;  // 0 = no limit
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "bijection counts", bijection_counts, 10.0},
      {2, "roundtrips", roundtrips, 0},
      {3, "statistics dictionary", statistics_dictionary, 0},
      {4, "al+crs closed form", sum_theorem, 30.0},
      {5, "inversion formula and corollary", inversion_formulas, 0},
      {6, "length oracle", length_oracle, 0},
      {7, "cover surgery", cover_surgery, 0},
      {8, "cycle count", cycle_theorem, 0},
      {9, "structural counts", structural_counts, 0},
      {10, "weak order poset", weak_order, 0},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    if (cr.limit_seconds > 0 && took.count() > cr.limit_seconds)
      c.expect(false, "took " + std::to_string(took.count()) + "s");
    const bool ok = c.failures == 0;
    failed += !ok;
    std::printf("%s criterion %d (%s): %ld checks, %ld failures, %.3fs%s%s\n", ok ? "PASS" : "FAIL",
                cr.id, cr.name, c.instances, c.failures, took.count(), ok ? "" : ", first: ",
                ok ? "" : c.first.c_str());
  }
  return failed == 0 ? 0 : 1;
}
