#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "ptab/bruhat.hpp"
#include "ptab/tableau.hpp"

namespace ptab {

enum class Theorem {
  stats_dictionary,     // wex=row, crs=so, neg=diag
  alignments,           // al_nest=EE+NN, al_EN=EN, al_NE=two
  sum_al_cr,            // al+crs closed form
  inversion_formula,    // inv = 2(EE+NN)+one
  inversion_corollary,  // inv = 2 al_nest + crs + n - wex
  cycles,               // cyc = dess + zerorow on bare tableaux
  covers,               // cover surgeries against zeta^{-1}
  roundtrips,           // zeta, zeta_bare and pt_bt_convert
};

std::string to_string(Theorem t);  // "sum-al-cr"
/// Throws std::invalid_argument for an unknown id.
Theorem parse_theorem(const std::string& text);
const std::vector<Theorem>& all_theorems();

/// True when the check ranges over B_n only, without tableaux.
bool permutation_only(Theorem t);
/// 6 for permutation-only checks, 5 otherwise.
int verify_bound(Theorem t);

struct Counterexample {
  std::string window;
  std::string tableau_json;  // empty when no tableau is involved
  std::string detail;
};

struct VerificationReport {
  Theorem theorem = Theorem::stats_dictionary;
  int n = 0;
  long instances = 0;
  std::vector<Counterexample> failures;
  /// Spot values checked on top of the exhaustive run, "label: value".
  std::vector<std::string> spots;
  std::chrono::duration<double> elapsed{};

  bool passed() const noexcept { return failures.empty(); }
  std::string to_text() const;
  std::string to_json() const;
};

/// Exhaustive check of one identity at rank n. Throws std::out_of_range
/// when n is outside [1, verify_bound(t)].
VerificationReport cmd_verify(Theorem t, int n);

enum class MapDirection { pt_to_perm, perm_to_pt, bt_to_perm, perm_to_bt, pt_to_bt, bt_to_pt };

std::string to_string(MapDirection d);  // "perm-to-bt"
MapDirection parse_direction(const std::string& text);

/// A permutation given either as a window "-2,-4,5,3,1" or as cycles
/// "(2,-3,-1,4)". Cycles need n; n = 0 means "take it from the window".
SignedPermutation parse_permutation(const std::string& text, int n);

/// Maps the input and renders the image: permutations as a window line,
/// tableaux as JSON. Tableau input is JSON and must be of the source kind.
std::string cmd_map(const std::string& input, MapDirection d, int n);

enum class OutputFormat { text, json, dot };

OutputFormat parse_output_format(const std::string& text);

/// Input is a permutation (window or cycles) or a tableau JSON document.
/// Reports the statistics of the permutation and of its tableau of `kind`
/// (ignored for tableau input).
std::string cmd_stats(const std::string& input, int n, TableauKind kind, OutputFormat format);

/// Every tableau of the kind at rank n, then "count <N>" (text) or a
/// {"n","kind","count","tableaux"} document (json).
std::string cmd_enumerate(int n, TableauKind kind, OutputFormat format);

/// export_poset of build_weak_order(n); text is not accepted.
std::string cmd_poset(int n, OutputFormat format);

}  // namespace ptab
