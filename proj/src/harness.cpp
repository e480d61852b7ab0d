#include "ptab/harness.hpp"

#include <json.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>

#include "ptab/statistics.hpp"
#include "ptab/zigzag.hpp"

namespace ptab {

namespace {

using json = nlohmann::json;

struct TheoremName {
  Theorem id;
  const char* name;
  bool perm_only;
};

constexpr TheoremName kTheorems[] = {
    {Theorem::stats_dictionary, "stats-dictionary", false},
    {Theorem::alignments, "alignments", false},
    {Theorem::sum_al_cr, "sum-al-cr", true},
    {Theorem::inversion_formula, "inversion-formula", false},
    {Theorem::inversion_corollary, "inversion-corollary", true},
    {Theorem::cycles, "cycles", false},
    {Theorem::covers, "covers", false},
    {Theorem::roundtrips, "roundtrips", false},
};

const TheoremName& entry(Theorem t) {
  for (const auto& e : kTheorems)
    if (e.id == t) return e;
  throw std::logic_error("unknown theorem");
}

// Spot values use this element of B_5.
const char* const kSpotWindow = "-2,-4,5,3,1";

class Collector {
 public:
  explicit Collector(VerificationReport& r) : r_(r) {}

  void check(bool ok, const SignedPermutation& sigma, const TableauB* t, const std::string& detail) {
    if (ok) return;
    r_.failures.push_back({sigma.to_string(), t ? tableau_to_json(*t) : std::string(), detail});
  }

  void spot(const std::string& label, long got, long want) {
    r_.spots.push_back(label + ": " + std::to_string(got));
    if (got != want)
      r_.failures.push_back({kSpotWindow, "", label + " is " + std::to_string(got) +
                                                  ", expected " + std::to_string(want)});
  }

 private:
  VerificationReport& r_;
};

std::string eq(const char* lhs, long a, const char* rhs, long b) {
  return std::string(lhs) + "=" + std::to_string(a) + " " + rhs + "=" + std::to_string(b);
}

int bookkeeping(const TableauB& t) {
  const auto z = classify_zeros(t);
  return 2 * (z.zero_EE + z.zero_NN) + filling_stats(t).one;
}

void verify_stats_dictionary(int n, VerificationReport& r, Collector& c) {
  for_each_tableau(n, TableauKind::permutation, [&](const TableauB& t) {
    ++r.instances;
    const auto sigma = zeta(t);
    const auto b = basic_stats(sigma);
    const auto f = filling_stats(t);
    const int crs = crossing_set(sigma).size();
    c.check(b.wex == f.row, sigma, &t, eq("wex", b.wex, "row", f.row));
    c.check(crs == f.so, sigma, &t, eq("crs", crs, "so", f.so));
    c.check(b.neg == f.diag, sigma, &t, eq("neg", b.neg, "diag", f.diag));
  });
}

void verify_alignments(int n, VerificationReport& r, Collector& c) {
  for_each_tableau(n, TableauKind::permutation, [&](const TableauB& t) {
    ++r.instances;
    const auto sigma = zeta(t);
    const auto a = alignment_sets(sigma);
    const auto z = classify_zeros(t);
    const auto f = filling_stats(t);
    c.check(a.nest.size() == z.zero_EE + z.zero_NN, sigma, &t,
            eq("al_nest", a.nest.size(), "EE+NN", z.zero_EE + z.zero_NN));
    c.check(a.en.size() == z.zero_EN, sigma, &t, eq("al_EN", a.en.size(), "EN", z.zero_EN));
    c.check(a.ne.size() == f.two, sigma, &t, eq("al_NE", a.ne.size(), "two", f.two));
  });
}

// al + crs, doubled: (2n - fwex)(wex - 1 + neg) + neg * wex.
long twice_closed_form(int n, const StatRecord& s) {
  return static_cast<long>(2 * n - s.fwex) * (s.wex - 1 + s.neg) + static_cast<long>(s.neg) * s.wex;
}

void verify_sum_al_cr(int n, VerificationReport& r, Collector& c) {
  for_each_signed_permutation(n, [&](const SignedPermutation& sigma) {
    ++r.instances;
    const long lhs = alignment_sets(sigma).total() + crossing_set(sigma).size();
    const long twice = twice_closed_form(n, basic_stats(sigma));
    c.check(2 * lhs == twice, sigma, nullptr, "al+crs=" + std::to_string(lhs) +
                                                  " closed form=" + std::to_string(twice) + "/2");
  }, verify_bound(Theorem::sum_al_cr));
  if (n == 5) {
    const auto s = parse_window(kSpotWindow);
    c.spot("al+crs", alignment_sets(s).total() + crossing_set(s).size(), 7);
    c.spot("closed form", twice_closed_form(5, basic_stats(s)) / 2, 7);
  }
}

void verify_inversion_formula(int n, VerificationReport& r, Collector& c) {
  for_each_tableau(n, TableauKind::permutation, [&](const TableauB& t) {
    ++r.instances;
    const auto sigma = zeta(t);
    const int inv = inversion_count(sigma);
    const int rhs = bookkeeping(t);
    c.check(inv == rhs, sigma, &t, eq("inv", inv, "2(EE+NN)+one", rhs));
  });
  if (n == 5) {
    const auto s = parse_window(kSpotWindow);
    c.spot("inv", inversion_count(s), 10);
    c.spot("2(EE+NN)+one", bookkeeping(zeta_inverse(s)), 10);
  }
}

long corollary_rhs(int n, const SignedPermutation& s) {
  return 2L * alignment_sets(s).nest.size() + crossing_set(s).size() + n - basic_stats(s).wex;
}

void verify_inversion_corollary(int n, VerificationReport& r, Collector& c) {
  for_each_signed_permutation(n, [&](const SignedPermutation& sigma) {
    ++r.instances;
    const int inv = inversion_count(sigma);
    const long rhs = corollary_rhs(n, sigma);
    c.check(inv == rhs, sigma, nullptr, eq("inv", inv, "2al_nest+crs+n-wex", rhs));
  }, verify_bound(Theorem::inversion_corollary));
  if (n == 5) {
    const auto s = parse_window(kSpotWindow);
    c.spot("inv", inversion_count(s), 10);
    c.spot("2al_nest+crs+n-wex", corollary_rhs(5, s), 10);
  }
}

void verify_cycles(int n, VerificationReport& r, Collector& c) {
  for_each_tableau(n, TableauKind::bare, [&](const TableauB& t) {
    ++r.instances;
    const auto sigma = zeta_bare(t);
    const int cyc = basic_stats(sigma).cyc;
    const auto f = filling_stats(t);
    c.check(cyc == f.dess + f.zerorow, sigma, &t, eq("cyc", cyc, "dess+zerorow", f.dess + f.zerorow));
  });
}

void verify_covers(int n, VerificationReport& r, Collector& c) {
  for_each_tableau(n, TableauKind::permutation, [&](const TableauB& t) {
    const auto sigma = zeta(t);
    const int before = bookkeeping(t);
    for (int i = 0; i < n; ++i) {
      if (!raises_length(sigma, i)) continue;
      ++r.instances;
      const std::string gen = "s" + std::to_string(i) + ": ";
      try {
        const auto out = apply_cover(t, i);
        const auto want = zeta_inverse(sigma * SignedPermutation::generator(n, i));
        c.check(is_valid(out), sigma, &t, gen + "result is not a valid tableau");
        c.check(out == want, sigma, &t, gen + "result differs from " + tableau_to_json(want));
        const int after = bookkeeping(out);
        c.check(after == before + 1, sigma, &t, gen + eq("bookkeeping before", before, "after", after));
      } catch (const std::exception& e) {
        c.check(false, sigma, &t, gen + e.what());
      }
    }
  });
}

void verify_roundtrips(int n, VerificationReport& r, Collector& c) {
  for_each_signed_permutation(n, [&](const SignedPermutation& sigma) {
    ++r.instances;
    const auto pt = zeta_inverse(sigma);
    const auto bt = zeta_bare_inverse(sigma);
    c.check(zeta(pt) == sigma, sigma, &pt, "zeta(zeta^-1) differs");
    c.check(zeta_bare(bt) == sigma, sigma, &bt, "zeta_bare(zeta_bare^-1) differs");
    const auto pt_to_bt = pt_bt_convert(pt);
    c.check(pt_to_bt == bt, sigma, &pt, "pt->bt gives " + tableau_to_json(pt_to_bt));
    c.check(pt_bt_convert(pt_to_bt) == pt, sigma, &pt, "pt->bt->pt differs");
    c.check(pt_bt_convert(pt_bt_convert(bt)) == bt, sigma, &bt, "bt->pt->bt differs");
  });
}

bool looks_like_json(const std::string& text) {
  const auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string::npos && text[p] == '{';
}

json pairs_json(const PairSet& s) {
  json a = json::array();
  for (const auto& [i, j] : s.pairs) a.push_back({i, j});
  return a;
}

}  // namespace

std::string to_string(Theorem t) { return entry(t).name; }

Theorem parse_theorem(const std::string& text) {
  for (const auto& e : kTheorems)
    if (text == e.name) return e.id;
  throw std::invalid_argument("unknown theorem id '" + text + "'");
}

const std::vector<Theorem>& all_theorems() {
  static const std::vector<Theorem> all = [] {
    std::vector<Theorem> v;
    for (const auto& e : kTheorems) v.push_back(e.id);
    return v;
  }();
  return all;
}

bool permutation_only(Theorem t) { return entry(t).perm_only; }

int verify_bound(Theorem t) { return permutation_only(t) ? 6 : 5; }

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << to_string(theorem) << " n=" << n << " instances=" << instances
      << " failures=" << failures.size() << (passed() ? " PASS" : " FAIL") << '\n';
  for (const auto& s : spots) out << "spot " << s << '\n';
  for (const auto& f : failures) {
    out << "counterexample " << f.window << ": " << f.detail << '\n';
    if (!f.tableau_json.empty()) out << "  tableau " << f.tableau_json << '\n';
  }
  out << "elapsed " << elapsed.count() << "s\n";
  return out.str();
}

std::string VerificationReport::to_json() const {
  json doc;
  doc["theorem"] = to_string(theorem);
  doc["n"] = n;
  doc["instances"] = instances;
  doc["passed"] = passed();
  doc["spots"] = spots;
  doc["failures"] = json::array();
  for (const auto& f : failures) {
    json item{{"window", f.window}, {"detail", f.detail}};
    item["tableau"] = f.tableau_json.empty() ? json() : json::parse(f.tableau_json);
    doc["failures"].push_back(item);
  }
  doc["elapsed_seconds"] = elapsed.count();
  return doc.dump(1) + "\n";
}

VerificationReport cmd_verify(Theorem t, int n) {
  const int bound = verify_bound(t);
  if (n < 1 || n > bound)
    throw std::out_of_range(to_string(t) + ": n must be in [1, " + std::to_string(bound) + "]");
  VerificationReport r;
  r.theorem = t;
  r.n = n;
  Collector c(r);
  const auto start = std::chrono::steady_clock::now();
  switch (t) {
    case Theorem::stats_dictionary: verify_stats_dictionary(n, r, c); break;
    case Theorem::alignments: verify_alignments(n, r, c); break;
    case Theorem::sum_al_cr: verify_sum_al_cr(n, r, c); break;
    case Theorem::inversion_formula: verify_inversion_formula(n, r, c); break;
    case Theorem::inversion_corollary: verify_inversion_corollary(n, r, c); break;
    case Theorem::cycles: verify_cycles(n, r, c); break;
    case Theorem::covers: verify_covers(n, r, c); break;
    case Theorem::roundtrips: verify_roundtrips(n, r, c); break;
  }
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

namespace {

struct DirectionName {
  MapDirection id;
  const char* name;
};

constexpr DirectionName kDirections[] = {
    {MapDirection::pt_to_perm, "pt-to-perm"}, {MapDirection::perm_to_pt, "perm-to-pt"},
    {MapDirection::bt_to_perm, "bt-to-perm"}, {MapDirection::perm_to_bt, "perm-to-bt"},
    {MapDirection::pt_to_bt, "pt-to-bt"},     {MapDirection::bt_to_pt, "bt-to-pt"},
};

TableauB read_tableau(const std::string& input, TableauKind kind) {
  if (!looks_like_json(input)) throw ParseError("expected a tableau JSON document", 0);
  auto t = tableau_from_json(input);
  if (t.kind() != kind)
    throw std::invalid_argument("expected a " + to_string(kind) + " tableau, got " +
                                to_string(t.kind()));
  return t;
}

}  // namespace

std::string to_string(MapDirection d) {
  for (const auto& e : kDirections)
    if (e.id == d) return e.name;
  throw std::logic_error("unknown direction");
}

MapDirection parse_direction(const std::string& text) {
  for (const auto& e : kDirections)
    if (text == e.name) return e.id;
  throw std::invalid_argument("unknown direction '" + text + "'");
}

SignedPermutation parse_permutation(const std::string& text, int n) {
  const auto p = text.find_first_not_of(" \t\r\n");
  if (p != std::string::npos && text[p] == '(') {
    if (n < 1) throw std::invalid_argument("cycle notation needs the rank n");
    return parse_cycles(text, n);
  }
  return n > 0 ? parse_window(text, n) : parse_window(text);
}

std::string cmd_map(const std::string& input, MapDirection d, int n) {
  switch (d) {
    case MapDirection::pt_to_perm:
      return zeta(read_tableau(input, TableauKind::permutation)).to_string() + "\n";
    case MapDirection::bt_to_perm:
      return zeta_bare(read_tableau(input, TableauKind::bare)).to_string() + "\n";
    case MapDirection::perm_to_pt:
      return tableau_to_json(zeta_inverse(parse_permutation(input, n))) + "\n";
    case MapDirection::perm_to_bt:
      return tableau_to_json(zeta_bare_inverse(parse_permutation(input, n))) + "\n";
    case MapDirection::pt_to_bt:
      return tableau_to_json(pt_bt_convert(read_tableau(input, TableauKind::permutation))) + "\n";
    case MapDirection::bt_to_pt:
      return tableau_to_json(pt_bt_convert(read_tableau(input, TableauKind::bare))) + "\n";
  }
  throw std::logic_error("unknown direction");
}

OutputFormat parse_output_format(const std::string& text) {
  if (text == "text") return OutputFormat::text;
  if (text == "json") return OutputFormat::json;
  if (text == "dot") return OutputFormat::dot;
  throw std::invalid_argument("unknown format '" + text + "'");
}

std::string cmd_stats(const std::string& input, int n, TableauKind kind, OutputFormat format) {
  if (format == OutputFormat::dot) throw std::invalid_argument("stats has no dot output");
  std::optional<TableauB> t;
  std::optional<SignedPermutation> sigma;
  if (looks_like_json(input)) {
    t = tableau_from_json(input);
    sigma = t->kind() == TableauKind::permutation ? zeta(*t) : zeta_bare(*t);
  } else {
    sigma = parse_permutation(input, n);
    t = kind == TableauKind::permutation ? zeta_inverse(*sigma) : zeta_bare_inverse(*sigma);
  }
  const auto b = basic_stats(*sigma);
  const auto a = alignment_sets(*sigma);
  const auto crs = crossing_set(*sigma);
  const int inv = inversion_count(*sigma);
  const auto f = filling_stats(*t);
  const auto z = classify_zeros(*t);

  if (format == OutputFormat::json) {
    json doc;
    doc["window"] = sigma->to_string();
    doc["cycles"] = cycles_to_string(full_cycles(*sigma));
    doc["stats"] = {{"wex", b.wex}, {"drop", b.drop}, {"neg", b.neg}, {"cyc", b.cyc}, {"fwex", b.fwex}};
    doc["inv"] = inv;
    doc["al"] = a.total();
    doc["crs"] = crs.size();
    doc["nest"] = pairs_json(a.nest);
    doc["en"] = pairs_json(a.en);
    doc["ne"] = pairs_json(a.ne);
    doc["crossings"] = pairs_json(crs);
    doc["tableau"] = json::parse(tableau_to_json(*t));
    doc["filling"] = {{"one", f.one}, {"two", f.two}, {"so", f.so}, {"dess", f.dess},
                      {"row", f.row}, {"zerorow", f.zerorow}, {"col", f.col}, {"diag", f.diag}};
    doc["zeros"] = {{"EE", z.zero_EE}, {"NN", z.zero_NN}, {"EN", z.zero_EN}, {"nontyped", z.nontyped}};
    return doc.dump(1) + "\n";
  }

  std::ostringstream out;
  out << "window " << sigma->to_string() << '\n'
      << "cycles " << cycles_to_string(full_cycles(*sigma)) << '\n'
      << "wex=" << b.wex << " drop=" << b.drop << " neg=" << b.neg << " cyc=" << b.cyc
      << " fwex=" << b.fwex << '\n'
      << "inv=" << inv << '\n'
      << "nest=" << a.nest.to_string() << '\n'
      << "en=" << a.en.to_string() << '\n'
      << "ne=" << a.ne.to_string() << '\n'
      << "al=" << a.total() << '\n'
      << "crossings=" << crs.to_string() << '\n'
      << "crs=" << crs.size() << '\n'
      << to_string(t->kind()) << " tableau\n"
      << t->to_string()
      << "one=" << f.one << " two=" << f.two << " so=" << f.so << " dess=" << f.dess
      << " row=" << f.row << " zerorow=" << f.zerorow << " col=" << f.col << " diag=" << f.diag << '\n'
      << "zero_EE=" << z.zero_EE << " zero_NN=" << z.zero_NN << " zero_EN=" << z.zero_EN
      << " nontyped=" << z.nontyped << '\n';
  return out.str();
}

std::string cmd_enumerate(int n, TableauKind kind, OutputFormat format) {
  if (format == OutputFormat::dot) throw std::invalid_argument("enumerate has no dot output");
  const auto all = enumerate_tableaux(n, kind, kDefaultTableauBound - 1);
  if (format == OutputFormat::json) {
    json doc{{"n", n}, {"kind", to_string(kind)}, {"count", all.size()}};
    doc["tableaux"] = json::array();
    for (const auto& t : all) doc["tableaux"].push_back(json::parse(tableau_to_json(t)));
    return doc.dump(1) + "\n";
  }
  std::ostringstream out;
  for (const auto& t : all) out << tableau_to_json(t) << '\n';
  out << "count " << all.size() << '\n';
  return out.str();
}

std::string cmd_poset(int n, OutputFormat format) {
  if (format == OutputFormat::text) throw std::invalid_argument("poset needs --format dot or json");
  return export_poset(build_weak_order(n),
                      format == OutputFormat::dot ? PosetFormat::dot : PosetFormat::json);
}

}  // namespace ptab
