#include "ptab/bruhat.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "ptab/statistics.hpp"
#include "ptab/zigzag.hpp"

namespace ptab {

bool raises_length(const SignedPermutation& sigma, int i) {
  if (i < 0 || i >= sigma.rank())
    throw std::out_of_range("generator s_" + std::to_string(i) + " outside B_" +
                            std::to_string(sigma.rank()));
  return i == 0 ? sigma(1) > 0 : sigma(i) < sigma(i + 1);
}

std::vector<std::pair<int, SignedPermutation>> weak_covers(const SignedPermutation& sigma) {
  std::vector<std::pair<int, SignedPermutation>> out;
  for (int i = 0; i < sigma.rank(); ++i)
    if (raises_length(sigma, i))
      out.emplace_back(i, sigma * SignedPermutation::generator(sigma.rank(), i));
  return out;
}

namespace {

constexpr const char* kCaseNames[] = {"WB1",   "WB2",   "WB3",   "WB4-1", "WB4-2",
                                      "WB5-1", "WB5-2", "WB6-1", "WB6-2"};
constexpr const char* kSurgeryNames[] = {"add-diagonal",  "add-box",          "new-column",
                                         "flip-one",      "row-rectangle",    "column-rectangle",
                                         "hook-exchange"};

}  // namespace

std::string to_string(CoverCase c) { return kCaseNames[static_cast<int>(c)]; }

CoverCase parse_cover_case(const std::string& text) {
  for (int k = 0; k < 9; ++k)
    if (text == kCaseNames[k]) return static_cast<CoverCase>(k);
  throw std::invalid_argument("unknown cover case '" + text + "'");
}

std::string to_string(Surgery s) { return kSurgeryNames[static_cast<int>(s)]; }

Surgery parse_surgery(const std::string& text) {
  for (int k = 0; k < 7; ++k)
    if (text == kSurgeryNames[k]) return static_cast<Surgery>(k);
  throw std::invalid_argument("unknown surgery '" + text + "'");
}

namespace {

using Entries = std::map<BoxAddr, int>;

Entries entries_of(const TableauB& t) {
  Entries e;
  for (const auto& b : t.shape().boxes()) e[b] = t.at(b);
  return e;
}

// Zeros outside the new shape are dropped; a 1 outside it is a bug.
TableauB build(ShiftedShape shape, TableauKind kind, const Entries& e) {
  TableauB out(std::move(shape), kind);
  for (const auto& [b, v] : e) {
    if (!out.shape().has_box(b)) {
      if (v) throw std::logic_error("surgery left a 1 outside the shape at " + to_string(b));
      continue;
    }
    out.set(b, v);
  }
  return out;
}

Entries relabel(const Entries& e, int (*row)(int, int), int (*col)(int, int), int i) {
  Entries out;
  for (const auto& [b, v] : e) out[{row(b.row, i), col(b.col, i)}] = v;
  return out;
}

std::vector<int> with_row(std::vector<int> rows, int add, int remove) {
  if (remove != 0) rows.erase(std::remove(rows.begin(), rows.end(), remove), rows.end());
  if (add != 0) rows.push_back(add);
  std::sort(rows.begin(), rows.end());
  return rows;
}

// First box holding 1 that both walks pass through, in the order of `a`.
std::optional<BoxAddr> meeting_one(const TableauB& t, const Endpoint& a, const Endpoint& b) {
  const auto ta = zigzag_path(t, a);
  const auto tb = zigzag_path(t, b);
  std::set<BoxAddr> seen;
  for (const auto& s : tb.steps) seen.insert(s.box);
  for (const auto& s : ta.steps)
    if (t.at(s.box) && seen.count(s.box)) return s.box;
  return std::nullopt;
}

void require_valid_permutation(const TableauB& t) {
  if (t.kind() != TableauKind::permutation)
    throw std::invalid_argument("cover surgery needs a permutation tableau");
  const auto v = validate(t);
  if (!v.empty()) throw std::invalid_argument("invalid tableau: " + v.front().to_string());
}

// Rows `upper` above `lower`. The leftmost 1 of the lower row sits strictly
// left of the leftmost 1 of the upper row. Across that span the upper row
// takes over the lower row's entries and the lower row becomes 0.
void row_rectangle(TableauB& t, int upper, int lower, CoverMove& move) {
  const auto ub = t.shape().row_boxes(upper);
  const auto lb = t.shape().row_boxes(lower);
  auto leftmost = [&](int row, const std::vector<int>& cols) {
    std::size_t k = 0;
    while (k < cols.size() && !t.at(row, cols[k])) ++k;
    return k;
  };
  const std::size_t p = leftmost(upper, ub);
  const std::size_t q = leftmost(lower, lb);
  if (!(q < p && p < lb.size()))
    throw std::logic_error("row rectangle: leftmost 1s of rows " + std::to_string(upper) +
                           " and " + std::to_string(lower) + " are not staggered");
  // A 0 moving down lands on the next box of the lower row that held 1.
  std::size_t next = p;
  for (std::size_t k = p; k-- > q;) {
    if (!t.at(lower, lb[k])) {
      move.relocated.push_back({{upper, ub[k]}, {lower, lb[k]}});
      move.relocated.push_back({{lower, lb[k]}, {upper, ub[k]}});
      continue;
    }
    t.set({upper, ub[k]}, 1);
    move.relocated.push_back({{upper, ub[k]}, {lower, lb[next]}});
    next = k;
  }
  for (std::size_t k = q; k <= p; ++k) t.set({lower, lb[k]}, 0);
  move.pivot = BoxAddr{lower, lb[q]};
}

// Columns `left` and `right`, left one further out. Mirror of row_rectangle:
// the topmost 1 of the right column sits above that of the left column, and
// the left column takes over the right column's entries in between.
void column_rectangle(TableauB& t, int left, int right, CoverMove& move) {
  const auto& rows = t.shape().rows();
  auto position = [&](int row) {
    return static_cast<std::size_t>(std::find(rows.begin(), rows.end(), row) - rows.begin());
  };
  auto topmost = [&](int col) {
    for (int r : t.shape().column_boxes(col))
      if (t.at(r, col)) return position(r);
    return rows.size();
  };
  const std::size_t a = topmost(right);
  const std::size_t b = topmost(left);
  if (!(a < b && b < rows.size()))
    throw std::logic_error("column rectangle: topmost 1s of columns " + std::to_string(left) +
                           " and " + std::to_string(right) + " are not staggered");
  std::size_t next = b;
  for (std::size_t k = b; k-- > a;) {
    if (!t.at(rows[k], right)) {
      move.relocated.push_back({{rows[k], left}, {rows[k], right}});
      move.relocated.push_back({{rows[k], right}, {rows[k], left}});
      continue;
    }
    t.set({rows[k], left}, 1);
    move.relocated.push_back({{rows[k], left}, {rows[next], right}});
    next = k;
  }
  for (std::size_t k = a; k <= b; ++k) t.set({rows[k], right}, 0);
  move.pivot = BoxAddr{rows[a], right};
}

// Rows -(i+1) (a zero row) and -i (diagonal 1). The upper row is given an
// imaginary 1 above the diagonal of the lower one, which makes the exchange
// a hook: the lower row from its leftmost 1 to the diagonal moves up into
// row -(i+1), whose diagonal becomes 1, and column i from the diagonal down to
// the topmost 1 of column i+1 moves left into column i+1. The hook itself
// becomes 0.
void hook_exchange(TableauB& t, int i, CoverMove& move) {
  const auto& shape = t.shape();
  const int upper = -(i + 1), lower = -i;
  const auto ub = shape.row_boxes(upper);
  const auto lb = shape.row_boxes(lower);
  std::size_t q = 0;
  while (q < lb.size() && !t.at(lower, lb[q])) ++q;
  const std::size_t p = lb.size() - 1;  // the diagonal
  if (q > p || t.at(upper, i + 1) || !t.at(lower, i))
    throw std::logic_error("hook exchange: rows " + std::to_string(upper) + " and " +
                           std::to_string(lower) + " do not have the expected diagonals");
  const auto& rows = shape.rows();
  const auto top = static_cast<std::size_t>(std::find(rows.begin(), rows.end(), lower) - rows.begin());
  std::size_t bottom = top;
  while (bottom < rows.size() && !t.at(rows[bottom], i + 1)) ++bottom;
  if (bottom == rows.size())
    throw std::logic_error("hook exchange: column " + std::to_string(i + 1) + " has no 1 below row " +
                           std::to_string(lower));

  // The diagonal of the upper row is always part of the hook.
  std::size_t next = p;
  for (std::size_t k = p; k-- > std::min(q, p - 1);) {
    if (k + 1 < p && !t.at(lower, lb[k])) {
      move.relocated.push_back({{upper, ub[k]}, {lower, lb[k]}});
      move.relocated.push_back({{lower, lb[k]}, {upper, ub[k]}});
      continue;
    }
    t.set({upper, ub[k]}, 1);
    move.relocated.push_back({{upper, ub[k]}, {lower, lb[next]}});
    next = k;
  }
  next = bottom;
  for (std::size_t r = bottom; r-- > top + 1;) {
    if (!t.at(rows[r], i)) {
      move.relocated.push_back({{rows[r], i + 1}, {rows[r], i}});
      move.relocated.push_back({{rows[r], i}, {rows[r], i + 1}});
      continue;
    }
    t.set({rows[r], i + 1}, 1);
    move.relocated.push_back({{rows[r], i + 1}, {rows[next], i}});
    next = r;
  }
  for (std::size_t k = q; k <= p; ++k) t.set({lower, lb[k]}, 0);
  for (std::size_t r = top; r <= bottom; ++r) t.set({rows[r], i}, 0);
  move.pivot = BoxAddr{lower, lb[q]};
}

// A column without 1 goes away with its (all zero) negative row, and its
// label comes back as a zero row.
TableauB fixup(const TableauB& t, bool& ran) {
  const auto& shape = t.shape();
  std::vector<int> rows = shape.positive_rows();
  for (int c : shape.columns()) {
    bool any = false;
    for (int r : shape.column_boxes(c)) any = any || t.at(r, c);
    if (any) continue;
    for (int col : shape.row_boxes(-c))
      if (t.at(-c, col))
        throw std::logic_error("fixup: row " + std::to_string(-c) + " is not a zero row");
    rows.push_back(c);
  }
  ran = rows.size() != shape.positive_rows().size();
  if (!ran) return t;
  std::sort(rows.begin(), rows.end());
  return build(ShiftedShape(t.n(), rows), t.kind(), entries_of(t));
}

}  // namespace

CoverMove classify_cover(const TableauB& t, int i) {
  require_valid_permutation(t);
  const auto sigma = zeta(t);
  if (!raises_length(sigma, i))
    throw std::invalid_argument("s_" + std::to_string(i) + " does not raise the length of " +
                                sigma.to_string());
  CoverMove m;
  m.generator = i;
  if (i == 0) {
    m.cover_case = CoverCase::WB1;
    m.surgery = Surgery::add_diagonal;
    return m;
  }
  const int a = sigma(i), b = sigma(i + 1);
  auto meet_or = [&](Endpoint x, Endpoint y, CoverCase meet, CoverCase apart, Surgery rect) {
    if (meeting_one(t, x, y)) {
      m.cover_case = meet;
      m.surgery = Surgery::flip_one;
    } else {
      m.cover_case = apart;
      m.surgery = rect;
    }
  };
  if (b >= i + 1) {
    if (a < i) {
      m.cover_case = CoverCase::WB2;
      m.surgery = Surgery::add_box;
    } else if (a == i) {
      m.cover_case = CoverCase::WB3;
      m.surgery = Surgery::new_column;
    } else {
      meet_or(Endpoint::row(i), Endpoint::row(i + 1), CoverCase::WB4_1, CoverCase::WB4_2,
              Surgery::row_rectangle);
    }
  } else if (a > 0) {
    meet_or(Endpoint::column(i), Endpoint::column(i + 1), CoverCase::WB5_1, CoverCase::WB5_2,
            Surgery::column_rectangle);
  } else if (b < 0) {
    meet_or(Endpoint::row(-i), Endpoint::row(-(i + 1)), CoverCase::WB6_1, CoverCase::WB6_1,
            Surgery::row_rectangle);
  } else {
    m.cover_case = CoverCase::WB6_2;
    m.surgery = Surgery::hook_exchange;
  }
  return m;
}

CoverResult apply_cover_detailed(const TableauB& t, int i) {
  CoverMove move = classify_cover(t, i);
  const auto& shape = t.shape();
  const int n = t.n();
  std::optional<TableauB> out;
  switch (move.surgery) {
    case Surgery::add_diagonal: {
      auto e = relabel(
          entries_of(t), [](int r, int) { return r == 1 ? -1 : r; }, [](int c, int) { return c; },
          0);
      e[{-1, 1}] = 1;
      out = build(ShiftedShape(n, with_row(shape.positive_rows(), 0, 1)), t.kind(), e);
      move.pivot = BoxAddr{-1, 1};
      break;
    }
    case Surgery::add_box: {
      auto e = relabel(
          entries_of(t),
          [](int r, int k) { return r == k + 1 ? k : r == -k ? -(k + 1) : r; },
          [](int c, int k) { return c == k ? k + 1 : c; }, i);
      e[{i, i + 1}] = 1;
      out = build(ShiftedShape(n, with_row(shape.positive_rows(), i, i + 1)), t.kind(), e);
      move.pivot = BoxAddr{i, i + 1};
      break;
    }
    case Surgery::new_column: {
      Entries e;
      for (const auto& [b, v] : entries_of(t)) {
        if (b.row == i) {
          if (v) throw std::logic_error("row " + std::to_string(i) + " is not a zero row");
          continue;
        }
        e[{b.row == i + 1 ? i : b.row, b.col}] = v;
      }
      e[{i, i + 1}] = 1;
      out = build(ShiftedShape(n, with_row(shape.positive_rows(), 0, i + 1)), t.kind(), e);
      move.pivot = BoxAddr{i, i + 1};
      break;
    }
    case Surgery::flip_one: {
      const int k = i;
      std::optional<BoxAddr> box;
      if (move.cover_case == CoverCase::WB4_1)
        box = meeting_one(t, Endpoint::row(k), Endpoint::row(k + 1));
      else if (move.cover_case == CoverCase::WB5_1)
        box = meeting_one(t, Endpoint::column(k), Endpoint::column(k + 1));
      else
        box = meeting_one(t, Endpoint::row(-k), Endpoint::row(-(k + 1)));
      out = t;
      out->set(*box, 0);
      move.pivot = box;
      break;
    }
    case Surgery::row_rectangle: {
      out = t;
      if (move.cover_case == CoverCase::WB4_2) {
        row_rectangle(*out, i, i + 1, move);
      } else {
        row_rectangle(*out, -(i + 1), -i, move);
      }
      break;
    }
    case Surgery::column_rectangle: {
      out = t;
      column_rectangle(*out, i + 1, i, move);
      break;
    }
    case Surgery::hook_exchange: {
      out = t;
      hook_exchange(*out, i, move);
      break;
    }
  }
  bool ran = false;
  TableauB fixed = fixup(*out, ran);
  move.fixup = ran;

  const auto expected = zeta(t) * SignedPermutation::generator(n, i);
  const auto v = validate(fixed);
  if (!v.empty())
    throw std::logic_error(to_string(move.cover_case) + " surgery gave an invalid tableau (" +
                           v.front().to_string() + ")\n" + fixed.to_string());
  const auto got = zeta(fixed);
  if (got != expected)
    throw std::logic_error(to_string(move.cover_case) + " surgery gave zeta " + got.to_string() +
                           ", expected " + expected.to_string());
  return {std::move(move), std::move(*out), std::move(fixed)};
}

TableauB apply_cover(const TableauB& t, int i) { return apply_cover_detailed(t, i).tableau; }

int HassePoset::index_of(const SignedPermutation& s) const {
  const auto it = std::lower_bound(elements.begin(), elements.end(), s);
  return it != elements.end() && *it == s ? static_cast<int>(it - elements.begin()) : -1;
}

HassePoset build_weak_order(int n, int bound) {
  if (n < 1 || n > bound)
    throw std::out_of_range("weak order needs 1 <= n <= " + std::to_string(bound) + ", got " +
                            std::to_string(n));
  HassePoset p;
  p.n = n;
  p.elements = enumerate_group(n, std::max(bound, kDefaultGroupBound));
  for (const auto& s : p.elements) p.length.push_back(inversion_count(s));
  for (std::size_t k = 0; k < p.elements.size(); ++k) {
    const auto t = zeta_inverse(p.elements[k], std::max(bound, kDefaultTableauBound));
    for (const auto& [i, up] : weak_covers(p.elements[k])) {
      const auto r = apply_cover_detailed(t, i);
      p.edges.push_back({static_cast<int>(k), p.index_of(up), i, r.move.cover_case,
                         r.move.surgery, r.move.fixup});
    }
  }
  return p;
}

PosetFormat parse_poset_format(const std::string& text) {
  if (text == "dot") return PosetFormat::dot;
  if (text == "json") return PosetFormat::json;
  throw std::invalid_argument("unknown poset format '" + text + "' (expected dot or json)");
}

std::string export_poset(const HassePoset& p, PosetFormat format) {
  if (format == PosetFormat::json) {
    nlohmann::json doc;
    doc["n"] = p.n;
    auto nodes = nlohmann::json::array();
    for (std::size_t k = 0; k < p.elements.size(); ++k)
      nodes.push_back({{"window", p.elements[k].to_string()}, {"length", p.length[k]}});
    doc["nodes"] = std::move(nodes);
    auto edges = nlohmann::json::array();
    for (const auto& e : p.edges)
      edges.push_back({{"from", p.elements[static_cast<std::size_t>(e.from)].to_string()},
                       {"to", p.elements[static_cast<std::size_t>(e.to)].to_string()},
                       {"gen", e.generator},
                       {"case", to_string(e.cover_case)},
                       {"surgery", to_string(e.surgery)},
                       {"fixup", e.fixup}});
    doc["edges"] = std::move(edges);
    return doc.dump(1) + "\n";
  }
  std::ostringstream os;
  os << "digraph B" << p.n << " {\n  rankdir=BT;\n";
  for (std::size_t k = 0; k < p.elements.size(); ++k)
    os << "  n" << k << " [label=\"" << p.elements[k].to_string() << "\", length=" << p.length[k]
       << "];\n";
  for (const auto& e : p.edges)
    os << "  n" << e.from << " -> n" << e.to << " [label=\"" << to_string(e.cover_case)
       << "\", gen=" << e.generator << ", surgery=\"" << to_string(e.surgery)
       << "\", fixup=" << (e.fixup ? "true" : "false") << "];\n";
  os << "}\n";
  return os.str();
}

namespace {

HassePoset import_json(const std::string& text) {
  HassePoset p;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("poset JSON: ") + e.what(), e.byte);
  }
  try {
    p.n = doc.at("n").get<int>();
    for (const auto& node : doc.at("nodes")) {
      p.elements.push_back(parse_window(node.at("window").get<std::string>(), p.n));
      p.length.push_back(node.at("length").get<int>());
    }
    std::unordered_map<SignedPermutation, int> index;
    for (std::size_t k = 0; k < p.elements.size(); ++k)
      index[p.elements[k]] = static_cast<int>(k);
    auto lookup = [&](const nlohmann::json& w) {
      const auto it = index.find(parse_window(w.get<std::string>(), p.n));
      if (it == index.end()) throw ParseError("poset JSON: edge endpoint is not a node");
      return it->second;
    };
    for (const auto& e : doc.at("edges"))
      p.edges.push_back({lookup(e.at("from")), lookup(e.at("to")), e.at("gen").get<int>(),
                         parse_cover_case(e.at("case").get<std::string>()),
                         parse_surgery(e.at("surgery").get<std::string>()),
                         e.at("fixup").get<bool>()});
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("poset JSON: ") + e.what());
  }
  return p;
}

HassePoset import_dot(const std::string& text) {
  static const std::regex header(R"(^\s*digraph\s+B(\d+)\s*\{\s*$)");
  static const std::regex node(R"re(^\s*n(\d+)\s*\[label="([^"]*)",\s*length=(\d+)\];\s*$)re");
  static const std::regex edge(
      R"re(^\s*n(\d+)\s*->\s*n(\d+)\s*\[label="([^"]*)",\s*gen=(\d+),\s*surgery="([^"]*)",\s*fixup=(true|false)\];\s*$)re");
  static const std::regex skip(R"(^\s*(rankdir=\w+;|\}|)\s*$)");
  HassePoset p;
  std::istringstream in(text);
  std::string line;
  std::size_t offset = 0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    std::smatch m;
    if (!seen_header) {
      if (!std::regex_match(line, m, header)) throw ParseError("poset DOT: missing header", offset);
      p.n = std::stoi(m[1]);
      seen_header = true;
    } else if (std::regex_match(line, m, node)) {
      if (std::stoul(m[1]) != p.elements.size())
        throw ParseError("poset DOT: nodes out of order", offset);
      p.elements.push_back(parse_window(m[2].str(), p.n));
      p.length.push_back(std::stoi(m[3]));
    } else if (std::regex_match(line, m, edge)) {
      const int from = std::stoi(m[1]), to = std::stoi(m[2]);
      const int count = static_cast<int>(p.elements.size());
      if (from >= count || to >= count) throw ParseError("poset DOT: unknown node", offset);
      p.edges.push_back({from, to, std::stoi(m[4]), parse_cover_case(m[3].str()), parse_surgery(m[5].str()),
                         m[6] == "true"});
    } else if (!std::regex_match(line, skip)) {
      throw ParseError("poset DOT: unexpected line '" + line + "'", offset);
    }
    offset += line.size() + 1;
  }
  if (!seen_header) throw ParseError("poset DOT: empty input", 0);
  return p;
}

}  // namespace

HassePoset import_poset(const std::string& text, PosetFormat format) {
  return format == PosetFormat::json ? import_json(text) : import_dot(text);
}

}  // namespace ptab
