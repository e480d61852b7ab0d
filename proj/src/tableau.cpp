#include "ptab/tableau.hpp"

#include <json.hpp>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ptab/signed_permutation.hpp"

namespace ptab {

std::string to_string(TableauKind kind) {
  return kind == TableauKind::permutation ? "permutation" : "bare";
}

TableauKind parse_kind(const std::string& text) {
  if (text == "permutation" || text == "pt") return TableauKind::permutation;
  if (text == "bare" || text == "bt") return TableauKind::bare;
  throw std::invalid_argument("unknown tableau kind '" + text + "'");
}

TableauB::TableauB(ShiftedShape shape, TableauKind kind)
    : shape_(std::move(shape)), kind_(kind),
      fill_(static_cast<std::size_t>(shape_.box_count()), 0) {}

TableauB::TableauB(ShiftedShape shape, TableauKind kind, std::vector<std::uint8_t> fill)
    : shape_(std::move(shape)), kind_(kind), fill_(std::move(fill)) {
  if (static_cast<int>(fill_.size()) != shape_.box_count())
    throw std::invalid_argument("fill has " + std::to_string(fill_.size()) + " entries, shape has " +
                                std::to_string(shape_.box_count()) + " boxes");
  for (auto v : fill_)
    if (v > 1) throw std::invalid_argument("fill values must be 0 or 1");
}

TableauB TableauB::from_entries(ShiftedShape shape, TableauKind kind,
                                const std::map<BoxAddr, int>& entries) {
  TableauB t(std::move(shape), kind);
  for (const auto& [b, v] : entries) {
    if (!t.shape_.has_box(b))
      throw std::invalid_argument("box " + ptab::to_string(b) + " is not in the shape");
    if (v != 0 && v != 1)
      throw std::invalid_argument("box " + ptab::to_string(b) + " has value " + std::to_string(v));
    t.fill_[static_cast<std::size_t>(t.shape_.box_index(b))] = static_cast<std::uint8_t>(v);
  }
  for (const auto& b : t.shape_.boxes())
    if (!entries.count(b)) throw std::invalid_argument("box " + ptab::to_string(b) + " is missing");
  return t;
}

TableauB TableauB::from_ones(ShiftedShape shape, TableauKind kind, const std::vector<BoxAddr>& ones) {
  TableauB t(std::move(shape), kind);
  for (const auto& b : ones) t.set(b, 1);
  return t;
}

int TableauB::at(int row, int col) const {
  const int k = shape_.box_index(row, col);
  if (k < 0)
    throw std::out_of_range("box " + ptab::to_string(BoxAddr{row, col}) + " is not in the shape");
  return fill_[static_cast<std::size_t>(k)];
}

void TableauB::set(const BoxAddr& b, int value) {
  const int k = shape_.box_index(b);
  if (k < 0) throw std::out_of_range("box " + ptab::to_string(b) + " is not in the shape");
  if (value != 0 && value != 1) throw std::invalid_argument("fill values must be 0 or 1");
  fill_[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(value);
}

std::vector<BoxAddr> TableauB::ones() const {
  std::vector<BoxAddr> out;
  const auto& boxes = shape_.boxes();
  for (std::size_t k = 0; k < boxes.size(); ++k)
    if (fill_[k]) out.push_back(boxes[k]);
  return out;
}

TableauB TableauB::with_kind(TableauKind kind) const {
  TableauB t = *this;
  t.kind_ = kind;
  return t;
}

std::string TableauB::to_string() const {
  std::ostringstream os;
  for (int r : shape_.rows()) {
    os << r << " |";
    for (int c : shape_.row_boxes(r)) os << ' ' << at(r, c);
    os << '\n';
  }
  return os.str();
}

std::string to_string(Rule rule) {
  switch (rule) {
    case Rule::column_without_one: return "column without 1";
    case Rule::one_hinge: return "1-hinge";
    case Rule::zero_hinge: return "0-hinge";
    case Rule::zero_diagonal_row: return "0 diagonal with a 1 in its row";
  }
  return "?";
}

std::string Violation::to_string() const {
  return ptab::to_string(rule) + " at " + ptab::to_string(box);
}

std::vector<Violation> validate(const TableauB& t) {
  const auto& shape = t.shape();
  std::vector<Violation> out;
  std::vector<bool> col_has(static_cast<std::size_t>(shape.n()) + 1, false);
  for (int r : shape.rows()) {
    bool row_has = false;
    for (int c : shape.row_boxes(r)) {
      const int v = t.at(r, c);
      if (row_has && col_has[static_cast<std::size_t>(c)]) {
        if (t.kind() == TableauKind::permutation && v == 0)
          out.push_back({{r, c}, Rule::one_hinge});
        if (t.kind() == TableauKind::bare && v == 1) out.push_back({{r, c}, Rule::zero_hinge});
      }
      if (v) {
        row_has = true;
        col_has[static_cast<std::size_t>(c)] = true;
      }
    }
    if (r < 0 && row_has && t.at(r, -r) == 0) out.push_back({{r, -r}, Rule::zero_diagonal_row});
  }
  for (int c : shape.columns())
    if (!col_has[static_cast<std::size_t>(c)]) out.push_back({{-c, c}, Rule::column_without_one});
  return out;
}

namespace {

struct FillSearch {
  const ShiftedShape& shape;
  TableauKind kind;
  const std::function<void(const TableauB&)>& visit;
  std::vector<std::uint8_t> fill;
  std::vector<int> row_of;     // box -> row position
  std::vector<int> col_of;     // box -> column position
  std::vector<bool> diagonal;  // box is a diagonal
  std::vector<bool> bottom;    // box is the lowest in its column
  std::vector<int> row_ones;
  std::vector<int> col_ones;

  FillSearch(const ShiftedShape& s, TableauKind k, const std::function<void(const TableauB&)>& v)
      : shape(s), kind(k), visit(v) {
    const auto& boxes = shape.boxes();
    fill.assign(boxes.size(), 0);
    std::vector<int> row_pos(static_cast<std::size_t>(2 * shape.n() + 1), -1);
    std::vector<int> col_pos(static_cast<std::size_t>(shape.n() + 1), -1);
    for (std::size_t k2 = 0; k2 < shape.rows().size(); ++k2)
      row_pos[static_cast<std::size_t>(shape.rows()[k2] + shape.n())] = static_cast<int>(k2);
    for (std::size_t k2 = 0; k2 < shape.columns().size(); ++k2)
      col_pos[static_cast<std::size_t>(shape.columns()[k2])] = static_cast<int>(k2);
    for (const auto& b : boxes) {
      row_of.push_back(row_pos[static_cast<std::size_t>(b.row + shape.n())]);
      col_of.push_back(col_pos[static_cast<std::size_t>(b.col)]);
      diagonal.push_back(b.row == -b.col);
      bottom.push_back(!shape.south_of(b).has_value());
    }
    row_ones.assign(shape.rows().size(), 0);
    col_ones.assign(shape.columns().size(), 0);
  }

  void run(std::size_t k) {
    if (k == fill.size()) {
      visit(TableauB(shape, kind, fill));
      return;
    }
    const auto r = static_cast<std::size_t>(row_of[k]);
    const auto c = static_cast<std::size_t>(col_of[k]);
    const bool hinge = row_ones[r] > 0 && col_ones[c] > 0;
    bool allow0 = true;
    bool allow1 = true;
    if (hinge) (kind == TableauKind::permutation ? allow0 : allow1) = false;
    if (diagonal[k] && row_ones[r] > 0) allow0 = false;
    if (bottom[k] && col_ones[c] == 0) allow0 = false;
    if (allow0) {
      fill[k] = 0;
      run(k + 1);
    }
    if (allow1) {
      fill[k] = 1;
      ++row_ones[r];
      ++col_ones[c];
      run(k + 1);
      --row_ones[r];
      --col_ones[c];
      fill[k] = 0;
    }
  }
};

}  // namespace

void for_each_tableau(int n, TableauKind kind, const std::function<void(const TableauB&)>& visit,
                      int bound) {
  if (n < 1 || n > bound)
    throw std::out_of_range("rank " + std::to_string(n) + " outside [1," + std::to_string(bound) +
                            "]");
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const ShiftedShape shape = shape_from_mask(n, mask);
    FillSearch search(shape, kind, visit);
    search.run(0);
  }
}

std::vector<TableauB> enumerate_tableaux(int n, TableauKind kind, int bound) {
  std::vector<TableauB> out;
  for_each_tableau(n, kind, [&](const TableauB& t) { out.push_back(t); }, bound);
  return out;
}

FillingStats filling_stats(const TableauB& t) {
  const auto& shape = t.shape();
  FillingStats s;
  s.two = static_cast<int>(extended_cells(shape).size());
  s.row = static_cast<int>(shape.positive_rows().size());
  s.col = static_cast<int>(shape.columns().size());
  std::vector<bool> col_has(static_cast<std::size_t>(shape.n()) + 1, false);
  for (int r : shape.rows()) {
    bool row_has = false;
    for (int c : shape.row_boxes(r)) {
      if (!t.at(r, c)) continue;
      ++s.one;
      const bool topmost = !col_has[static_cast<std::size_t>(c)];
      if (!topmost) ++s.so;
      if (topmost && !row_has) ++s.dess;
      if (r == -c) ++s.diag;
      row_has = true;
      col_has[static_cast<std::size_t>(c)] = true;
    }
    if (r > 0 && !row_has) ++s.zerorow;
  }
  return s;
}

std::string tableau_to_json(const TableauB& t, int indent) {
  nlohmann::json doc;
  doc["n"] = t.n();
  doc["kind"] = to_string(t.kind());
  doc["positive_rows"] = t.shape().positive_rows();
  auto ones = nlohmann::json::array();
  for (const auto& b : t.ones()) ones.push_back({b.row, b.col});
  doc["ones"] = ones;
  return doc.dump(indent);
}

TableauB tableau_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  try {
    if (!doc.is_object()) throw ParseError("tableau document must be a JSON object");
    for (const char* key : {"n", "kind", "positive_rows", "ones"})
      if (!doc.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
    const int n = doc.at("n").get<int>();
    if (n < 1) throw ParseError("\"n\" must be positive");
    const TableauKind kind = parse_kind(doc.at("kind").get<std::string>());
    const auto rows = doc.at("positive_rows").get<std::vector<int>>();
    ShiftedShape shape(n, rows);
    std::vector<BoxAddr> ones;
    std::set<BoxAddr> seen;
    std::size_t k = 0;
    for (const auto& entry : doc.at("ones")) {
      if (!entry.is_array() || entry.size() != 2)
        throw ParseError("\"ones\"[" + std::to_string(k) + "] must be a [row,col] pair");
      const BoxAddr b{entry[0].get<int>(), entry[1].get<int>()};
      if (!shape.has_box(b))
        throw ParseError("\"ones\"[" + std::to_string(k) + "] = " + to_string(b) +
                         " is not a box of the shape");
      if (!seen.insert(b).second)
        throw ParseError("\"ones\"[" + std::to_string(k) + "] repeats " + to_string(b));
      ones.push_back(b);
      ++k;
    }
    TableauB t = TableauB::from_ones(std::move(shape), kind, ones);
    const auto violations = validate(t);
    if (!violations.empty())
      throw std::invalid_argument("invalid " + to_string(kind) + " tableau: " +
                                  violations.front().to_string());
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad tableau document: ") + e.what());
  }
}

}  // namespace ptab
