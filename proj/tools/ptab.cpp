#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <algorithm>

#include "ptab/harness.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// "-" reads stdin, "@file" reads a file, anything else is the input itself.
std::string read_input(const std::string& arg) {
  if (arg == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw std::invalid_argument("cannot read " + arg.substr(1));
    return {std::istreambuf_iterator<char>(in), {}};
  }
  return arg;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed permutations, type B permutation tableaux and the weak order"};
  app.require_subcommand(1);

  int n = 0;
  std::string format = "text";
  std::string out_path;
  std::string kind_text = "permutation";

  auto add_common = [&](CLI::App* sub, const char* default_format) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "dot"}))
        ->default_str(default_format);
    sub->add_option("--out", out_path, "Write to a file instead of stdout");
  };

  std::string theorem_text;
  auto* verify = app.add_subcommand("verify", "Exhaustively check an identity at rank n");
  verify->add_option("theorem", theorem_text, "Identity id, or 'all'")->required();
  verify->add_option("--n", n, "Rank")->required();
  add_common(verify, "text");

  std::string input;
  std::string direction;
  auto* map = app.add_subcommand("map", "Apply one of the bijections");
  map->add_option("input", input, "Permutation (window or cycles) or tableau JSON; '-' or @file")
      ->required();
  map->add_option("--direction,-d", direction, "pt-to-perm, perm-to-pt, bt-to-perm, perm-to-bt, "
                                               "pt-to-bt or bt-to-pt")
      ->required();
  map->add_option("--n", n, "Rank, needed for cycle notation");
  map->add_option("--out", out_path, "Write to a file instead of stdout");

  auto* stats = app.add_subcommand("stats", "Statistics of one permutation or tableau");
  stats->add_option("input", input, "Permutation (window or cycles) or tableau JSON; '-' or @file")
      ->required();
  stats->add_option("--n", n, "Rank, needed for cycle notation");
  stats->add_option("--kind", kind_text, "Tableau kind for permutation input: permutation or bare");
  add_common(stats, "text");

  auto* enumerate = app.add_subcommand("enumerate", "List every tableau of a kind at rank n");
  enumerate->add_option("--n", n, "Rank, 1 to 5")->required();
  enumerate->add_option("--kind", kind_text, "permutation or bare");
  add_common(enumerate, "text");

  auto* poset = app.add_subcommand("poset", "Export the weak order Hasse diagram");
  poset->add_option("--n", n, "Rank, 1 to 5")->required();
  add_common(poset, "dot");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  if (poset->parsed() && poset->count("--format") == 0) format = "dot";

  try {
    const auto fmt = ptab::parse_output_format(format);
    if (verify->parsed()) {
      if (fmt == ptab::OutputFormat::dot) throw std::invalid_argument("verify has no dot output");
      std::vector<ptab::Theorem> theorems;
      if (theorem_text == "all")
        theorems = ptab::all_theorems();
      else
        theorems.push_back(ptab::parse_theorem(theorem_text));
      std::string text;
      bool ok = true;
      for (auto t : theorems) {
        const auto report = ptab::cmd_verify(t, theorem_text == "all" ? std::min(n, ptab::verify_bound(t)) : n);
        ok = ok && report.passed();
        text += fmt == ptab::OutputFormat::json ? report.to_json() : report.to_text();
      }
      write_output(text, out_path);
      return ok ? 0 : kExitFailure;
    }
    if (map->parsed()) {
      write_output(ptab::cmd_map(read_input(input), ptab::parse_direction(direction), n), out_path);
    } else if (stats->parsed()) {
      write_output(ptab::cmd_stats(read_input(input), n, ptab::parse_kind(kind_text), fmt), out_path);
    } else if (enumerate->parsed()) {
      write_output(ptab::cmd_enumerate(n, ptab::parse_kind(kind_text), fmt), out_path);
    } else if (poset->parsed()) {
      write_output(ptab::cmd_poset(n, fmt), out_path);
    }
  } catch (const ptab::ParseError& e) {
    std::cerr << "error: " << e.what();
    if (e.where() != ptab::ParseError::npos) std::cerr << " (at offset " << e.where() << ")";
    std::cerr << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return 0;
}
