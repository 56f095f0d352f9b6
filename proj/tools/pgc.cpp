// pgc: command-line front end for the Cattell/Szondi profile connection.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pgc/commands.hpp"

namespace {

using namespace pgc;
namespace cmd = pgc::commands;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!std::cout) throw IoError("write to stdout failed");
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Translate between Cattell PsychEval and Szondi personality profiles"};
  app.require_subcommand(1);

  std::string in_path;
  std::string out_path;
  std::size_t enumerate = 0;
  bool explain = false;
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  bool inject_corruption = false;
  bool corrected_reversal = false;
  std::size_t samples = 10000;
  std::string global_name;
  int global_value = 0;

  auto* right = app.add_subcommand("right", "Right polarity of a ppp / ppp_set document");
  right->add_option("--in", in_path, "Input JSON (default: stdin)");
  right->add_option("--out", out_path, "Output file (default: stdout)");
  right->add_option("--enumerate", enumerate, "Emit up to N members of the box");

  auto* left = app.add_subcommand("left", "Left polarity of an spp / spp_set document");
  left->add_option("--in", in_path, "Input JSON (default: stdin)");
  left->add_option("--out", out_path, "Output file (default: stdout)");
  left->add_flag("--explain", explain, "Evaluate all cells of every trait left without values");

  auto* check = app.add_subcommand("check", "Run the property suites");
  check->add_option("--trials", trials, "Trials per randomized suite");
  check->add_option("--seed", seed, "Random seed");
  check->add_flag("--inject-corruption", inject_corruption, "Run against a deliberately broken table")
      ->group("");

  auto* table = app.add_subcommand("table", "Translation table utilities");
  table->require_subcommand(1);
  auto* dump = table->add_subcommand("dump", "Write the table as CSV");
  dump->add_option("--out", out_path, "Output file (default: stdout)");

  auto* norm = app.add_subcommand("norm-demo", "Left polarity of the Szondi norm profile, explained");

  auto* find_empty = app.add_subcommand("find-empty", "Sample Cattell profiles with empty right images");
  find_empty->add_option("--samples", samples, "Number of random profiles");
  find_empty->add_option("--seed", seed, "Random seed");

  auto* global = app.add_subcommand("global", "Formula of a global factor at a value");
  global->add_option("factor", global_name, "Extraversion | HighAnxiety | ToughMindedness | Independence | SelfControl")
      ->required();
  global->add_option("value", global_value, "Value 1..10")->required();
  global->add_option("--in", in_path, "Optional spp document to evaluate the formula on");
  global->add_flag("--corrected-reversal", corrected_reversal, "Reverse components with 11-v instead of 10-v");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? cmd::kOk : cmd::kInvalidInput;
  }

  try {
    const GaloisConnection conn;

    if (*right) {
      auto doc = parse_document(read_input(in_path));
      write_output(out_path, cmd::right(conn, doc, enumerate).dump(2) + "\n");
    } else if (*left) {
      auto doc = parse_document(read_input(in_path));
      write_output(out_path, cmd::left(conn, doc, explain).dump(2) + "\n");
    } else if (*check) {
      return cmd::check(std::cout, PropertyOptions{trials, seed, 3}, inject_corruption);
    } else if (*dump) {
      write_output(out_path, cmd::table_dump());
    } else if (*norm) {
      return cmd::norm_demo(std::cout, conn);
    } else if (*find_empty) {
      cmd::print(std::cout, cmd::find_empty(conn, samples, seed));
    } else if (*global) {
      auto g = global_factor_from_token(global_name);
      if (!g) throw InvalidDocument("unknown global factor '" + global_name + "'");
      const auto mode = corrected_reversal ? ReversalMode::corrected : ReversalMode::as_printed;
      const Formula phi = global_factor_formula(*g, TraitValue(global_value), mode);
      std::cout << to_sexpr(phi) << '\n';
      if (!in_path.empty()) {
        for (const auto& p : cmd::spp_members(parse_document(read_input(in_path)))) {
          std::cout << describe(p) << ": " << (eval(phi, p) ? "true" : "false") << '\n';
        }
      }
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cmd::kIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cmd::kInvalidInput;
  }
  return cmd::kOk;
}
