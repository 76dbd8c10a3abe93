#include <exception>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "k3orb/documents.hpp"
#include "k3orb/errors.hpp"
#include "k3orb/gram_io.hpp"
#include "k3orb/lattice.hpp"

namespace {

using namespace k3orb;

int emit(const OutputDocument& doc, const std::string& format) {
  if (format == "json")
    std::cout << render_json(doc);
  else
    std::cout << doc.text;
  return doc.exit_code;
}

void add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "output format (text or json)")
      ->transform(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of Calabi-Yau orbifolds built from K3 "
               "surfaces with an order-3 automorphism"};
  app.require_subcommand(1);

  std::string table_mode = "closed";
  std::string table_format = "text";
  CLI::App* table =
      app.add_subcommand("table", "print the classification table");
  table->add_option("--mode", table_mode,
                    "euler pipeline: closed, first, or both")
      ->transform(CLI::IsMember({"closed", "first", "both"}))
      ->capture_default_str();
  add_format_option(table, table_format);

  int pair_m = 0;
  int pair_a = 0;
  std::string pair_format = "text";
  CLI::App* pair =
      app.add_subcommand("pair", "report one pair of invariants (m, a)");
  pair->add_option("m", pair_m, "number of exceptional classes m")
      ->required();
  pair->add_option("a", pair_a, "discriminant invariant a")->required();
  add_format_option(pair, pair_format);

  std::string gram_path;
  std::string lattice_format = "text";
  CLI::App* lattice =
      app.add_subcommand("lattice", "analyze a gram matrix from a JSON file");
  lattice->add_option("file", gram_path, "path to {\"gram\": [[...]]} JSON")
      ->required();
  add_format_option(lattice, lattice_format);

  bool strict = false;
  std::string verify_format = "text";
  CLI::App* verify =
      app.add_subcommand("verify", "run the internal verification suites");
  verify->add_flag("--strict", strict,
                   "treat expected findings as failures");
  add_format_option(verify, verify_format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*table) {
      TableMode mode = table_mode == "closed"  ? TableMode::Closed
                       : table_mode == "first" ? TableMode::FirstPrinciples
                                               : TableMode::Both;
      return emit(make_table_document(mode), table_format);
    }
    if (*pair) return emit(make_pair_document({pair_m, pair_a}), pair_format);
    if (*lattice)
      return emit(make_lattice_document(read_gram_file(gram_path)),
                  lattice_format);
    return emit(make_verify_document(strict), verify_format);
  } catch (const InadmissiblePairError& e) {
    std::cerr << "error: inadmissible-pair: "
              << inadmissible_pair_message({e.m, e.a}) << "\n";
  } catch (const GramParseError& e) {
    std::cerr << "error: gram-parse: " << e.what();
    if (e.line > 0)
      std::cerr << " (line " << e.line << ", column " << e.column << ")";
    std::cerr << "\n";
  } catch (const DegenerateLatticeError& e) {
    std::cerr << "error: degenerate-lattice: " << e.what() << "\n";
  } catch (const NonSymmetricMatrixError& e) {
    std::cerr << "error: non-symmetric: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: invalid-argument: " << e.what() << "\n";
  } catch (const std::logic_error& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
  } catch (const std::runtime_error& e) {
    std::cerr << "error: io: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: unexpected: " << e.what() << "\n";
  }
  return 1;
}
