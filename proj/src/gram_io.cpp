#include "k3orb/gram_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "k3orb/errors.hpp"

namespace k3orb {

namespace {

// 1-based line and column of a byte offset in the source text.
std::pair<int, int> offset_position(std::string_view text, std::size_t byte) {
  int line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void fail_semantic(const std::string& msg) {
  throw GramParseError(msg, 0, 0);
}

[[noreturn]] void fail_entry(std::size_t i, std::size_t j,
                             const std::string& what) {
  std::ostringstream msg;
  msg << "gram[" << i << "][" << j << "] " << what;
  fail_semantic(msg.str());
}

}  // namespace

GramLattice parse_gram_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, column] =
        offset_position(text, e.byte > 0 ? e.byte - 1 : 0);
    // Strip the "[json.exception...]" tag; keep the parser's reason.
    std::string reason = e.what();
    if (auto pos = reason.find("] "); pos != std::string::npos)
      reason = reason.substr(pos + 2);
    throw GramParseError(reason, line, column);
  }

  if (!doc.is_object())
    fail_semantic("top level must be an object with a \"gram\" key");
  auto it = doc.find("gram");
  if (it == doc.end()) fail_semantic("missing \"gram\" key");
  if (!it->is_array()) fail_semantic("\"gram\" must be an array of rows");

  const auto& rows = *it;
  const std::size_t n = rows.size();
  IntMatrix g(static_cast<Index>(n), static_cast<Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array()) {
      std::ostringstream msg;
      msg << "gram[" << i << "] must be an array of integers";
      fail_semantic(msg.str());
    }
    if (row.size() != n) {
      std::ostringstream msg;
      msg << "gram[" << i << "] has " << row.size() << " entries, expected "
          << n << " (matrix must be square)";
      fail_semantic(msg.str());
    }
    for (std::size_t j = 0; j < n; ++j) {
      const auto& cell = row[j];
      if (!cell.is_number_integer() && !cell.is_number_unsigned())
        fail_entry(i, j, "must be an integer");
      // Exact regardless of magnitude: route through the decimal literal.
      g(static_cast<Index>(i), static_cast<Index>(j)) = Int(cell.dump());
    }
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g(static_cast<Index>(i), static_cast<Index>(j)) !=
          g(static_cast<Index>(j), static_cast<Index>(i))) {
        std::ostringstream msg;
        msg << "gram[" << i << "][" << j << "] = "
            << g(static_cast<Index>(i), static_cast<Index>(j))
            << " does not match gram[" << j << "][" << i << "] = "
            << g(static_cast<Index>(j), static_cast<Index>(i))
            << " (matrix must be symmetric)";
        fail_semantic(msg.str());
      }

  return GramLattice(std::move(g));
}

GramLattice read_gram_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open gram file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (!in.good() && !in.eof())
    throw std::runtime_error("cannot read gram file: " + path);
  return parse_gram_json(buffer.str());
}

}  // namespace k3orb
