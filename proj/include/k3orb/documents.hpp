#pragma once

// Output assembly: one builder per CLI command, each producing the JSON
// envelope and the human-readable text together so the two renderings can
// never drift apart. Everything emitted is a pure function of the inputs --
// no timestamps, no machine-dependent content.

#include <string>

#include <json.hpp>

#include "k3orb/invariant_pair.hpp"
#include "k3orb/lattice.hpp"

namespace k3orb {

inline constexpr const char* kSchemaVersion = "1.0";

struct OutputDocument {
  nlohmann::ordered_json json;  // {schema_version, command, payload, warnings}
  std::string text;
  int exit_code = 0;
};

enum class TableMode { Closed, FirstPrinciples, Both };

// chi table over all admissible pairs, grouped by m.
OutputDocument make_table_document(TableMode mode);

// Full construction report for one pair; throws InadmissiblePairError for
// pairs off the list.
OutputDocument make_pair_document(InvariantPair pair);

// Rank, determinant, inertia, discriminant group, and (when the rank
// permits) the (m, a) reading of a user-supplied lattice.
OutputDocument make_lattice_document(const GramLattice& l);

// Runs the invariant suites and reports pass/fail per suite. The documented
// closed-form vs first-principles disagreement is an expected finding; with
// strict it is promoted to a failure.
OutputDocument make_verify_document(bool strict);

// One-line diagnosis for a rejected pair: cites parity when violated and
// names the nearest admissible pairs.
std::string inadmissible_pair_message(InvariantPair p);

// Stable serialization: 2-space indent, trailing newline.
std::string render_json(const OutputDocument& doc);

}  // namespace k3orb
