#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "roughver/coord_change.hpp"
#include "roughver/free_poly.hpp"
#include "roughver/signature.hpp"
#include "roughver/tensor_series.hpp"
#include "roughver/toric.hpp"

namespace roughver {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Json, Csv, Pretty };

OutputFormat parse_format(const std::string& name);

struct RunConfig {
  std::string command;
  int d = 0;
  int k = 0;
  int m = 0;
  OutputFormat format = OutputFormat::Json;
  int dimension_cap = 7;
  std::size_t memory_budget_bytes = std::size_t{2} << 30;
  std::string out;
};

/// One row of invariants of R_{d,k,m}. `deg` is empty when skipped or failed;
/// `note` says why.
struct InvariantRow {
  int d = 0;
  int k = 0;
  int m = 0;
  std::uint64_t span = 0;  ///< projective dimension of the linear span
  int dim = 0;
  std::optional<std::uint64_t> deg;
  std::uint64_t quad = 0;
  std::string note;
};

struct ReferenceRow {
  int d, k, m;
  int span, dim, deg, gen;
};

/// Published invariants for 24 triples (span, dim, deg, number of quadric
/// generators), compiled in.
std::span<const ReferenceRow> reference_table();
std::optional<ReferenceRow> find_reference(int d, int k, int m);

InvariantRow cmd_invariants(int d, int k, int m, const RunConfig& config);

struct Triple {
  int d, k, m;
};

struct TableEntry {
  Triple triple;
  std::optional<InvariantRow> row;
  std::string error;  ///< non-empty when the row failed as a whole
  std::optional<ReferenceRow> reference;
  std::string diff;   ///< "match", "mismatch: ...", "no reference", ...
};

/// Rows are computed independently; a failing row does not stop the others.
std::vector<TableEntry> cmd_table(const std::vector<Triple>& rows, const RunConfig& config);

// Serialization ------------------------------------------------------------

Json poly_to_json(const FreePoly& p);
FreePoly poly_from_json(const Json& j, int d);
Json series_to_json(const TensorSeries& s);
/// Dense: every length-k word appears, zeros included.
Json level_to_json(const LevelTensor& t);
Json exponents_to_json(const ExponentVector& e);
Json row_to_json(const InvariantRow& row);
/// nullopt-valued fields serialize as null.
Json table_to_json(const std::vector<TableEntry>& entries);
std::string table_to_csv(const std::vector<TableEntry>& entries);
std::string table_to_pretty(const std::vector<TableEntry>& entries);
std::string row_to_csv(const InvariantRow& row);
std::string row_to_pretty(const InvariantRow& row);

/// LieCoefficients from {"word": "p/q"}; m defaults to the longest key.
LieCoefficients lie_from_json(const Json& j, int d, std::optional<int> m = std::nullopt);
/// PwlPath from [[q, ...], ...]; d defaults to the first segment's size.
PwlPath path_from_json(const Json& j, std::optional<int> d = std::nullopt);

/// Parses text as JSON, reporting the byte position of syntax errors.
Json parse_json_text(const std::string& text);

Json coordchange_to_json(const CoordChangeMatrix& mat, const std::optional<Rational>& det);
std::string coordchange_to_csv(const CoordChangeMatrix& mat);

/// Default size budget for cmd_coordchange: d^k <= 4096.
inline constexpr std::uint64_t kCoordChangeBudget = 4096;

struct CoordChangeExport {
  CoordChangeMatrix matrix;
  std::optional<Rational> determinant;
};
CoordChangeExport cmd_coordchange(int d, int k, const RunConfig& config);

/// Input is either a path (JSON array) or Lyndon coordinates (JSON object).
/// Output: {"level", "d", "tensor", "group_like", "witness"}.
Json cmd_signature(const Json& input, int k, const RunConfig& config);

}  // namespace roughver
