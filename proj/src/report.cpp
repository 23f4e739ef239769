#include "roughver/report.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <sstream>

#include "roughver/errors.hpp"
#include "roughver/lyndon.hpp"

namespace roughver {

namespace {

// Published table of invariants, in the order it is printed.
constexpr std::array<ReferenceRow, 24> kReference{{
    {2, 2, 2, 3, 2, 2, 1},       {3, 2, 2, 8, 5, 4, 6},        {4, 2, 2, 15, 9, 8, 20},
    {5, 2, 2, 24, 14, 16, 50},   {6, 2, 2, 35, 20, 32, 105},   {2, 3, 2, 5, 2, 4, 6},
    {3, 3, 2, 18, 5, 24, 81},    {4, 3, 2, 43, 9, 200, 486},   {5, 3, 2, 84, 14, 2221, 1920},
    {2, 4, 2, 8, 2, 8, 27},      {3, 4, 2, 38, 5, 128, 528},   {2, 5, 2, 11, 2, 12, 43},
    {3, 5, 2, 68, 5, 368, 1806}, {2, 6, 2, 15, 2, 18, 87},     {2, 3, 3, 7, 4, 4, 6},
    {3, 3, 3, 26, 13, 24, 81},   {4, 3, 3, 63, 29, 200, 486},  {2, 4, 3, 12, 4, 12, 33},
    {3, 4, 3, 62, 13, 672, 954}, {2, 5, 3, 19, 4, 28, 108},    {2, 4, 4, 15, 7, 12, 33},
    {2, 5, 4, 25, 7, 40, 150},   {2, 5, 5, 31, 13, 40, 150},   {2, 6, 5, 54, 13, 336, 694},
}};

std::string opt_to_string(const std::optional<std::uint64_t>& v) {
  return v ? std::to_string(*v) : std::string();
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "pretty") return OutputFormat::Pretty;
  throw InvalidParameter("unknown format '" + name + "' (expected json, csv or pretty)");
}

std::span<const ReferenceRow> reference_table() { return kReference; }

std::optional<ReferenceRow> find_reference(int d, int k, int m) {
  for (const auto& r : kReference) {
    if (r.d == d && r.k == k && r.m == m) return r;
  }
  return std::nullopt;
}

InvariantRow cmd_invariants(int d, int k, int m, const RunConfig& config) {
  if (d < 1 || k < 1 || m < 1) throw InvalidParameter("invariants require d, k, m >= 1");
  check_alphabet(d);
  InvariantRow row{d, k, m, 0, 0, std::nullopt, 0, ""};
  row.span = span_dimension(d, k, m) - 1;
  row.dim = variety_dimension(d, k, m);
  row.quad = quadric_space_dimension(d, k, m);
  if (row.dim > config.dimension_cap) {
    row.note = "degree skipped: dimension " + std::to_string(row.dim) + " above cap " +
               std::to_string(config.dimension_cap);
    return row;
  }
  try {
    DegreeOptions opts;
    opts.dimension_cap = config.dimension_cap;
    opts.memory_budget_bytes = config.memory_budget_bytes;
    row.deg = toric_degree(d, k, m, opts);
  } catch (const ResourceError& e) {
    row.note = std::string("degree unavailable: ") + e.what();
  }
  return row;
}

std::vector<TableEntry> cmd_table(const std::vector<Triple>& rows, const RunConfig& config) {
  std::vector<TableEntry> out;
  out.reserve(rows.size());
  for (const Triple& t : rows) {
    TableEntry e{t, std::nullopt, "", find_reference(t.d, t.k, t.m), ""};
    try {
      e.row = cmd_invariants(t.d, t.k, t.m, config);
    } catch (const std::exception& ex) {
      e.error = ex.what();
    }
    if (!e.row) {
      e.diff = "error";
    } else if (!e.reference) {
      e.diff = "no reference";
    } else {
      std::vector<std::string> bad;
      const auto& r = *e.reference;
      if (e.row->span != static_cast<std::uint64_t>(r.span)) bad.push_back("span");
      if (e.row->dim != r.dim) bad.push_back("dim");
      if (e.row->deg && *e.row->deg != static_cast<std::uint64_t>(r.deg)) bad.push_back("deg");
      if (e.row->quad != static_cast<std::uint64_t>(r.gen)) bad.push_back("gen");
      if (bad.empty()) {
        e.diff = e.row->deg ? "match" : "match (deg not computed)";
      } else {
        e.diff = "mismatch:";
        for (const auto& b : bad) e.diff += " " + b;
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

// ---------------------------------------------------------------------------

Json poly_to_json(const FreePoly& p) {
  Json j = Json::object();
  for (const auto& [w, c] : p.terms()) j[w.to_string(p.alphabet())] = format_rational(c);
  return j;
}

namespace {

Rational rational_from_json(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(Integer(v.dump()));
  throw ParseError("expected a rational as a string or integer, got " + v.dump(), 0);
}

}  // namespace

FreePoly poly_from_json(const Json& j, int d) {
  if (!j.is_object()) throw ParseError("a polynomial must be a JSON object", 0);
  FreePoly p(d);
  for (const auto& [key, value] : j.items()) p.add_term(Word::parse(key, d), rational_from_json(value));
  return p;
}

Json series_to_json(const TensorSeries& s) {
  Json j;
  j["scalar"] = format_rational(s.scalar());
  j["terms"] = poly_to_json(s.body());
  return j;
}

Json level_to_json(const LevelTensor& t) {
  Json j = Json::object();
  for (const Word& w : words_of_length(t.alphabet(), static_cast<std::size_t>(t.level()))) {
    j[w.to_string(t.alphabet())] = format_rational(t.at(w));
  }
  return j;
}

Json exponents_to_json(const ExponentVector& e) { return Json(e); }

Json row_to_json(const InvariantRow& row) {
  Json j;
  j["d"] = row.d;
  j["k"] = row.k;
  j["m"] = row.m;
  j["span"] = row.span;
  j["dim"] = row.dim;
  j["deg"] = row.deg ? Json(*row.deg) : Json(nullptr);
  j["quad"] = row.quad;
  if (!row.note.empty()) j["note"] = row.note;
  return j;
}

Json table_to_json(const std::vector<TableEntry>& entries) {
  Json rows = Json::array();
  for (const auto& e : entries) {
    Json j;
    if (e.row) {
      j = row_to_json(*e.row);
    } else {
      j["d"] = e.triple.d;
      j["k"] = e.triple.k;
      j["m"] = e.triple.m;
      j["span"] = nullptr;
      j["dim"] = nullptr;
      j["deg"] = nullptr;
      j["quad"] = nullptr;
      j["error"] = e.error;
    }
    if (e.reference) {
      const auto& r = *e.reference;
      j["reference"] = Json{{"span", r.span}, {"dim", r.dim}, {"deg", r.deg}, {"gen", r.gen}};
    } else {
      j["reference"] = nullptr;
    }
    j["diff"] = e.diff;
    rows.push_back(std::move(j));
  }
  return Json{{"rows", rows}};
}

std::string row_to_csv(const InvariantRow& row) {
  std::ostringstream os;
  os << "d,k,m,span,dim,deg,quad\n"
     << row.d << ',' << row.k << ',' << row.m << ',' << row.span << ',' << row.dim << ','
     << opt_to_string(row.deg) << ',' << row.quad << '\n';
  return os.str();
}

std::string table_to_csv(const std::vector<TableEntry>& entries) {
  std::ostringstream os;
  os << "d,k,m,span,dim,deg,quad,ref_span,ref_dim,ref_deg,ref_gen,diff\n";
  for (const auto& e : entries) {
    os << e.triple.d << ',' << e.triple.k << ',' << e.triple.m << ',';
    if (e.row) {
      os << e.row->span << ',' << e.row->dim << ',' << opt_to_string(e.row->deg) << ','
         << e.row->quad << ',';
    } else {
      os << ",,,,";
    }
    if (e.reference) {
      const auto& r = *e.reference;
      os << r.span << ',' << r.dim << ',' << r.deg << ',' << r.gen << ',';
    } else {
      os << ",,,,";
    }
    os << e.diff << '\n';
  }
  return os.str();
}

namespace {

std::string render_aligned(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) os << "  ";
      if (i + 1 == row.size()) {
        os << row[i];
      } else {
        os << std::setw(static_cast<int>(width[i])) << row[i];
      }
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string row_to_pretty(const InvariantRow& row) {
  std::vector<std::vector<std::string>> cells{
      {"d", "k", "m", "span", "dim", "deg", "quad"},
      {std::to_string(row.d), std::to_string(row.k), std::to_string(row.m),
       std::to_string(row.span), std::to_string(row.dim), row.deg ? std::to_string(*row.deg) : "-",
       std::to_string(row.quad)}};
  std::string out = render_aligned(cells);
  if (!row.note.empty()) out += "note: " + row.note + "\n";
  return out;
}

std::string table_to_pretty(const std::vector<TableEntry>& entries) {
  std::vector<std::vector<std::string>> cells{
      {"d", "k", "m", "span", "dim", "deg", "quad", "ref(span/dim/deg/gen)", "diff"}};
  for (const auto& e : entries) {
    std::vector<std::string> c{std::to_string(e.triple.d), std::to_string(e.triple.k),
                               std::to_string(e.triple.m)};
    if (e.row) {
      c.push_back(std::to_string(e.row->span));
      c.push_back(std::to_string(e.row->dim));
      c.push_back(e.row->deg ? std::to_string(*e.row->deg) : "-");
      c.push_back(std::to_string(e.row->quad));
    } else {
      c.insert(c.end(), {"-", "-", "-", "-"});
    }
    if (e.reference) {
      const auto& r = *e.reference;
      c.push_back(std::to_string(r.span) + "/" + std::to_string(r.dim) + "/" +
                  std::to_string(r.deg) + "/" + std::to_string(r.gen));
    } else {
      c.push_back("-");
    }
    c.push_back(e.error.empty() ? e.diff : e.diff + " (" + e.error + ")");
    cells.push_back(std::move(c));
  }
  return render_aligned(cells);
}

LieCoefficients lie_from_json(const Json& j, int d, std::optional<int> m) {
  if (!j.is_object()) throw ParseError("Lyndon coordinates must be a JSON object", 0);
  std::vector<std::pair<Word, Rational>> entries;
  int longest = 1;
  for (const auto& [key, value] : j.items()) {
    Word w = Word::parse(key, d);
    longest = std::max(longest, static_cast<int>(w.size()));
    entries.emplace_back(std::move(w), rational_from_json(value));
  }
  LieCoefficients c(d, m.value_or(longest));
  for (const auto& [w, v] : entries) c.set(w, v);
  return c;
}

PwlPath path_from_json(const Json& j, std::optional<int> d) {
  if (!j.is_array() || j.empty()) throw ParseError("a path must be a non-empty JSON array", 0);
  PwlPath path;
  path.d = d.value_or(j.front().is_array() ? static_cast<int>(j.front().size()) : 0);
  for (const auto& seg : j) {
    if (!seg.is_array()) throw ParseError("each path segment must be a JSON array", 0);
    std::vector<Rational> v;
    for (const auto& x : seg) v.push_back(rational_from_json(x));
    path.segments.push_back(std::move(v));
  }
  path.validate();
  return path;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
}

Json coordchange_to_json(const CoordChangeMatrix& mat, const std::optional<Rational>& det) {
  Json index = Json::array();
  Json rows = Json::array();
  for (std::size_t i = 0; i < mat.rows.size(); ++i) {
    index.push_back(tuple_label(mat.index.tuples[i], mat.index.d));
    rows.push_back(poly_to_json(mat.rows[i]));
  }
  Json j;
  j["d"] = mat.index.d;
  j["k"] = mat.index.k;
  j["m"] = mat.index.m;
  j["index"] = std::move(index);
  j["rows"] = std::move(rows);
  j["determinant"] = det ? Json(format_rational(*det)) : Json(nullptr);
  return j;
}

std::string coordchange_to_csv(const CoordChangeMatrix& mat) {
  std::ostringstream os;
  os << "row,word,coefficient\n";
  for (std::size_t i = 0; i < mat.rows.size(); ++i) {
    const std::string label = tuple_label(mat.index.tuples[i], mat.index.d);
    for (const auto& [w, c] : mat.rows[i].terms()) {
      os << label << ',' << w.to_string(mat.index.d) << ',' << format_rational(c) << '\n';
    }
  }
  return os.str();
}

CoordChangeExport cmd_coordchange(int d, int k, const RunConfig& config) {
  (void)config;
  check_alphabet(d);
  if (k < 1) throw InvalidParameter("coordchange requires k >= 1");
  std::uint64_t size = 1;
  for (int i = 0; i < k; ++i) {
    size *= static_cast<std::uint64_t>(d);
    if (size > kCoordChangeBudget) {
      throw ResourceError("d^k exceeds the coordinate-change budget of " +
                          std::to_string(kCoordChangeBudget));
    }
  }
  CoordChangeExport out{coord_change_matrix(d, k, k), std::nullopt};
  out.determinant = out.matrix.determinant();
  return out;
}

Json cmd_signature(const Json& input, int k, const RunConfig& config) {
  if (k < 1) throw InvalidParameter("signature level must be >= 1");
  std::optional<int> d = config.d > 0 ? std::optional<int>(config.d) : std::nullopt;
  TensorSeries full(1, 1);
  if (input.is_array()) {
    PwlPath path = path_from_json(input, d);
    full = pwl_signature(path, k);
  } else if (input.is_object()) {
    if (!d) throw InvalidParameter("Lyndon coordinate input needs --d");
    std::optional<int> m = config.m > 0 ? std::optional<int>(config.m) : std::nullopt;
    LieCoefficients lie = lie_from_json(input, *d, m);
    full = exp_trunc(lie_element(lie, k));
  } else {
    throw ParseError("signature input must be a JSON array (path) or object (Lie element)", 0);
  }
  GroupLikeCheck check = is_group_like(full);
  LevelTensor level = LevelTensor::from_level(full.level(static_cast<std::size_t>(k)), k);
  Json j;
  j["d"] = full.alphabet();
  j["level"] = k;
  j["tensor"] = level_to_json(level);
  j["group_like"] = check.group_like;
  if (check.witness) {
    j["witness"] = Json{{"v", check.witness->first.to_string(full.alphabet())},
                        {"w", check.witness->second.to_string(full.alphabet())},
                        {"product", format_rational(check.product)},
                        {"shuffle_value", format_rational(check.shuffle_value)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

}  // namespace roughver
