// roughver: command-line front end for the signature-tensor and toric
// invariant computations.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "roughver/errors.hpp"
#include "roughver/lyndon.hpp"
#include "roughver/report.hpp"

namespace {

using namespace roughver;

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2, kResource = 3, kDisagreement = 4 };

struct Options {
  int d = 0;
  int k = 0;
  int m = 0;
  std::string format = "json";
  int cap = 7;
  std::size_t mem_mib = 2048;
  std::string out;
  // shuffle
  std::vector<std::string> operands;
  unsigned power = 0;
  // signature
  std::string input_file;
  std::string input_json;
  // table
  std::string rows;
};

RunConfig make_config(const std::string& command, const Options& o) {
  RunConfig c;
  c.command = command;
  c.d = o.d;
  c.k = o.k;
  c.m = o.m;
  c.format = parse_format(o.format);
  c.dimension_cap = o.cap;
  c.memory_budget_bytes = o.mem_mib << 20;
  c.out = o.out;
  return c;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file '" + out + "'");
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// word -> "p/q" object as csv or aligned text
std::string terms_text(const Json& terms, OutputFormat f) {
  std::ostringstream os;
  if (f == OutputFormat::Csv) os << "word,coefficient\n";
  std::size_t width = 1;
  for (const auto& [w, c] : terms.items()) width = std::max(width, w.size());
  for (const auto& [w, c] : terms.items()) {
    const std::string word = w.empty() ? "e" : w;
    if (f == OutputFormat::Csv) {
      os << word << ',' << c.get<std::string>() << '\n';
    } else {
      os << word << std::string(width + 2 - word.size(), ' ') << c.get<std::string>() << '\n';
    }
  }
  return os.str();
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParameter(what);
}

std::string run_lyndon(const Options& o) {
  require(o.d >= 1 && o.m >= 1, "lyndon needs --d >= 1 and --m >= 1");
  LyndonSet set = lyndon_words(o.d, o.m);
  OutputFormat f = parse_format(o.format);
  std::ostringstream os;
  if (f == OutputFormat::Json) {
    Json words = Json::array();
    for (const Word& w : set.words) words.push_back(w.to_string(o.d));
    Json counts = Json::object();
    for (int l = 1; l <= o.m; ++l) counts[std::to_string(l)] = lyndon_count(l, o.d);
    return dump(Json{{"d", o.d}, {"m", o.m}, {"words", words}, {"counts", counts}});
  }
  if (f == OutputFormat::Csv) os << "length,word\n";
  for (const Word& w : set.words) {
    if (f == OutputFormat::Csv) os << w.size() << ',';
    os << w.to_string(o.d) << '\n';
  }
  return os.str();
}

FreePoly operand(const std::string& text, int d) {
  if (!text.empty() && text.front() == '{') return poly_from_json(parse_json_text(text), d);
  if (text == "e") return FreePoly::unit(d);
  return FreePoly::word(d, Word::parse(text, d));
}

std::string run_shuffle(const Options& o) {
  require(o.d >= 1, "shuffle needs --d >= 1");
  require(!o.operands.empty(), "shuffle needs at least one operand");
  FreePoly result = operand(o.operands.front(), o.d);
  if (o.operands.size() == 1) {
    result = shuffle_power(result, o.power);
  } else {
    require(o.power == 0, "--power takes a single operand");
    for (std::size_t i = 1; i < o.operands.size(); ++i) {
      result = shuffle(result, operand(o.operands[i], o.d));
    }
  }
  const OutputFormat f = parse_format(o.format);
  if (f != OutputFormat::Json) return terms_text(poly_to_json(result), f);
  return dump(poly_to_json(result));
}

std::string run_signature(const Options& o) {
  require(o.k >= 1, "signature needs --k >= 1");
  require(o.input_file.empty() != o.input_json.empty(),
          "signature needs exactly one of --input FILE or --json TEXT");
  std::string text = o.input_json;
  if (!o.input_file.empty()) {
    std::ifstream f(o.input_file, std::ios::binary);
    if (!f) throw InvalidParameter("cannot read input file '" + o.input_file + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    text = buf.str();
  }
  RunConfig config = make_config("signature", o);
  Json j = cmd_signature(parse_json_text(text), o.k, config);
  if (config.format == OutputFormat::Csv) return terms_text(j["tensor"], config.format);
  if (config.format == OutputFormat::Pretty) {
    std::string out = terms_text(j["tensor"], config.format);
    out += std::string("group-like: ") + (j["group_like"].get<bool>() ? "yes" : "no");
    if (!j["witness"].is_null()) {
      out += " (fails at v=" + j["witness"]["v"].get<std::string>() +
             ", w=" + j["witness"]["w"].get<std::string>() + ")";
    }
    return out + "\n";
  }
  return dump(j);
}

std::string run_coordchange(const Options& o) {
  require(o.d >= 1 && o.k >= 1, "coordchange needs --d >= 1 and --k >= 1");
  RunConfig config = make_config("coordchange", o);
  CoordChangeExport ex = cmd_coordchange(o.d, o.k, config);
  if (config.format == OutputFormat::Csv) return coordchange_to_csv(ex.matrix);
  return dump(coordchange_to_json(ex.matrix, ex.determinant));
}

std::string run_invariants(const Options& o) {
  require(o.d >= 1 && o.k >= 1 && o.m >= 1, "invariants needs --d, --k, --m >= 1");
  RunConfig config = make_config("invariants", o);
  InvariantRow row = cmd_invariants(o.d, o.k, o.m, config);
  switch (config.format) {
    case OutputFormat::Csv: return row_to_csv(row);
    case OutputFormat::Pretty: return row_to_pretty(row);
    default: return dump(row_to_json(row));
  }
}

std::vector<Triple> parse_rows(const std::string& spec) {
  std::vector<Triple> rows;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    Triple t{};
    char c1 = 0, c2 = 0;
    std::istringstream is(item);
    if (!(is >> t.d >> c1 >> t.k >> c2 >> t.m) || c1 != ',' || c2 != ',' || !is.eof()) {
      throw InvalidParameter("malformed row '" + item + "' (expected d,k,m)");
    }
    rows.push_back(t);
  }
  return rows;
}

std::string run_table(const Options& o, bool rows_given) {
  RunConfig config = make_config("table", o);
  std::vector<Triple> rows;
  if (rows_given) {
    rows = parse_rows(o.rows);
  } else {
    for (const auto& r : reference_table()) rows.push_back({r.d, r.k, r.m});
  }
  std::vector<TableEntry> entries = cmd_table(rows, config);
  switch (config.format) {
    case OutputFormat::Csv: return table_to_csv(entries);
    case OutputFormat::Pretty: return table_to_pretty(entries);
    default: return dump(table_to_json(entries));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact signature-tensor algebra and Rough Veronese invariants"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json, csv or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    sub->add_option("--out", o.out, "write output to this file instead of stdout");
  };

  auto* lyndon = app.add_subcommand("lyndon", "List Lyndon words of length <= m");
  lyndon->add_option("--d", o.d, "alphabet size")->required();
  lyndon->add_option("--m", o.m, "maximal length")->required();
  add_common(lyndon);

  auto* shuf = app.add_subcommand("shuffle", "Shuffle product of words or polynomials");
  shuf->add_option("--d", o.d, "alphabet size")->required();
  shuf->add_option("operands", o.operands, "words (\"12\"), \"e\", or JSON polynomials")->required();
  shuf->add_option("--power", o.power, "shuffle power of a single operand");
  add_common(shuf);

  auto* sig = app.add_subcommand("signature", "Level-k signature of a path or Lie element");
  sig->add_option("--k", o.k, "signature level")->required();
  sig->add_option("--d", o.d, "alphabet size (required for Lie input)");
  sig->add_option("--m", o.m, "Lie truncation (defaults to the longest word)");
  sig->add_option("--input", o.input_file, "JSON file: [[q,...],...] path or {\"word\": \"p/q\"}");
  sig->add_option("--json", o.input_json, "JSON input given inline");
  add_common(sig);

  auto* cc = app.add_subcommand("coordchange", "Export the toric change of coordinates (m = k)");
  cc->add_option("--d", o.d, "alphabet size")->required();
  cc->add_option("--k", o.k, "tensor order")->required();
  add_common(cc);

  auto* inv = app.add_subcommand("invariants", "span, dim, deg, quad for one R_{d,k,m}");
  inv->add_option("--d", o.d, "alphabet size")->required();
  inv->add_option("--k", o.k, "tensor order")->required();
  inv->add_option("--m", o.m, "Lie truncation")->required();
  inv->add_option("--cap", o.cap, "largest dimension for which the degree is computed");
  inv->add_option("--mem", o.mem_mib, "memory budget in MiB for the degree computation");
  add_common(inv);

  auto* table = app.add_subcommand("table", "Invariants for many triples, diffed against the reference");
  auto* rows_opt = table->add_option("--rows", o.rows, "\"d,k,m;d,k,m;...\" (default: reference triples)");
  table->add_option("--cap", o.cap, "largest dimension for which the degree is computed");
  table->add_option("--mem", o.mem_mib, "memory budget in MiB for the degree computation");
  add_common(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    std::string text;
    if (*lyndon) text = run_lyndon(o);
    else if (*shuf) text = run_shuffle(o);
    else if (*sig) text = run_signature(o);
    else if (*cc) text = run_coordchange(o);
    else if (*inv) text = run_invariants(o);
    else if (*table) text = run_table(o, rows_opt->count() > 0);
    emit(text, o.out);
    return kOk;
  } catch (const InvalidParameter& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return kResource;
  } catch (const InternalDisagreement& e) {
    std::cerr << "internal disagreement: " << e.what() << '\n';
    return kDisagreement;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}
