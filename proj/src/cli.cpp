#include "edr/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "edr/completion.hpp"
#include "edr/matred.hpp"
#include "edr/registry.hpp"
#include "edr/stability.hpp"

namespace edr {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string load_source(std::string_view source) {
  const std::string s = trim(source);
  if (s.empty() || s.front() == '{' || s.front() == '[') return s;
  std::error_code ec;
  if (std::filesystem::is_regular_file(s, ec)) {
    std::ifstream in(s);
    std::stringstream buf;
    buf << in.rdbuf();
    return trim(buf.str());
  }
  return std::string(source);
}

// --ring against a payload's "ring" member.
Ring resolve_ring(std::string_view flag, const Json* declared) {
  if (!declared) {
    if (flag.empty()) throw ParseError("no ring given: pass --ring or a \"ring\" member");
    return parse_ring(flag);
  }
  if (!declared->is_string()) throw ParseError("\"ring\" must be a string", declared->position());
  const Ring payload = parse_ring(declared->text());
  if (flag.empty()) return payload;
  const Ring given = parse_ring(flag);
  if (given != payload) {
    throw ParseError("ring mismatch: --ring " + given.expression() + " but payload declares " +
                     payload.expression());
  }
  return given;
}

std::vector<std::string> grid_rows(const std::string& text) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\\' && i + 1 < text.size() && text[i + 1] == 'n') {
      s += '\n';
      ++i;
    } else {
      s += text[i] == ';' ? '\n' : text[i];
    }
  }
  std::vector<std::string> rows;
  for (auto& line : split_top_level(s, '\n')) {
    if (!trim(line).empty()) rows.push_back(line);
  }
  return rows;
}

std::vector<std::string> grid_tokens(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : line) {
    if (ch == '[' || ch == '{' || ch == '(') ++depth;
    if (ch == ']' || ch == '}' || ch == ')') --depth;
    if (depth == 0 && (ch == ' ' || ch == '\t' || ch == '\r')) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::vector<Element> parse_row(const Ring& ring, std::string_view text) {
  std::vector<Element> out;
  for (const auto& tok : split_top_level(text, ',')) {
    const std::string t = trim(tok);
    if (t.empty()) throw ParseError("empty entry in row '" + std::string(text) + "'");
    out.push_back(parse_element(ring, t));
  }
  return out;
}

struct Options {
  std::string ring, input, row, d, property, output = "json";
  std::optional<std::uint64_t> bound;
  bool verify = true;
};

void emit(std::ostream& out, const Options& o, const Json& doc, const std::string& pretty) {
  if (o.output == "pretty") {
    out << pretty;
  } else {
    out << dump_json(doc, 2) << '\n';
  }
}

int cmd_rings(const Options& o, std::ostream& out) {
  Json list = Json::array();
  std::string pretty;
  for (const auto& expr : shipped_ring_examples()) {
    const RingEntry e = make_ring(expr);
    list.push_back(Json::object({{"expression", Json::string(e.ring.expression())},
                                 {"finite", Json::boolean(e.finite)},
                                 {"bezoutTotal", Json::boolean(e.bezout_total)},
                                 {"stableStrategy", Json::string(e.stable_strategy)},
                                 {"unitLiftStrategy", Json::string(e.unit_lift_strategy)}}));
    pretty += e.ring.expression() + (e.finite ? "  finite" : "  infinite") +
              (e.bezout_total ? "  bezout" : "  partial-bezout") + "  stable:" + e.stable_strategy +
              "  lift:" + e.unit_lift_strategy + "\n";
  }
  emit(out, o, Json::object({{"rings", list}}), pretty);
  return exit_ok;
}

int cmd_reduce(const Options& o, std::ostream& out, std::ostream& err, bool two_by_two) {
  if (o.input.empty()) throw ParseError("--input is required");
  const Matrix A = read_matrix(o.input, o.ring);
  const ReductionResult r = two_by_two ? reduce_2x2(A) : diagonal_reduce(A);
  bool verified = false;
  if (o.verify) {
    const auto report = verify_reduction(A, r);
    if (!report) {
      err << "edr: verification failed: " << report.failure << '\n';
      return exit_internal;
    }
    verified = true;
  }
  std::string pretty = "D:\n" + format_matrix(r.D) + "P:\n" + format_matrix(r.P) + "Q:\n" + format_matrix(r.Q);
  if (o.verify) pretty += "verified: true\n";
  emit(out, o, reduction_to_json(r, verified), pretty);
  return exit_ok;
}

int cmd_complete(const Options& o, std::ostream& out, std::ostream& err) {
  std::optional<Ring> ring;
  std::vector<Element> row;
  std::optional<Element> d;
  if (!o.input.empty()) {
    const Json doc = parse_json(load_source(o.input));
    if (!doc.is_object()) throw ParseError("completion payload must be an object", doc.position());
    ring = resolve_ring(o.ring, doc.find("ring"));
    const Json* r = doc.find("row");
    if (!r || !r->is_array()) throw ParseError("payload needs a \"row\" array", doc.position());
    for (const auto& e : r->items()) row.push_back(element_from_json(*ring, e));
    if (const Json* dj = doc.find("d")) d = element_from_json(*ring, *dj);
  } else {
    if (o.row.empty()) throw ParseError("--row or --input is required");
    ring = resolve_ring(o.ring, nullptr);
    row = parse_row(*ring, o.row);
  }
  if (!o.d.empty()) d = parse_element(*ring, trim(o.d));
  const CompletionResult res = d ? complete_row(row, *d) : complete_unimodular(row);
  Json doc = completion_to_json(res, o.output != "pretty");
  if (o.verify) {
    if (determinant(res.matrix) != res.d) {
      err << "edr: verification failed: determinant differs from d\n";
      return exit_internal;
    }
    doc.set("verified", Json::boolean(true));
  }
  emit(out, o, doc, format_matrix(res.matrix) + "det = " + format_element(res.d) + "\n");
  return exit_ok;
}

int cmd_check(const Options& o, std::ostream& out) {
  if (o.property.empty()) throw ParseError("--property is required");
  const Ring ring = resolve_ring(o.ring, nullptr);
  const Property p = parse_property(o.property);
  const PropertyVerdict v = check_property(ring, p, o.bound);
  std::string pretty = "ring: " + ring.expression() + "\nproperty: " + to_string(p) +
                       "\nholds: " + (v.holds ? "true" : "false") + "\n";
  if (!v.witness.empty()) {
    pretty += "witness:";
    for (const auto& w : v.witness) pretty += " " + format_element(w);
    pretty += "\n";
  }
  if (v.search_bound) pretty += "searchBound: " + std::to_string(*v.search_bound) + "\n";
  if (v.y_window) pretty += "yWindow: " + std::to_string(*v.y_window) + "\n";
  Json doc = verdict_to_json(v);
  doc.set("ring", Json::string(ring.expression()));
  emit(out, o, doc, pretty);
  return exit_ok;
}

}  // namespace

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out(1);
  int depth = 0;
  bool quoted = false;
  for (char ch : text) {
    if (ch == '"') quoted = !quoted;
    if (!quoted) {
      if (ch == '[' || ch == '{' || ch == '(') ++depth;
      if (ch == ']' || ch == '}' || ch == ')') --depth;
      if (depth == 0 && ch == sep) {
        out.emplace_back();
        continue;
      }
    }
    out.back() += ch;
  }
  return out;
}

namespace {

Matrix read_grid(const std::string& text, std::string_view ring) {
  const Ring r = resolve_ring(ring, nullptr);
  std::vector<std::vector<Element>> rows;
  for (const auto& line : grid_rows(text)) {
    std::vector<Element> row;
    for (const auto& tok : grid_tokens(line)) row.push_back(parse_element(r, tok));
    if (!rows.empty() && row.size() != rows[0].size()) {
      throw ParseError("ragged matrix: row " + std::to_string(rows.size() + 1) + " has " +
                       std::to_string(row.size()) + " entries, expected " + std::to_string(rows[0].size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty matrix");
  return Matrix::from_rows(r, rows);
}

}  // namespace

Matrix read_matrix(std::string_view source, std::string_view ring) {
  const std::string text = load_source(source);
  if (text.empty() || (text.front() != '{' && text.front() != '[')) return read_grid(text, ring);
  Json doc;
  try {
    doc = parse_json(text);
  } catch (const ParseError& json_error) {
    // a grid whose first entry is a bracketed element
    if (text.front() == '{') throw;
    try {
      return read_grid(text, ring);
    } catch (const ParseError&) {
      throw json_error;
    }
  }
  if (doc.is_array()) return matrix_from_json(resolve_ring(ring, nullptr), doc);
  if (!doc.is_object()) throw ParseError("matrix payload must be an object or an array", doc.position());
  const Ring r = resolve_ring(ring, doc.find("ring"));
  const Json* rows = doc.find("rows");
  if (!rows) throw ParseError("matrix payload needs a \"rows\" member", doc.position());
  return matrix_from_json(r, *rows);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact diagonal reduction, row completion and stability checks over effective rings", "edr"};
  app.require_subcommand(1);
  Options o;

  auto ring_opt = [&](CLI::App* c) { c->add_option("--ring", o.ring, "Ring descriptor, e.g. z, zmod:12, gfpoly:5"); };
  auto common = [&](CLI::App* c) {
    c->add_option("--output", o.output, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));
  };

  auto* snf = app.add_subcommand("snf", "Diagonal reduction P·A·Q = D");
  auto* r22 = app.add_subcommand("reduce2x2", "Elementary reduction of [[a,0],[b,c]] to diag(1, δ)");
  for (auto* c : {snf, r22}) {
    ring_opt(c);
    c->add_option("--input", o.input, "Matrix as JSON, whitespace grid or file path");
    c->add_option("--verify", o.verify, "Re-check the certificate before exiting")->default_val(true);
    common(c);
  }
  auto* comp = app.add_subcommand("complete", "Complete a row to a square matrix of determinant d");
  ring_opt(comp);
  comp->add_option("--row", o.row, "Comma separated row entries");
  comp->add_option("--d", o.d, "Target determinant (default 1)");
  comp->add_option("--input", o.input, "JSON payload {\"ring\", \"row\", \"d\"} or file path");
  comp->add_option("--verify", o.verify, "Re-check the determinant before exiting")->default_val(true);
  common(comp);

  auto* check = app.add_subcommand("check", "Check a ring property");
  ring_opt(check);
  check->add_option("--property", o.property,
                    "stable-range-1, clean, adequate-element, locally-stable, neat-range-1");
  check->add_option("--bound", o.bound, "Search bound for infinite rings");
  common(check);

  auto* rings = app.add_subcommand("rings", "List the ring registry");
  common(rings);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "edr: error: " << e.what() << '\n';
    return exit_parse;
  }

  try {
    if (*snf) return cmd_reduce(o, out, err, false);
    if (*r22) return cmd_reduce(o, out, err, true);
    if (*comp) return cmd_complete(o, out, err);
    if (*check) return cmd_check(o, out);
    return cmd_rings(o, out);
  } catch (const ParseError& e) {
    err << "edr: parse error: " << e.what() << '\n';
    return exit_parse;
  } catch (const InternalError& e) {
    err << "edr: internal error: " << e.what() << '\n';
    return exit_internal;
  } catch (const Error& e) {
    err << "edr: error: " << e.what() << '\n';
    return exit_precondition;
  } catch (const std::invalid_argument& e) {
    err << "edr: parse error: " << e.what() << '\n';
    return exit_parse;
  }
}

}  // namespace edr
