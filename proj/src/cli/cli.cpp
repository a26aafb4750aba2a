#include "qdiag/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qdiag/diagram/builder.hpp"
#include "qdiag/diagram/metrics.hpp"
#include "qdiag/diagram/reading_order.hpp"
#include "qdiag/emit/dot.hpp"
#include "qdiag/emit/json.hpp"
#include "qdiag/error.hpp"
#include "qdiag/logic/compare.hpp"
#include "qdiag/logic/json.hpp"
#include "qdiag/logic/simplify.hpp"
#include "qdiag/logic/trc.hpp"
#include "qdiag/logic/validate.hpp"
#include "qdiag/pipeline.hpp"
#include "qdiag/recovery/recover.hpp"

namespace qdiag::cli {

namespace {

struct Config {
  std::string input;
  std::string output;
  std::string format;
  bool no_simplify = false;
  bool allow_degenerate = false;
  int max_depth = logic::kDefaultMaxDepth;
  std::string render;
};

/// Raised for unreadable input or unwritable output.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const Config& c, std::istream& in) {
  std::ostringstream buf;
  if (c.input.empty() || c.input == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream f(c.input, std::ios::binary);
  if (!f) throw IoError("cannot read " + c.input);
  buf << f.rdbuf();
  return buf.str();
}

void write_output(const Config& c, std::ostream& out, const std::string& text) {
  if (c.output.empty() || c.output == "-") {
    out << text;
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f || !(f << text)) throw IoError("cannot write " + c.output);
}

logic::LogicTree shaped(logic::LogicTree lt, const Config& c) {
  return c.no_simplify ? lt : logic::simplify_forall(std::move(lt));
}

diagram::BuildOptions build_options(const Config& c) {
  return {!c.no_simplify, c.allow_degenerate, c.max_depth};
}

void render_svg(const Config& c, const std::string& dot, std::ostream& err) {
  const char* exe = std::getenv("QDIAG_DOT");
  if (exe == nullptr || *exe == '\0') {
    err << "warning: QDIAG_DOT is not set; skipping SVG rendering\n";
    return;
  }
  if (c.output.empty() || c.output == "-") {
    err << "warning: --render needs -o FILE; skipping SVG rendering\n";
    return;
  }
  (void)dot;
  auto shell_quote = [](const std::string& s) {
    std::string q = "'";
    for (char ch : s) q += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
    return q + "'";
  };
  const std::string cmd = shell_quote(exe) + " -Tsvg -o " + shell_quote(c.output + ".svg") + " " + shell_quote(c.output);
  if (std::system(cmd.c_str()) != 0) err << "warning: renderer failed: " << cmd << "\n";
}

int cmd_viz(const Config& c, std::istream& in, std::ostream& out, std::ostream& err) {
  const diagram::Diagram d = diagram::build_diagram(compile(read_input(c, in)), build_options(c));
  const std::string format = c.format.empty() ? "dot" : c.format;
  const std::string text = format == "json" ? emit::emit_json(d) : emit::emit_dot(d);
  write_output(c, out, text);
  if (!c.render.empty()) {
    if (format != "dot")
      err << "warning: --render applies to DOT output only\n";
    else
      render_svg(c, text, err);
  }
  return kOk;
}

int cmd_lt(const Config& c, std::istream& in, std::ostream& out) {
  write_output(c, out, logic::to_json(shaped(compile(read_input(c, in)), c)).dump(2) + "\n");
  return kOk;
}

int cmd_trc(const Config& c, std::istream& in, std::ostream& out) {
  write_output(c, out, logic::render_trc(shaped(compile(read_input(c, in)), c)) + "\n");
  return kOk;
}

int cmd_check(const Config& c, std::istream& in, std::ostream& out) {
  sql::ResolvedQuery resolved;
  const logic::LogicTree lt = compile(read_input(c, in), resolved);
  const logic::ValidationReport report = logic::check_nondegenerate(lt, c.max_depth);
  std::string text;
  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["ok"] = report.ok();
    j["depth_ok"] = report.depth_ok;
    j["max_depth"] = logic::max_depth(lt);
    j["violations"] = nlohmann::ordered_json::array();
    for (const logic::Violation& v : report.violations) {
      nlohmann::ordered_json jv{{"kind", std::string(to_string(v.kind))}, {"node", logic::to_string(v.node_path)}};
      jv["predicate"] = v.predicate ? nlohmann::ordered_json(logic::to_string(*v.predicate)) : nullptr;
      jv["message"] = v.message;
      j["violations"].push_back(std::move(jv));
    }
    j["renames"] = nlohmann::ordered_json::array();
    for (const sql::AliasRename& r : resolved.renames)
      j["renames"].push_back({{"block", r.block}, {"from", r.original}, {"to", r.renamed}});
    text = j.dump(2) + "\n";
  } else {
    for (const sql::AliasRename& r : resolved.renames)
      text += "note: alias " + r.original + " in block " + std::to_string(r.block) + " renamed to " + r.renamed + "\n";
    text += logic::to_text(report);
  }
  write_output(c, out, text);
  return report.ok() ? kOk : kValidationFailure;
}

int cmd_recover(const Config& c, std::istream& in, std::ostream& out) {
  const diagram::Diagram d = emit::load_diagram(read_input(c, in));
  const recovery::DiagramGraph g = recovery::graph_of(d);
  const recovery::DepthAssignment a = recovery::recover_depths(g);
  if (c.format == "text") {
    std::string text;
    for (const auto& [id, depth] : a.depth) {
      text += g.nodes.at(id).name + ": depth " + std::to_string(depth);
      if (auto p = a.parent.find(id); p != a.parent.end()) text += ", parent " + g.nodes.at(p->second).name;
      text += "\n";
    }
    write_output(c, out, text);
  } else if (c.format == "lt") {
    write_output(c, out, logic::to_json(recovery::recover_logic_tree(d, a)).dump(2) + "\n");
  } else {
    write_output(c, out, recovery::to_json(a, g).dump(2) + "\n");
  }
  return kOk;
}

int cmd_roundtrip(const Config& c, std::istream& in, std::ostream& out, std::ostream& err) {
  const logic::LogicTree source = shaped(compile(read_input(c, in)), c);
  const diagram::Diagram built = diagram::build_diagram(source, build_options(c));
  const diagram::Diagram loaded = emit::load_diagram(emit::emit_json(built));
  const recovery::DiagramGraph g = recovery::graph_of(loaded);
  const recovery::DepthAssignment a = recovery::recover_depths(g);

  bool depths_match = true;
  for (const diagram::TableGroup& grp : built.groups) {
    depths_match = depths_match && a.depth.at(grp.id) == grp.depth;
    if (grp.parent) depths_match = depths_match && a.parent.at(grp.id) == *grp.parent;
  }
  const logic::LogicTree recovered = recovery::recover_logic_tree(loaded, a);
  if (!depths_match || !logic::lt_equal(source, recovered, false)) {
    err << "error: recovered logic tree differs from the source\n";
    err << "source:\n" << logic::to_json(source).dump(2) << "\nrecovered:\n" << logic::to_json(recovered).dump(2) << "\n";
    return kValidationFailure;
  }
  std::string text = "ok: recovered logic tree equals source (" + std::to_string(built.groups.size()) + " groups:";
  for (const auto& [id, depth] : a.depth) text += " " + g.nodes.at(id).name + "@" + std::to_string(depth);
  write_output(c, out, text + ")\n");
  return kOk;
}

int cmd_metrics(const Config& c, std::istream& in, std::ostream& out) {
  const std::string sql_text = read_input(c, in);
  const diagram::Diagram d = diagram::build_diagram(compile(sql_text), build_options(c));
  const diagram::ElementCounts e = diagram::count_elements(d);
  const std::size_t words = diagram::count_words(sql_text);
  std::string text;
  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["elements"] = {{"total", e.total()},          {"table_boxes", e.table_boxes},
                     {"rows", e.rows},              {"edges", e.edges},
                     {"edge_labels", e.edge_labels}, {"quantifier_boxes", e.quantifier_boxes},
                     {"select_boxes", e.select_boxes}};
    j["words"] = words;
    j["reading_order"] = diagram::visit_sequence(d, diagram::reading_order(d));
    text = j.dump(2) + "\n";
  } else {
    text = "elements: " + std::to_string(e.total()) + " (table boxes " + std::to_string(e.table_boxes) + ", rows " +
           std::to_string(e.rows) + ", edges " + std::to_string(e.edges) + ", edge labels " +
           std::to_string(e.edge_labels) + ", quantifier boxes " + std::to_string(e.quantifier_boxes) +
           ", select box " + std::to_string(e.select_boxes) + ")\n";
    text += "words: " + std::to_string(words) + "\n";
    text += "reading order: " + diagram::to_text(d, diagram::reading_order(d)) + "\n";
  }
  write_output(c, out, text);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"qdiag: SQL to logic diagrams and back"};
  app.name("qdiag");
  app.require_subcommand(1);
  Config c;

  auto io = [&c](CLI::App* sub) {
    sub->add_option("-i,--input", c.input, "Input file (default: standard input)");
    sub->add_option("-o,--output", c.output, "Output file (default: standard output)");
  };
  auto sql_flags = [&c](CLI::App* sub) {
    sub->add_option("--max-depth", c.max_depth, "Deepest nesting accepted")->check(CLI::Range(0, 64));
  };
  auto simplify_flag = [&c](CLI::App* sub) {
    sub->add_flag("--no-simplify", c.no_simplify, "Keep NOT EXISTS pairs instead of FOR ALL");
  };

  CLI::App* viz = app.add_subcommand("viz", "SQL to diagram (DOT or JSON)");
  io(viz);
  sql_flags(viz);
  simplify_flag(viz);
  viz->add_option("--format", c.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  viz->add_flag("--allow-degenerate", c.allow_degenerate, "Draw queries that fail the non-degeneracy check");
  viz->add_option("--render", c.render, "Also render with $QDIAG_DOT")->check(CLI::IsMember({"svg"}));

  CLI::App* lt = app.add_subcommand("lt", "SQL to logic tree JSON");
  io(lt);
  simplify_flag(lt);

  CLI::App* trc = app.add_subcommand("trc", "SQL to tuple relational calculus");
  io(trc);
  simplify_flag(trc);

  CLI::App* check = app.add_subcommand("check", "Non-degeneracy report");
  io(check);
  sql_flags(check);
  check->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  CLI::App* recover = app.add_subcommand("recover", "Diagram JSON to depths and parents");
  io(recover);
  recover->add_option("--format", c.format, "json, text or lt")->check(CLI::IsMember({"json", "text", "lt"}));

  CLI::App* roundtrip = app.add_subcommand("roundtrip", "SQL to diagram and back, comparing logic trees");
  io(roundtrip);
  sql_flags(roundtrip);
  simplify_flag(roundtrip);

  CLI::App* metrics = app.add_subcommand("metrics", "Element and word counts");
  io(metrics);
  sql_flags(metrics);
  simplify_flag(metrics);
  metrics->add_flag("--allow-degenerate", c.allow_degenerate, "Count queries that fail the non-degeneracy check");
  metrics->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (viz->parsed()) return cmd_viz(c, in, out, err);
    if (lt->parsed()) return cmd_lt(c, in, out);
    if (trc->parsed()) return cmd_trc(c, in, out);
    if (check->parsed()) return cmd_check(c, in, out);
    if (recover->parsed()) return cmd_recover(c, in, out);
    if (roundtrip->parsed()) return cmd_roundtrip(c, in, out, err);
    if (metrics->parsed()) return cmd_metrics(c, in, out);
  } catch (const logic::DegenerateQuery& e) {
    err << "error: query is degenerate\n" << logic::to_text(e.report());
    return kValidationFailure;
  } catch (const InvalidDiagram& e) {
    err << "error: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace qdiag::cli
