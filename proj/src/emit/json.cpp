#include "qdiag/emit/json.hpp"

#include "qdiag/error.hpp"

namespace qdiag::emit {

using diagram::Diagram;
using nlohmann::ordered_json;

namespace {

ordered_json endpoint_json(const diagram::Endpoint& p) { return {{"alias", p.alias}, {"attribute", p.attribute}}; }

diagram::Endpoint endpoint_from(const ordered_json& j) {
  return {j.at("alias").get<std::string>(), j.at("attribute").get<std::string>()};
}

CompareOp op_from(const ordered_json& j) {
  auto op = parse_compare_op(j.get<std::string>());
  if (!op) throw InvalidDiagram("load", "unknown operator " + j.get<std::string>());
  return *op;
}

}  // namespace

ordered_json diagram_to_json(const Diagram& d) {
  ordered_json j;
  j["groups"] = ordered_json::array();
  for (const diagram::TableGroup& g : d.groups) {
    ordered_json jg;
    jg["id"] = g.id;
    jg["quantifier"] = std::string(logic::to_string(g.quantifier));
    jg["depth"] = g.depth;
    jg["parent"] = g.parent ? ordered_json(*g.parent) : ordered_json(nullptr);
    jg["tables"] = ordered_json::array();
    for (const diagram::TableBox& b : g.tables) {
      ordered_json jb{{"alias", b.alias}, {"table", b.table_name}, {"rows", ordered_json::array()}};
      for (const diagram::Row& r : b.rows) {
        ordered_json jr{{"attribute", r.attribute}};
        if (r.is_selection()) {
          jr["op"] = std::string(to_string(r.op));
          jr["constant"] = {{"kind", r.constant.kind == Constant::Kind::String ? "string" : "number"},
                            {"literal", r.constant.literal}};
        }
        jb["rows"].push_back(std::move(jr));
      }
      jg["tables"].push_back(std::move(jb));
    }
    j["groups"].push_back(std::move(jg));
  }
  j["edges"] = ordered_json::array();
  for (const diagram::Edge& e : d.edges) {
    j["edges"].push_back({{"from", endpoint_json(e.from)},
                          {"to", endpoint_json(e.to)},
                          {"directed", e.directed},
                          {"label", e.label ? ordered_json(std::string(to_string(*e.label))) : ordered_json(nullptr)},
                          {"select_link", e.select_link}});
  }
  j["select_box"] = {{"rows", d.select_box.rows}};
  return j;
}

std::string emit_json(const Diagram& d) { return diagram_to_json(d).dump(2) + "\n"; }

Diagram diagram_from_json(const ordered_json& j) {
  Diagram d;
  try {
    for (const auto& jg : j.at("groups")) {
      diagram::TableGroup g;
      g.id = jg.at("id").get<int>();
      auto q = logic::parse_quantifier(jg.at("quantifier").get<std::string>());
      if (!q) throw InvalidDiagram("load", "unknown quantifier " + jg.at("quantifier").get<std::string>());
      g.quantifier = *q;
      g.depth = jg.value("depth", 0);
      if (jg.contains("parent") && !jg.at("parent").is_null()) g.parent = jg.at("parent").get<int>();
      for (const auto& jb : jg.at("tables")) {
        diagram::TableBox b{jb.at("alias").get<std::string>(), jb.at("table").get<std::string>(), {}};
        for (const auto& jr : jb.at("rows")) {
          if (!jr.contains("op")) {
            b.rows.push_back(diagram::Row::plain(jr.at("attribute").get<std::string>()));
            continue;
          }
          const auto& jc = jr.at("constant");
          const std::string kind = jc.at("kind").get<std::string>();
          if (kind != "string" && kind != "number") throw InvalidDiagram("load", "unknown constant kind " + kind);
          b.rows.push_back(diagram::Row::selection(
              jr.at("attribute").get<std::string>(), op_from(jr.at("op")),
              Constant{kind == "string" ? Constant::Kind::String : Constant::Kind::Number,
                       jc.at("literal").get<std::string>()}));
        }
        g.tables.push_back(std::move(b));
      }
      d.groups.push_back(std::move(g));
    }
    for (const auto& je : j.at("edges")) {
      diagram::Edge e;
      e.from = endpoint_from(je.at("from"));
      e.to = endpoint_from(je.at("to"));
      e.directed = je.at("directed").get<bool>();
      if (je.contains("label") && !je.at("label").is_null()) e.label = op_from(je.at("label"));
      e.select_link = je.value("select_link", false);
      d.edges.push_back(std::move(e));
    }
    d.select_box.rows = j.at("select_box").at("rows").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidDiagram("load", ex.what());
  }
  diagram::check_well_formed(d);
  return d;
}

Diagram load_diagram(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidDiagram("load", ex.what());
  }
  return diagram_from_json(j);
}

}  // namespace qdiag::emit
