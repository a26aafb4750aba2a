#include "qdiag/logic/trc.hpp"

#include <map>

namespace qdiag::logic {

namespace {

std::string bindings(const LtNode& n, std::string_view quantifier) {
  std::string out;
  for (std::size_t i = 0; i < n.tables.size(); ++i) {
    if (i) out += ' ';
    out += quantifier;
    out += n.tables[i].alias;
    out += " ∈ ";
    out += n.tables[i].table;
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string formula(const LtNode& n);

std::vector<std::string> child_formulas(const LtNode& n) {
  std::vector<std::string> out;
  for (const LtNode& c : n.children) out.push_back(formula(c));
  return out;
}

std::vector<std::string> predicate_texts(const LtNode& n) {
  std::vector<std::string> out;
  for (const Predicate& p : n.predicates) out.push_back(to_string(p));
  return out;
}

std::string bracket(const std::string& head, const std::string& body) {
  if (body.empty()) return head;
  return head + " [" + body + "]";
}

std::string formula(const LtNode& n) {
  std::vector<std::string> preds = predicate_texts(n);
  std::vector<std::string> kids = child_formulas(n);
  if (n.quantifier == Quantifier::ForAll) {
    std::string head = bindings(n, "∀");
    std::string premise = join(preds, " ∧ ");
    std::string conclusion = join(kids, " ∧ ");
    if (kids.empty()) return bracket(head, premise.empty() ? std::string("false") : "¬(" + premise + ")");
    if (preds.empty()) return bracket(head, conclusion);
    return bracket(head, premise + " → " + conclusion);
  }
  preds.insert(preds.end(), kids.begin(), kids.end());
  std::string head = bindings(n, "∃");
  if (n.quantifier == Quantifier::NotExists) head = "¬" + head;
  return bracket(head, join(preds, " ∧ "));
}

}  // namespace

std::string render_trc(const LogicTree& lt) {
  std::vector<std::string> parts;
  std::map<std::string, int> seen;
  for (const ColumnRef& c : lt.select_list) {
    std::string name = c.attribute;
    if (int n = ++seen[c.attribute]; n > 1) name += "_" + std::to_string(n);
    parts.push_back(to_string(c) + " = Q." + name);
  }
  for (std::string& p : predicate_texts(lt.root)) parts.push_back(std::move(p));
  for (std::string& c : child_formulas(lt.root)) parts.push_back(std::move(c));
  return "{Q | " + bracket(bindings(lt.root, "∃"), join(parts, " ∧ ")) + "}";
}

}  // namespace qdiag::logic
