#pragma once

#include <string>
#include <vector>

namespace qdiag::util {

/// A term is either fixed (sort 0, must match verbatim) or a label of some
/// sort (> 0) that may be renamed, bijectively per sort.
struct Term {
  int sort = 0;
  std::string value;
  auto operator<=>(const Term&) const = default;
};

struct Fact {
  std::string relation;
  std::vector<Term> terms;
  auto operator<=>(const Fact&) const = default;
};

inline Term fixed(std::string v) { return {0, std::move(v)}; }
inline Term label(int sort, std::string v) { return {sort, std::move(v)}; }

/// True when some per-sort bijection of labels maps the fact set `a` onto the
/// fact set `b` exactly. Duplicate facts are ignored. Backtracking search;
/// meant for structures of a few dozen facts.
bool isomorphic_modulo_labels(std::vector<Fact> a, std::vector<Fact> b);

}  // namespace qdiag::util
