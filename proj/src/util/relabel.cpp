#include "qdiag/util/relabel.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace qdiag::util {

namespace {

using Key = std::pair<int, std::string>;

class Matcher {
 public:
  Matcher(std::vector<Fact> a, std::vector<Fact> b) : a_(std::move(a)), b_(std::move(b)) {
    used_.assign(b_.size(), false);
    done_.assign(a_.size(), false);
  }

  bool run() { return extend(0); }

 private:
  bool consistent(const Fact& fa, const Fact& fb) const {
    if (fa.relation != fb.relation || fa.terms.size() != fb.terms.size()) return false;
    std::map<Key, std::string> fwd;
    std::map<Key, std::string> bwd;
    for (std::size_t i = 0; i < fa.terms.size(); ++i) {
      const Term& x = fa.terms[i];
      const Term& y = fb.terms[i];
      if (x.sort != y.sort) return false;
      if (x.sort == 0) {
        if (x.value != y.value) return false;
        continue;
      }
      Key kx{x.sort, x.value};
      Key ky{y.sort, y.value};
      auto f = forward_.find(kx);
      if (f != forward_.end() && f->second != y.value) return false;
      auto g = backward_.find(ky);
      if (g != backward_.end() && g->second != x.value) return false;
      // labels repeated inside this one fact must also agree
      auto lf = fwd.find(kx);
      if (lf != fwd.end() && lf->second != y.value) return false;
      auto lb = bwd.find(ky);
      if (lb != bwd.end() && lb->second != x.value) return false;
      fwd[kx] = y.value;
      bwd[ky] = x.value;
    }
    return true;
  }

  int bound_terms(const Fact& f) const {
    int n = 0;
    for (const Term& t : f.terms)
      if (t.sort == 0 || forward_.contains({t.sort, t.value})) ++n;
    return n;
  }

  bool extend(std::size_t matched) {
    if (matched == a_.size()) return true;
    // Most-constrained fact first.
    std::size_t pick = a_.size();
    int best = -1;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (done_[i]) continue;
      int b = bound_terms(a_[i]);
      if (b > best) {
        best = b;
        pick = i;
      }
    }
    const Fact& fa = a_[pick];
    done_[pick] = true;
    for (std::size_t j = 0; j < b_.size(); ++j) {
      if (used_[j] || !consistent(fa, b_[j])) continue;
      std::vector<Key> added;
      for (std::size_t t = 0; t < fa.terms.size(); ++t) {
        const Term& x = fa.terms[t];
        if (x.sort == 0) continue;
        Key kx{x.sort, x.value};
        if (forward_.contains(kx)) continue;
        forward_[kx] = b_[j].terms[t].value;
        backward_[{x.sort, b_[j].terms[t].value}] = x.value;
        added.push_back(kx);
      }
      used_[j] = true;
      if (extend(matched + 1)) return true;
      used_[j] = false;
      for (const Key& k : added) {
        backward_.erase({k.first, forward_[k]});
        forward_.erase(k);
      }
    }
    done_[pick] = false;
    return false;
  }

  std::vector<Fact> a_;
  std::vector<Fact> b_;
  std::vector<bool> used_;
  std::vector<bool> done_;
  std::map<Key, std::string> forward_;
  std::map<Key, std::string> backward_;
};

void dedupe(std::vector<Fact>& facts) {
  std::sort(facts.begin(), facts.end());
  facts.erase(std::unique(facts.begin(), facts.end()), facts.end());
}

std::map<std::string, std::size_t> relation_counts(const std::vector<Fact>& facts) {
  std::map<std::string, std::size_t> out;
  for (const Fact& f : facts) ++out[f.relation];
  return out;
}

std::map<int, std::size_t> label_counts(const std::vector<Fact>& facts) {
  std::set<Key> labels;
  for (const Fact& f : facts)
    for (const Term& t : f.terms)
      if (t.sort != 0) labels.insert({t.sort, t.value});
  std::map<int, std::size_t> out;
  for (const Key& k : labels) ++out[k.first];
  return out;
}

}  // namespace

bool isomorphic_modulo_labels(std::vector<Fact> a, std::vector<Fact> b) {
  dedupe(a);
  dedupe(b);
  if (a.size() != b.size()) return false;
  if (relation_counts(a) != relation_counts(b)) return false;
  if (label_counts(a) != label_counts(b)) return false;
  return Matcher(std::move(a), std::move(b)).run();
}

}  // namespace qdiag::util
