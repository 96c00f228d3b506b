// Pre-model: the clash-free assertion structure a successful tableau run
// terminates with, restricted to what downstream consumers need — per-node
// concept-name labels, role edge labels between named individuals, and the
// merge map, each entry carrying deterministic/nondeterministic provenance.

#ifndef DLQ_PREMODEL_HPP
#define DLQ_PREMODEL_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dlq {

struct PreModel {
  struct ConceptEntry {
    std::string concept_name;
    bool nondet = false;
  };
  struct RoleEntry {
    std::string role;
    bool nondet = false;
  };

  // node ids: named individuals keep their name; fresh nodes are "_:k"
  std::set<std::string> nodes;
  std::set<std::string> named_individuals;

  // labels keyed by representative node id
  std::map<std::string, std::vector<ConceptEntry>> concept_labels;
  std::map<std::pair<std::string, std::string>, std::vector<RoleEntry>> edge_labels;

  // named individual -> representative node id (identity when unmerged)
  std::map<std::string, std::string> merge_map;
  // true when any merge on the individual's path used a nondeterministic rule
  std::map<std::string, bool> merge_nondet;

  bool clash = false;

  const std::string& representative(const std::string& individual) const {
    auto it = merge_map.find(individual);
    return it == merge_map.end() ? individual : it->second;
  }

  // label of a named individual (through its representative)
  const std::vector<ConceptEntry>& label(const std::string& individual) const {
    static const std::vector<ConceptEntry> empty;
    auto it = concept_labels.find(representative(individual));
    return it == concept_labels.end() ? empty : it->second;
  }

  const std::vector<RoleEntry>& edge_label(const std::string& a, const std::string& b) const {
    static const std::vector<RoleEntry> empty;
    auto it = edge_labels.find({representative(a), representative(b)});
    return it == edge_labels.end() ? empty : it->second;
  }

  bool has_concept(const std::string& individual, const std::string& concept_name) const {
    for (const auto& e : label(individual))
      if (e.concept_name == concept_name) return true;
    return false;
  }
};

}  // namespace dlq

#endif  // DLQ_PREMODEL_HPP
