// Query model: sets of axiom templates, mappings, and the simple/complex
// template classification that drives evaluation dispatch and costing.

#ifndef DLQ_QUERY_HPP
#define DLQ_QUERY_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dlq/ast.hpp"

namespace dlq {

struct Query {
  std::vector<Axiom> templates;  // duplicate-free, insertion order
  Signature constants;           // names occurring in the templates
  VarSet vars;

  void add(Axiom at);
  std::optional<TermSort> sort_of(const std::string& var) const;
};

// Partial variable assignment. Values are signature names, or one of the
// reserved spellings Top/Bottom/TopRole/BottomRole used as hierarchy
// traversal seeds (never reported as answers unless configured).
struct Mapping {
  std::map<std::string, std::string> bind;

  bool covers(const std::string& var) const { return bind.count(var) != 0; }
  const std::string& at(const std::string& var) const { return bind.at(var); }
  void set(std::string var, std::string value) { bind[std::move(var)] = std::move(value); }
  bool empty() const { return bind.empty(); }

  // Union of two mappings with disjoint domains (Alg. style mu ∪ mu').
  Mapping merged_with(const Mapping& other) const;

  std::string text() const;  // canonical ?v=name form, keys sorted

  friend bool operator==(const Mapping& a, const Mapping& b) { return a.bind == b.bind; }
  friend bool operator<(const Mapping& a, const Mapping& b) { return a.bind < b.bind; }
};

inline const std::string kTopName = "Top";
inline const std::string kBottomName = "Bottom";
inline const std::string kTopRoleName = "TopRole";
inline const std::string kBottomRoleName = "BottomRole";

bool is_reserved_value(const std::string& v);

// Replaces every variable in dom(mu); variables outside dom(mu) remain.
Axiom apply_mapping(const Mapping& mu, const Axiom& at);
ConceptPtr apply_mapping(const Mapping& mu, const ConceptPtr& c);

// Simple axiom templates are the ones a dedicated reasoner task evaluates:
// C ⊑ C' (each side a closed concept or a bare concept variable), the
// domain/range forms ∃r1.Top ⊑ c1 and Top ⊑ ∀r1.c1, r1 ⊑ r2, C(t) with C
// closed or a bare variable, r1(t,t'), t ≈ t', t ≉ t'. Everything else is
// complex and needs per-mapping entailment checks.
bool is_simple(const Axiom& at);

// Entailment-cost category: (i) concept assertion, (ii) role assertion,
// (iii) equality, (iv) everything else.
enum class CostCategory { ConceptAssertion, RoleAssertion, Equality, Other };
CostCategory cost_category(const Axiom& at);

// True when the concept contains no variables.
bool concept_closed(const ConceptPtr& c);

}  // namespace dlq

#endif  // DLQ_QUERY_HPP
