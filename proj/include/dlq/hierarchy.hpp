// Syntactic role hierarchy closure (reflexive-transitive, inverse-propagated)
// with transitivity/simplicity flags, the simplicity validation report, and
// the Taxonomy structure shared by the classified concept and role
// hierarchies.

#ifndef DLQ_HIERARCHY_HPP
#define DLQ_HIERARCHY_HPP

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dlq/ast.hpp"

namespace dlq {

class RoleHierarchyClosure {
 public:
  static RoleHierarchyClosure build(const Ontology& o);
  static RoleHierarchyClosure build(const std::vector<Axiom>& rbox);

  // r ⊑_H s. Reflexivity holds for roles outside the asserted universe too.
  bool subsumed(const RoleTerm& r, const RoleTerm& s) const;
  bool equivalent(const RoleTerm& r, const RoleTerm& s) const;

  // r transitive w.r.t. H: some s with r ≡_H s and trans(s) or trans(inv(s)).
  bool transitive(const RoleTerm& r) const;

  // No transitive subrole. The top role counts as non-simple.
  bool simple(const RoleTerm& r) const;

  // {s : s ⊑_H r}, always including r itself. Restricted to named roles.
  std::set<std::string> named_subroles(const std::string& r) const;
  std::set<std::string> named_superroles(const std::string& r) const;

  const std::set<std::pair<RoleTerm, RoleTerm>>& pairs() const { return pairs_; }
  const std::set<RoleTerm>& universe() const { return universe_; }

 private:
  std::set<std::pair<RoleTerm, RoleTerm>> pairs_;  // non-reflexive entries included
  std::set<RoleTerm> universe_;
  std::set<RoleTerm> transitive_;
};

struct SimplicityViolation {
  std::string axiom_text;
  std::string restriction_text;
  std::string role_text;
};

// Lists every number restriction over a non-simple role.
std::vector<SimplicityViolation> check_simplicity(const Ontology& o);
std::vector<SimplicityViolation> check_simplicity(const std::vector<Axiom>& axioms,
                                                  const RoleHierarchyClosure& closure);

// ---------------------------------------------------------------------------
// Taxonomy: the classified partial order over names plus synthetic top and
// bottom elements, reduced to direct edges. Names equivalent to each other
// (or to top/bottom) share a node.

class Taxonomy {
 public:
  // `oracle(a, b)` decides entailed subsumption a ⊑ b; arguments are names
  // or the reserved top/bottom spellings.
  static Taxonomy build(const std::set<std::string>& names, const std::string& top_name,
                        const std::string& bottom_name,
                        const std::function<bool(const std::string&, const std::string&)>& oracle);

  const std::string& top_name() const { return top_name_; }
  const std::string& bottom_name() const { return bottom_name_; }

  bool known(const std::string& name) const { return index_.count(name) != 0; }

  // Entailed subsumption between names / reserved spellings.
  bool subsumed(const std::string& a, const std::string& b) const;
  bool equivalent(const std::string& a, const std::string& b) const;

  // All signature names n with n ⊑ name (supers: name ⊑ n), including
  // equivalents and name itself when it is a signature name.
  std::set<std::string> subs_closure(const std::string& name) const;
  std::set<std::string> supers_closure(const std::string& name) const;

  // Signature names equivalent to `name` (excluding name itself).
  std::set<std::string> equivalents(const std::string& name) const;

  // One canonical representative per direct sub/super node. Nodes without
  // signature names (synthetic top/bottom) are reported under their
  // reserved spelling.
  std::vector<std::string> direct_subs(const std::string& name) const;
  std::vector<std::string> direct_supers(const std::string& name) const;

  // 1 + length of the longest downward path to a leaf over named nodes;
  // the synthetic bottom does not count as a level.
  int depth(const std::string& name) const;

  std::set<std::string> names() const;

 private:
  struct Node {
    std::vector<std::string> members;  // sorted signature names; empty only for
                                       // the synthetic top/bottom
    std::set<int> direct_subs, direct_supers;
    std::set<int> subs_all, supers_all;  // transitive, excluding self
  };

  int node_of(const std::string& name) const;  // -1 if unknown
  std::string rep_of(int node) const;

  std::vector<Node> nodes_;
  std::map<std::string, int> index_;
  int top_ = -1, bottom_ = -1;
  std::string top_name_, bottom_name_;
  mutable std::map<int, int> depth_cache_;
};

}  // namespace dlq

#endif  // DLQ_HIERARCHY_HPP
