// Abstract syntax for the supported description logic fragment:
// concepts, role terms, individual terms, axioms, ontologies.
// Concept/role/individual positions may hold variables (?name), which is
// what turns an Axiom into an axiom template.

#ifndef DLQ_AST_HPP
#define DLQ_AST_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace dlq {

enum class TermSort { Concept, Role, Individual };

std::string to_string(TermSort sort);

// ---------------------------------------------------------------------------
// Role terms

struct RoleTerm {
  enum class Kind { Named, Inverse, Top, Bottom, Var };

  Kind kind = Kind::Named;
  std::string name;  // Named / Inverse / Var

  static RoleTerm named(std::string n) { return {Kind::Named, std::move(n)}; }
  static RoleTerm inverse(std::string n) { return {Kind::Inverse, std::move(n)}; }
  static RoleTerm top() { return {Kind::Top, {}}; }
  static RoleTerm bottom() { return {Kind::Bottom, {}}; }
  static RoleTerm var(std::string n) { return {Kind::Var, std::move(n)}; }

  bool is_named() const { return kind == Kind::Named; }
  bool is_var() const { return kind == Kind::Var; }

  // inv(r) with inv(inv(r)) collapsing back to r.
  RoleTerm inv() const;

  std::string text() const;

  friend bool operator==(const RoleTerm& a, const RoleTerm& b) {
    return a.kind == b.kind && a.name == b.name;
  }
  friend auto operator<=>(const RoleTerm& a, const RoleTerm& b) = default;
};

// ---------------------------------------------------------------------------
// Individual terms (name or variable)

struct IndividualTerm {
  bool is_var = false;
  std::string name;

  static IndividualTerm named(std::string n) { return {false, std::move(n)}; }
  static IndividualTerm var(std::string n) { return {true, std::move(n)}; }

  std::string text() const { return is_var ? "?" + name : name; }

  friend bool operator==(const IndividualTerm&, const IndividualTerm&) = default;
  friend auto operator<=>(const IndividualTerm&, const IndividualTerm&) = default;
};

// ---------------------------------------------------------------------------
// Concepts
//
// Immutable shared trees. Exactly(n r C) never appears here: the parser
// desugars it into AtLeast(n r C) AND AtMost(n r C).

enum class ConceptKind {
  Top,
  Bottom,
  Name,
  Var,
  Not,
  And,
  Or,
  Exists,
  Forall,
  AtLeast,
  AtMost,
};

class Concept;
using ConceptPtr = std::shared_ptr<const Concept>;

class Concept {
 public:
  ConceptKind kind;
  std::string name;        // Name / Var
  ConceptPtr child;        // Not; quantifier filler
  ConceptPtr rhs;          // And / Or second operand (first in child)
  RoleTerm role;           // quantifiers
  unsigned cardinality = 0;  // AtLeast / AtMost

  static ConceptPtr top();
  static ConceptPtr bottom();
  static ConceptPtr named(std::string n);
  static ConceptPtr var(std::string n);
  static ConceptPtr negation(ConceptPtr c);
  static ConceptPtr conj(ConceptPtr a, ConceptPtr b);
  static ConceptPtr disj(ConceptPtr a, ConceptPtr b);
  static ConceptPtr exists(RoleTerm r, ConceptPtr filler);
  static ConceptPtr forall(RoleTerm r, ConceptPtr filler);
  static ConceptPtr at_least(unsigned n, RoleTerm r, ConceptPtr filler);
  static ConceptPtr at_most(unsigned n, RoleTerm r, ConceptPtr filler);

  // Canonical text, parseable by the concept grammar.
  std::string text() const;

  bool is(ConceptKind k) const { return kind == k; }

  Concept(ConceptKind k) : kind(k) {}
};

bool equal(const ConceptPtr& a, const ConceptPtr& b);

// ---------------------------------------------------------------------------
// Axioms / axiom templates

enum class AxiomKind {
  SubClass,          // lhs ⊑ rhs
  SubRole,           // role ⊑ role2
  Transitive,        // trans(role)
  ClassAssertion,    // lhs(individuals[0])
  RoleAssertion,     // role(individuals[0], individuals[1])
  NegRoleAssertion,  // ¬role(individuals[0], individuals[1])
  Equality,          // individuals[0] ≈ ... ≈ individuals[n-1] (n >= 2; n > 2 only in queries)
  Inequality,        // individuals[0] ≉ individuals[1]
};

struct Axiom {
  AxiomKind kind;
  ConceptPtr lhs, rhs;  // SubClass; ClassAssertion concept in lhs
  RoleTerm role, role2;
  std::vector<IndividualTerm> individuals;

  static Axiom sub_class(ConceptPtr l, ConceptPtr r);
  static Axiom sub_role(RoleTerm l, RoleTerm r);
  static Axiom transitive(RoleTerm r);
  static Axiom class_assertion(ConceptPtr c, IndividualTerm a);
  static Axiom role_assertion(RoleTerm r, IndividualTerm a, IndividualTerm b);
  static Axiom neg_role_assertion(RoleTerm r, IndividualTerm a, IndividualTerm b);
  static Axiom equality(std::vector<IndividualTerm> terms);
  static Axiom inequality(IndividualTerm a, IndividualTerm b);

  // Canonical surface-syntax text; doubles as the deterministic tie-break
  // and memoization key for templates.
  std::string text() const;

  friend bool operator==(const Axiom& a, const Axiom& b);
  friend bool operator<(const Axiom& a, const Axiom& b);
};

// ---------------------------------------------------------------------------
// Signature and ontology

struct Signature {
  std::set<std::string> concepts;
  std::set<std::string> roles;
  std::set<std::string> individuals;

  bool disjoint() const;
};

struct Ontology {
  Signature sig;
  std::vector<Axiom> tbox;  // SubClass
  std::vector<Axiom> rbox;  // SubRole, Transitive
  std::vector<Axiom> abox;  // assertions

  std::vector<Axiom> all_axioms() const;
  void add(Axiom ax);  // dispatches into the right box and extends sig
};

// ---------------------------------------------------------------------------
// Variable collection

struct VarSet {
  std::set<std::string> concept_vars;
  std::set<std::string> role_vars;
  std::set<std::string> individual_vars;

  bool empty() const {
    return concept_vars.empty() && role_vars.empty() && individual_vars.empty();
  }
  bool contains(const std::string& v) const {
    return concept_vars.count(v) || role_vars.count(v) || individual_vars.count(v);
  }
  std::set<std::string> all() const;
  void merge(const VarSet& o);
};

// Collects variables by sort; throws UnsupportedConstructError if the same
// variable occurs in two sorts.
VarSet vars_of(const Axiom& at);
VarSet vars_of(const ConceptPtr& c);

// Names (non-variables) used by an axiom, bucketed by syntactic position.
void collect_names(const Axiom& ax, Signature& out);

bool is_ground(const Axiom& ax);

}  // namespace dlq

#endif  // DLQ_AST_HPP
