#include "dlq/query.hpp"

#include <algorithm>
#include <sstream>

#include "dlq/error.hpp"

namespace dlq {

void Query::add(Axiom at) {
  for (const auto& existing : templates)
    if (existing == at) return;
  collect_names(at, constants);
  VarSet vs = vars_of(at);
  vars.merge(vs);
  // cross-template sort consistency
  for (const auto& v : vars.concept_vars)
    if (vars.role_vars.count(v) || vars.individual_vars.count(v))
      throw UnsupportedConstructError("variable ?" + v + " used in two sorts");
  for (const auto& v : vars.role_vars)
    if (vars.individual_vars.count(v))
      throw UnsupportedConstructError("variable ?" + v + " used in two sorts");
  templates.push_back(std::move(at));
}

std::optional<TermSort> Query::sort_of(const std::string& var) const {
  if (vars.concept_vars.count(var)) return TermSort::Concept;
  if (vars.role_vars.count(var)) return TermSort::Role;
  if (vars.individual_vars.count(var)) return TermSort::Individual;
  return std::nullopt;
}

Mapping Mapping::merged_with(const Mapping& other) const {
  Mapping out = *this;
  for (const auto& [v, n] : other.bind) out.bind.emplace(v, n);
  return out;
}

std::string Mapping::text() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, n] : bind) {
    if (!first) os << "\t";
    os << "?" << v << "=" << n;
    first = false;
  }
  return os.str();
}

bool is_reserved_value(const std::string& v) {
  return v == kTopName || v == kBottomName || v == kTopRoleName || v == kBottomRoleName;
}

namespace {

RoleTerm apply_role(const Mapping& mu, const RoleTerm& r) {
  if (!r.is_var() || !mu.covers(r.name)) return r;
  const std::string& val = mu.at(r.name);
  if (val == kTopRoleName) return RoleTerm::top();
  if (val == kBottomRoleName) return RoleTerm::bottom();
  return RoleTerm::named(val);
}

IndividualTerm apply_ind(const Mapping& mu, const IndividualTerm& t) {
  if (!t.is_var || !mu.covers(t.name)) return t;
  return IndividualTerm::named(mu.at(t.name));
}

}  // namespace

ConceptPtr apply_mapping(const Mapping& mu, const ConceptPtr& c) {
  if (!c) return c;
  switch (c->kind) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
    case ConceptKind::Name:
      return c;
    case ConceptKind::Var: {
      if (!mu.covers(c->name)) return c;
      const std::string& val = mu.at(c->name);
      if (val == kTopName) return Concept::top();
      if (val == kBottomName) return Concept::bottom();
      return Concept::named(val);
    }
    case ConceptKind::Not:
      return Concept::negation(apply_mapping(mu, c->child));
    case ConceptKind::And:
      return Concept::conj(apply_mapping(mu, c->child), apply_mapping(mu, c->rhs));
    case ConceptKind::Or:
      return Concept::disj(apply_mapping(mu, c->child), apply_mapping(mu, c->rhs));
    case ConceptKind::Exists:
      return Concept::exists(apply_role(mu, c->role), apply_mapping(mu, c->child));
    case ConceptKind::Forall:
      return Concept::forall(apply_role(mu, c->role), apply_mapping(mu, c->child));
    case ConceptKind::AtLeast:
      return Concept::at_least(c->cardinality, apply_role(mu, c->role),
                               apply_mapping(mu, c->child));
    case ConceptKind::AtMost:
      return Concept::at_most(c->cardinality, apply_role(mu, c->role),
                              apply_mapping(mu, c->child));
  }
  return c;
}

Axiom apply_mapping(const Mapping& mu, const Axiom& at) {
  Axiom out = at;
  out.lhs = apply_mapping(mu, at.lhs);
  out.rhs = apply_mapping(mu, at.rhs);
  out.role = apply_role(mu, at.role);
  out.role2 = apply_role(mu, at.role2);
  for (auto& t : out.individuals) t = apply_ind(mu, t);
  return out;
}

bool concept_closed(const ConceptPtr& c) {
  if (!c) return true;
  if (c->kind == ConceptKind::Var) return false;
  if (c->role.is_var()) return false;
  return concept_closed(c->child) && concept_closed(c->rhs);
}

namespace {

// Closed concept or a bare concept variable.
bool simple_side(const ConceptPtr& c) {
  return c->kind == ConceptKind::Var || concept_closed(c);
}

bool concept_term(const ConceptPtr& c) {
  return c->kind == ConceptKind::Var || c->kind == ConceptKind::Name;
}

}  // namespace

bool is_simple(const Axiom& at) {
  switch (at.kind) {
    case AxiomKind::SubClass: {
      if (simple_side(at.lhs) && simple_side(at.rhs)) return true;
      // domain restriction template: some(r1 Top) ⊑ c1
      if (at.lhs->kind == ConceptKind::Exists && at.lhs->child->is(ConceptKind::Top) &&
          concept_term(at.rhs))
        return true;
      // range restriction template: Top ⊑ all(r1 c1)
      if (at.lhs->is(ConceptKind::Top) && at.rhs->kind == ConceptKind::Forall &&
          concept_term(at.rhs->child))
        return true;
      return false;
    }
    case AxiomKind::SubRole:
      return true;
    case AxiomKind::ClassAssertion:
      return simple_side(at.lhs);
    case AxiomKind::RoleAssertion:
      return true;
    case AxiomKind::Equality:
      return at.individuals.size() == 2;
    case AxiomKind::Inequality:
      return true;
    case AxiomKind::NegRoleAssertion:
    case AxiomKind::Transitive:
      return false;
  }
  return false;
}

CostCategory cost_category(const Axiom& at) {
  switch (at.kind) {
    case AxiomKind::ClassAssertion:
      return CostCategory::ConceptAssertion;
    case AxiomKind::RoleAssertion:
      return CostCategory::RoleAssertion;
    case AxiomKind::Equality:
      return at.individuals.size() == 2 ? CostCategory::Equality : CostCategory::Other;
    default:
      return CostCategory::Other;
  }
}

}  // namespace dlq
