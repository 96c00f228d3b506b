#include "dlq/ast.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "dlq/error.hpp"

namespace dlq {

std::string to_string(TermSort sort) {
  switch (sort) {
    case TermSort::Concept: return "concept";
    case TermSort::Role: return "role";
    case TermSort::Individual: return "individual";
  }
  return "?";
}

RoleTerm RoleTerm::inv() const {
  switch (kind) {
    case Kind::Named: return inverse(name);
    case Kind::Inverse: return named(name);
    case Kind::Top: return top();
    case Kind::Bottom: return bottom();
    case Kind::Var: return {Kind::Var, name};  // callers handle ?x- explicitly
  }
  return *this;
}

std::string RoleTerm::text() const {
  switch (kind) {
    case Kind::Named: return name;
    case Kind::Inverse: return "inv(" + name + ")";
    case Kind::Top: return "TopRole";
    case Kind::Bottom: return "BottomRole";
    case Kind::Var: return "?" + name;
  }
  return "?";
}

// ---------------------------------------------------------------------------

namespace {
ConceptPtr make(ConceptKind k) { return std::make_shared<Concept>(k); }
}  // namespace

ConceptPtr Concept::top() {
  static const ConceptPtr t = make(ConceptKind::Top);
  return t;
}

ConceptPtr Concept::bottom() {
  static const ConceptPtr b = make(ConceptKind::Bottom);
  return b;
}

ConceptPtr Concept::named(std::string n) {
  auto c = std::make_shared<Concept>(ConceptKind::Name);
  c->name = std::move(n);
  return c;
}

ConceptPtr Concept::var(std::string n) {
  auto c = std::make_shared<Concept>(ConceptKind::Var);
  c->name = std::move(n);
  return c;
}

ConceptPtr Concept::negation(ConceptPtr c) {
  auto r = std::make_shared<Concept>(ConceptKind::Not);
  r->child = std::move(c);
  return r;
}

ConceptPtr Concept::conj(ConceptPtr a, ConceptPtr b) {
  auto r = std::make_shared<Concept>(ConceptKind::And);
  r->child = std::move(a);
  r->rhs = std::move(b);
  return r;
}

ConceptPtr Concept::disj(ConceptPtr a, ConceptPtr b) {
  auto r = std::make_shared<Concept>(ConceptKind::Or);
  r->child = std::move(a);
  r->rhs = std::move(b);
  return r;
}

ConceptPtr Concept::exists(RoleTerm role, ConceptPtr filler) {
  auto r = std::make_shared<Concept>(ConceptKind::Exists);
  r->role = std::move(role);
  r->child = std::move(filler);
  return r;
}

ConceptPtr Concept::forall(RoleTerm role, ConceptPtr filler) {
  auto r = std::make_shared<Concept>(ConceptKind::Forall);
  r->role = std::move(role);
  r->child = std::move(filler);
  return r;
}

ConceptPtr Concept::at_least(unsigned n, RoleTerm role, ConceptPtr filler) {
  auto r = std::make_shared<Concept>(ConceptKind::AtLeast);
  r->cardinality = n;
  r->role = std::move(role);
  r->child = std::move(filler);
  return r;
}

ConceptPtr Concept::at_most(unsigned n, RoleTerm role, ConceptPtr filler) {
  auto r = std::make_shared<Concept>(ConceptKind::AtMost);
  r->cardinality = n;
  r->role = std::move(role);
  r->child = std::move(filler);
  return r;
}

std::string Concept::text() const {
  switch (kind) {
    case ConceptKind::Top: return "Top";
    case ConceptKind::Bottom: return "Bottom";
    case ConceptKind::Name: return name;
    case ConceptKind::Var: return "?" + name;
    case ConceptKind::Not: return "not(" + child->text() + ")";
    case ConceptKind::And: return "and(" + child->text() + " " + rhs->text() + ")";
    case ConceptKind::Or: return "or(" + child->text() + " " + rhs->text() + ")";
    case ConceptKind::Exists:
      return "some(" + role.text() + " " + child->text() + ")";
    case ConceptKind::Forall:
      return "all(" + role.text() + " " + child->text() + ")";
    case ConceptKind::AtLeast:
      return "atLeast(" + std::to_string(cardinality) + " " + role.text() + " " +
             child->text() + ")";
    case ConceptKind::AtMost:
      return "atMost(" + std::to_string(cardinality) + " " + role.text() + " " +
             child->text() + ")";
  }
  return "?";
}

bool equal(const ConceptPtr& a, const ConceptPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->name != b->name || a->cardinality != b->cardinality ||
      !(a->role == b->role))
    return false;
  return equal(a->child, b->child) && equal(a->rhs, b->rhs);
}

// ---------------------------------------------------------------------------

Axiom Axiom::sub_class(ConceptPtr l, ConceptPtr r) {
  Axiom ax{AxiomKind::SubClass, std::move(l), std::move(r), {}, {}, {}};
  return ax;
}

Axiom Axiom::sub_role(RoleTerm l, RoleTerm r) {
  Axiom ax{AxiomKind::SubRole, nullptr, nullptr, std::move(l), std::move(r), {}};
  return ax;
}

Axiom Axiom::transitive(RoleTerm r) {
  Axiom ax{AxiomKind::Transitive, nullptr, nullptr, std::move(r), {}, {}};
  return ax;
}

Axiom Axiom::class_assertion(ConceptPtr c, IndividualTerm a) {
  Axiom ax{AxiomKind::ClassAssertion, std::move(c), nullptr, {}, {}, {std::move(a)}};
  return ax;
}

Axiom Axiom::role_assertion(RoleTerm r, IndividualTerm a, IndividualTerm b) {
  Axiom ax{AxiomKind::RoleAssertion, nullptr, nullptr, std::move(r), {},
           {std::move(a), std::move(b)}};
  return ax;
}

Axiom Axiom::neg_role_assertion(RoleTerm r, IndividualTerm a, IndividualTerm b) {
  Axiom ax{AxiomKind::NegRoleAssertion, nullptr, nullptr, std::move(r), {},
           {std::move(a), std::move(b)}};
  return ax;
}

Axiom Axiom::equality(std::vector<IndividualTerm> terms) {
  assert(terms.size() >= 2);
  Axiom ax{AxiomKind::Equality, nullptr, nullptr, {}, {}, std::move(terms)};
  return ax;
}

Axiom Axiom::inequality(IndividualTerm a, IndividualTerm b) {
  Axiom ax{AxiomKind::Inequality, nullptr, nullptr, {}, {}, {std::move(a), std::move(b)}};
  return ax;
}

std::string Axiom::text() const {
  std::ostringstream os;
  switch (kind) {
    case AxiomKind::SubClass:
      os << "SubClassOf(" << lhs->text() << " " << rhs->text() << ")";
      break;
    case AxiomKind::SubRole:
      os << "SubRoleOf(" << role.text() << " " << role2.text() << ")";
      break;
    case AxiomKind::Transitive:
      os << "Trans(" << role.text() << ")";
      break;
    case AxiomKind::ClassAssertion:
      os << "ClassAssertion(" << lhs->text() << " " << individuals[0].text() << ")";
      break;
    case AxiomKind::RoleAssertion:
      os << "RoleAssertion(" << role.text() << " " << individuals[0].text() << " "
         << individuals[1].text() << ")";
      break;
    case AxiomKind::NegRoleAssertion:
      os << "NegRoleAssertion(" << role.text() << " " << individuals[0].text() << " "
         << individuals[1].text() << ")";
      break;
    case AxiomKind::Equality: {
      os << "SameAs(";
      for (std::size_t i = 0; i < individuals.size(); ++i)
        os << (i ? " " : "") << individuals[i].text();
      os << ")";
      break;
    }
    case AxiomKind::Inequality:
      os << "DifferentFrom(" << individuals[0].text() << " " << individuals[1].text()
         << ")";
      break;
  }
  return os.str();
}

bool operator==(const Axiom& a, const Axiom& b) { return a.text() == b.text(); }
bool operator<(const Axiom& a, const Axiom& b) { return a.text() < b.text(); }

// ---------------------------------------------------------------------------

bool Signature::disjoint() const {
  for (const auto& c : concepts)
    if (roles.count(c) || individuals.count(c)) return false;
  for (const auto& r : roles)
    if (individuals.count(r)) return false;
  return true;
}

std::vector<Axiom> Ontology::all_axioms() const {
  std::vector<Axiom> out = tbox;
  out.insert(out.end(), rbox.begin(), rbox.end());
  out.insert(out.end(), abox.begin(), abox.end());
  return out;
}

void Ontology::add(Axiom ax) {
  collect_names(ax, sig);
  switch (ax.kind) {
    case AxiomKind::SubClass: tbox.push_back(std::move(ax)); break;
    case AxiomKind::SubRole:
    case AxiomKind::Transitive: rbox.push_back(std::move(ax)); break;
    default: abox.push_back(std::move(ax)); break;
  }
}

// ---------------------------------------------------------------------------

std::set<std::string> VarSet::all() const {
  std::set<std::string> out = concept_vars;
  out.insert(role_vars.begin(), role_vars.end());
  out.insert(individual_vars.begin(), individual_vars.end());
  return out;
}

void VarSet::merge(const VarSet& o) {
  concept_vars.insert(o.concept_vars.begin(), o.concept_vars.end());
  role_vars.insert(o.role_vars.begin(), o.role_vars.end());
  individual_vars.insert(o.individual_vars.begin(), o.individual_vars.end());
}

namespace {

void check_sort_clash(const VarSet& vs) {
  for (const auto& v : vs.concept_vars)
    if (vs.role_vars.count(v) || vs.individual_vars.count(v))
      throw UnsupportedConstructError("variable ?" + v + " used in two sorts");
  for (const auto& v : vs.role_vars)
    if (vs.individual_vars.count(v))
      throw UnsupportedConstructError("variable ?" + v + " used in two sorts");
}

void collect_concept_vars(const ConceptPtr& c, VarSet& out) {
  if (!c) return;
  if (c->kind == ConceptKind::Var) out.concept_vars.insert(c->name);
  if (c->role.is_var()) out.role_vars.insert(c->role.name);
  collect_concept_vars(c->child, out);
  collect_concept_vars(c->rhs, out);
}

}  // namespace

VarSet vars_of(const ConceptPtr& c) {
  VarSet out;
  collect_concept_vars(c, out);
  check_sort_clash(out);
  return out;
}

VarSet vars_of(const Axiom& at) {
  VarSet out;
  collect_concept_vars(at.lhs, out);
  collect_concept_vars(at.rhs, out);
  if (at.role.is_var()) out.role_vars.insert(at.role.name);
  if (at.role2.is_var()) out.role_vars.insert(at.role2.name);
  for (const auto& t : at.individuals)
    if (t.is_var) out.individual_vars.insert(t.name);
  check_sort_clash(out);
  return out;
}

namespace {

void collect_concept_names(const ConceptPtr& c, Signature& out) {
  if (!c) return;
  if (c->kind == ConceptKind::Name) out.concepts.insert(c->name);
  if (c->role.kind == RoleTerm::Kind::Named || c->role.kind == RoleTerm::Kind::Inverse)
    out.roles.insert(c->role.name);
  collect_concept_names(c->child, out);
  collect_concept_names(c->rhs, out);
}

}  // namespace

void collect_names(const Axiom& ax, Signature& out) {
  collect_concept_names(ax.lhs, out);
  collect_concept_names(ax.rhs, out);
  for (const RoleTerm* r : {&ax.role, &ax.role2})
    if (r->kind == RoleTerm::Kind::Named || r->kind == RoleTerm::Kind::Inverse)
      out.roles.insert(r->name);
  for (const auto& t : ax.individuals)
    if (!t.is_var) out.individuals.insert(t.name);
}

bool is_ground(const Axiom& ax) { return vars_of(ax).empty(); }

}  // namespace dlq
