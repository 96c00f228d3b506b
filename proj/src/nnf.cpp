#include "dlq/nnf.hpp"

namespace dlq {

ConceptPtr normalize_nnf(const ConceptPtr& c) {
  switch (c->kind) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
    case ConceptKind::Name:
    case ConceptKind::Var:
      return c;
    case ConceptKind::Not:
      return normalize_nnf_negated(c->child);
    case ConceptKind::And:
      return Concept::conj(normalize_nnf(c->child), normalize_nnf(c->rhs));
    case ConceptKind::Or:
      return Concept::disj(normalize_nnf(c->child), normalize_nnf(c->rhs));
    case ConceptKind::Exists:
      return Concept::exists(c->role, normalize_nnf(c->child));
    case ConceptKind::Forall:
      return Concept::forall(c->role, normalize_nnf(c->child));
    case ConceptKind::AtLeast:
      return Concept::at_least(c->cardinality, c->role, normalize_nnf(c->child));
    case ConceptKind::AtMost:
      return Concept::at_most(c->cardinality, c->role, normalize_nnf(c->child));
  }
  return c;
}

ConceptPtr normalize_nnf_negated(const ConceptPtr& c) {
  switch (c->kind) {
    case ConceptKind::Top:
      return Concept::bottom();
    case ConceptKind::Bottom:
      return Concept::top();
    case ConceptKind::Name:
    case ConceptKind::Var:
      return Concept::negation(c);
    case ConceptKind::Not:
      return normalize_nnf(c->child);
    case ConceptKind::And:
      return Concept::disj(normalize_nnf_negated(c->child), normalize_nnf_negated(c->rhs));
    case ConceptKind::Or:
      return Concept::conj(normalize_nnf_negated(c->child), normalize_nnf_negated(c->rhs));
    case ConceptKind::Exists:
      return Concept::forall(c->role, normalize_nnf_negated(c->child));
    case ConceptKind::Forall:
      return Concept::exists(c->role, normalize_nnf_negated(c->child));
    case ConceptKind::AtLeast:
      if (c->cardinality == 0) return Concept::bottom();
      return Concept::at_most(c->cardinality - 1, c->role, normalize_nnf(c->child));
    case ConceptKind::AtMost:
      return Concept::at_least(c->cardinality + 1, c->role, normalize_nnf(c->child));
  }
  return Concept::negation(c);
}

bool in_nnf(const ConceptPtr& c) {
  if (!c) return true;
  if (c->kind == ConceptKind::Not)
    return c->child->kind == ConceptKind::Name || c->child->kind == ConceptKind::Var;
  return in_nnf(c->child) && in_nnf(c->rhs);
}

}  // namespace dlq
