// Line/column-tracking parser for the functional-style ontology and query
// grammars, plus the canonical serializer.
//
// Ontology grammar (one or more axioms, '#' comments, whitespace-separated):
//   SubClassOf(C D)            EquivalentClasses(C D ...)
//   SubRoleOf(r s)             Trans(r)
//   ClassAssertion(C a)        RoleAssertion(r a b)
//   NegRoleAssertion(r a b)    SameAs(a b ...)    DifferentFrom(a b)
// Concepts:
//   Top | Bottom | A | not(C) | and(C C ...) | or(C C ...)
//   | some(r C) | all(r C) | atLeast(n r C) | atMost(n r C) | exactly(n r C)
// Roles: r | TopRole | BottomRole | inv(r)
//
// The query grammar is identical except that ?name variables may stand in
// any concept, role, or individual name position and SameAs may be n-ary.

#ifndef DLQ_PARSER_HPP
#define DLQ_PARSER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "dlq/ast.hpp"
#include "dlq/query.hpp"

namespace dlq {

// Parses and validates: sort-disjoint signature, no variables, no
// unsupported constructs (nominals, Self, role chains, inverse roles, data
// properties), all number restrictions over simple roles.
Ontology parse_ontology(std::string_view text);

// Parses a set of axiom templates. Variable sorts are inferred from the
// syntactic position; a variable used in two sorts is an error. N-ary
// SameAs templates are chained into binary ones.
Query parse_query(std::string_view text);

// Single concept (exposed for tests and the stats snapshot reader).
ConceptPtr parse_concept_text(std::string_view text, bool allow_variables);

// Single axiom template in the query grammar.
Axiom parse_template_text(std::string_view text);

// Canonical text; parse_ontology(serialize_ontology(o)) is structurally
// equal to o.
std::string serialize_ontology(const Ontology& o);

}  // namespace dlq

#endif  // DLQ_PARSER_HPP
