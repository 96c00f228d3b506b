#ifndef DLQ_NNF_HPP
#define DLQ_NNF_HPP

#include "dlq/ast.hpp"

namespace dlq {

// Negation normal form: negation applied to concept names (or variables)
// only. Counting dualities: not(atMost(n r C)) = atLeast(n+1 r C),
// not(atLeast(0 r C)) = Bottom, not(atLeast(n r C)) = atMost(n-1 r C).
ConceptPtr normalize_nnf(const ConceptPtr& c);

// nnf(not(c)) without materializing the outer negation.
ConceptPtr normalize_nnf_negated(const ConceptPtr& c);

bool in_nnf(const ConceptPtr& c);

}  // namespace dlq

#endif  // DLQ_NNF_HPP
