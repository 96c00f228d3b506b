// Internal tableau entry point shared by reasoner.cpp; not installed.

#ifndef DLQ_SRC_TABLEAU_HPP
#define DLQ_SRC_TABLEAU_HPP

#include <vector>

#include "dlq/ast.hpp"
#include "dlq/hierarchy.hpp"
#include "dlq/premodel.hpp"
#include "dlq/reasoner.hpp"

namespace dlq::internal {

struct TableauResult {
  bool consistent = false;
  PreModel premodel;  // populated when consistent and want_premodel
};

TableauResult run_tableau(const Ontology& o, const std::vector<Axiom>& extra,
                          const RoleHierarchyClosure& closure, const ReasonerOptions& opts,
                          bool want_premodel);

}  // namespace dlq::internal

#endif  // DLQ_SRC_TABLEAU_HPP
