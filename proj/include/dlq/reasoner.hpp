// Consistency and entailment decision procedure for the supported fragment:
// a classic tableau with NNF input, subset blocking, named-individual
// merging, and derivation provenance tracking. Lazy unfolding is not used,
// so pre-models satisfy both P1 (deterministic label entries are entailed)
// and P2 (absent label entries are non-entailed).

#ifndef DLQ_REASONER_HPP
#define DLQ_REASONER_HPP

#include <array>
#include <cstddef>
#include <memory>
#include <string>

#include "dlq/ast.hpp"
#include "dlq/hierarchy.hpp"
#include "dlq/premodel.hpp"
#include "dlq/query.hpp"

namespace dlq {

struct ReasonerOptions {
  std::size_t node_budget = 100'000;
  std::size_t step_budget = 50'000'000;  // rule applications, global per check
};

// Per-session instrumentation; sessions are single-threaded, counters are
// merged on demand.
struct ReasonerCounters {
  std::size_t consistency_checks = 0;
  std::size_t entailment_checks = 0;
  // wall time per cost category, for calibrating the entailment cost C_E
  std::array<double, 4> entailment_seconds{};
  std::array<std::size_t, 4> entailment_counts{};

  void merge(const ReasonerCounters& o);
};

// Reserved namespace for fresh concept names introduced by entailment
// encodings; these never appear in signatures, statistics, or answers.
inline const std::string kFreshPrefix = "__q_";

class Reasoner {
 public:
  explicit Reasoner(const Ontology& o, ReasonerOptions opts = {});
  ~Reasoner();

  Reasoner(const Reasoner&) = delete;
  Reasoner& operator=(const Reasoner&) = delete;

  const Ontology& ontology() const { return *onto_; }
  const RoleHierarchyClosure& role_closure() const { return closure_; }

  // Cached after the first call. Throws ResourceLimitError when the node
  // budget is exhausted (reported distinctly from inconsistency).
  bool consistent();

  // Pre-model of the initial consistency check; requires consistent().
  const PreModel& premodel();

  // Ground entailment via the refutation encodings:
  //   C ⊑ D      add (C ⊓ ¬D)(x), x fresh
  //   C(a)       add ¬C(a)
  //   r(a,b)     add A_b(b), (∀r.¬A_b)(a), A_b fresh
  //   ¬r(a,b)    add r(a,b)
  //   a ≈ b      add a ≉ b          a ≉ b  add a ≈ b
  //   r ⊑ s      closure lookup, else add r(x,y), A_y(y), (∀s.¬A_y)(x)
  //   trans(r)   add r(x,y), r(y,z), A_z(z), (∀r.¬A_z)(x)
  bool is_entailed(const Axiom& ground_axiom);

  // Entailed concept-name hierarchy over the signature plus Top/Bottom,
  // reduced to direct edges; requires consistent().
  Taxonomy classify_concepts();
  // Role analogue over role names plus TopRole/BottomRole.
  Taxonomy classify_roles();

  // §-style probe for non-simple role successors: O plus fresh C_a(a) and
  // C_a ⊑ ∀r.C_a^r; known/possible r-successors of a are the C_a^r
  // instances of the augmented pre-model. Throws when r is simple (callers
  // should read edge labels directly).
  static Ontology encode_transitive_successors(const Ontology& o, const std::string& a,
                                               const std::string& role);
  static std::string successor_probe_concept(const std::string& a, const std::string& role);

  ReasonerCounters& counters() { return counters_; }

 private:
  bool run_consistency(const std::vector<Axiom>& extra, PreModel* out);

  const Ontology* onto_;
  RoleHierarchyClosure closure_;
  ReasonerOptions opts_;
  ReasonerCounters counters_;
  bool consistency_known_ = false;
  bool consistent_ = false;
  PreModel premodel_;
  std::size_t fresh_counter_ = 0;
};

}  // namespace dlq

#endif  // DLQ_REASONER_HPP
