#include "dlq/reasoner.hpp"

#include <cassert>
#include <chrono>

#include "dlq/error.hpp"
#include "tableau.hpp"

namespace dlq {

void ReasonerCounters::merge(const ReasonerCounters& o) {
  consistency_checks += o.consistency_checks;
  entailment_checks += o.entailment_checks;
  for (std::size_t i = 0; i < 4; ++i) {
    entailment_seconds[i] += o.entailment_seconds[i];
    entailment_counts[i] += o.entailment_counts[i];
  }
}

Reasoner::Reasoner(const Ontology& o, ReasonerOptions opts)
    : onto_(&o), closure_(RoleHierarchyClosure::build(o)), opts_(opts) {}

Reasoner::~Reasoner() = default;

bool Reasoner::run_consistency(const std::vector<Axiom>& extra, PreModel* out) {
  ++counters_.consistency_checks;
  auto result = internal::run_tableau(*onto_, extra, closure_, opts_, out != nullptr);
  if (result.consistent && out) *out = std::move(result.premodel);
  return result.consistent;
}

bool Reasoner::consistent() {
  if (!consistency_known_) {
    consistent_ = run_consistency({}, &premodel_);
    consistency_known_ = true;
  }
  return consistent_;
}

const PreModel& Reasoner::premodel() {
  if (!consistent()) throw InconsistentOntologyError();
  return premodel_;
}

bool Reasoner::is_entailed(const Axiom& ax) {
  if (!is_ground(ax)) throw UnsupportedConstructError("entailment test on a non-ground axiom");
  ++counters_.entailment_checks;
  const auto category = static_cast<std::size_t>(cost_category(ax));
  auto started = std::chrono::steady_clock::now();

  std::vector<Axiom> extra;
  auto fresh = [&](const std::string& hint) {
    return kFreshPrefix + hint + "_" + std::to_string(fresh_counter_++);
  };

  switch (ax.kind) {
    case AxiomKind::SubClass: {
      IndividualTerm x = IndividualTerm::named(fresh("x"));
      extra.push_back(Axiom::class_assertion(
          Concept::conj(ax.lhs, Concept::negation(ax.rhs)), x));
      break;
    }
    case AxiomKind::ClassAssertion:
      extra.push_back(Axiom::class_assertion(Concept::negation(ax.lhs), ax.individuals[0]));
      break;
    case AxiomKind::RoleAssertion: {
      std::string marker = fresh("A");
      extra.push_back(Axiom::class_assertion(Concept::named(marker), ax.individuals[1]));
      extra.push_back(Axiom::class_assertion(
          Concept::forall(ax.role, Concept::negation(Concept::named(marker))),
          ax.individuals[0]));
      break;
    }
    case AxiomKind::NegRoleAssertion:
      extra.push_back(Axiom::role_assertion(ax.role, ax.individuals[0], ax.individuals[1]));
      break;
    case AxiomKind::Equality:
      if (ax.individuals.size() != 2)
        throw UnsupportedConstructError("n-ary equality in an entailment test");
      extra.push_back(Axiom::inequality(ax.individuals[0], ax.individuals[1]));
      break;
    case AxiomKind::Inequality:
      extra.push_back(Axiom::equality({ax.individuals[0], ax.individuals[1]}));
      break;
    case AxiomKind::SubRole: {
      if (ax.role.kind == RoleTerm::Kind::Inverse || ax.role2.kind == RoleTerm::Kind::Inverse)
        throw UnsupportedConstructError("inverse role in an entailment test");
      if (closure_.subsumed(ax.role, ax.role2)) {
        counters_.entailment_counts[category]++;
        return true;
      }
      IndividualTerm x = IndividualTerm::named(fresh("x"));
      IndividualTerm y = IndividualTerm::named(fresh("y"));
      std::string marker = fresh("A");
      extra.push_back(Axiom::role_assertion(ax.role, x, y));
      extra.push_back(Axiom::class_assertion(Concept::named(marker), y));
      extra.push_back(Axiom::class_assertion(
          Concept::forall(ax.role2, Concept::negation(Concept::named(marker))), x));
      break;
    }
    case AxiomKind::Transitive: {
      if (ax.role.kind == RoleTerm::Kind::Inverse)
        throw UnsupportedConstructError("inverse role in an entailment test");
      if (closure_.transitive(ax.role)) {
        counters_.entailment_counts[category]++;
        return true;
      }
      IndividualTerm x = IndividualTerm::named(fresh("x"));
      IndividualTerm y = IndividualTerm::named(fresh("y"));
      IndividualTerm z = IndividualTerm::named(fresh("z"));
      std::string marker = fresh("A");
      extra.push_back(Axiom::role_assertion(ax.role, x, y));
      extra.push_back(Axiom::role_assertion(ax.role, y, z));
      extra.push_back(Axiom::class_assertion(Concept::named(marker), z));
      extra.push_back(Axiom::class_assertion(
          Concept::forall(ax.role, Concept::negation(Concept::named(marker))), x));
      break;
    }
  }

  bool entailed = !run_consistency(extra, nullptr);

  auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started);
  counters_.entailment_seconds[category] += elapsed.count();
  counters_.entailment_counts[category]++;
  return entailed;
}

Taxonomy Reasoner::classify_concepts() {
  if (!consistent()) throw InconsistentOntologyError();
  auto concept_of = [](const std::string& n) -> ConceptPtr {
    if (n == kTopName) return Concept::top();
    if (n == kBottomName) return Concept::bottom();
    return Concept::named(n);
  };
  return Taxonomy::build(onto_->sig.concepts, kTopName, kBottomName,
                         [&](const std::string& a, const std::string& b) {
                           return is_entailed(Axiom::sub_class(concept_of(a), concept_of(b)));
                         });
}

Taxonomy Reasoner::classify_roles() {
  if (!consistent()) throw InconsistentOntologyError();
  auto role_of = [](const std::string& n) -> RoleTerm {
    if (n == kTopRoleName) return RoleTerm::top();
    if (n == kBottomRoleName) return RoleTerm::bottom();
    return RoleTerm::named(n);
  };
  return Taxonomy::build(onto_->sig.roles, kTopRoleName, kBottomRoleName,
                         [&](const std::string& a, const std::string& b) {
                           return is_entailed(Axiom::sub_role(role_of(a), role_of(b)));
                         });
}

std::string Reasoner::successor_probe_concept(const std::string& a, const std::string& role) {
  return kFreshPrefix + "reach_" + role + "_" + a;
}

Ontology Reasoner::encode_transitive_successors(const Ontology& o, const std::string& a,
                                                const std::string& role) {
  RoleHierarchyClosure closure = RoleHierarchyClosure::build(o);
  if (closure.simple(RoleTerm::named(role)))
    throw std::invalid_argument("role " + role +
                                " is simple; read successors off the edge labels");
  Ontology augmented = o;
  std::string source = successor_probe_concept(a, role) + "_src";
  std::string reach = successor_probe_concept(a, role);
  augmented.add(Axiom::class_assertion(Concept::named(source), IndividualTerm::named(a)));
  augmented.add(Axiom::sub_class(
      Concept::named(source),
      Concept::forall(RoleTerm::named(role), Concept::named(reach))));
  return augmented;
}

}  // namespace dlq
