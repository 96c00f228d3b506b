// Independent entailment oracle for tests: grounds an ontology over a fixed
// finite domain into propositional clauses and decides satisfiability with a
// hand-rolled DPLL. Deliberately a different algorithm family from the
// tableau so the two can cross-check each other.
//
// Also provides direct interpretation enumeration for concept-extension
// checks at very small scale (NNF preservation tests).

#ifndef DLQ_TESTS_MODEL_ORACLE_HPP
#define DLQ_TESTS_MODEL_ORACLE_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "dlq/ast.hpp"

namespace dlq::testing {

// ---------------------------------------------------------------------------
// Tiny CNF + DPLL

class Sat {
 public:
  int new_var() { return ++vars_; }

  void add_clause(std::vector<int> lits) {
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    for (int l : lits)
      if (std::find(lits.begin(), lits.end(), -l) != lits.end()) return;  // tautology
    clauses_.push_back(std::move(lits));
  }

  bool solve() {
    std::vector<int> assign(vars_ + 1, 0);  // 0 unknown, 1 true, -1 false
    return dpll(assign);
  }

 private:
  bool dpll(std::vector<int>& assign) {
    // unit propagation
    for (;;) {
      bool changed = false;
      for (const auto& cl : clauses_) {
        int unassigned = 0, last = 0;
        bool satisfied = false;
        for (int l : cl) {
          int v = assign[std::abs(l)];
          if (v == 0) {
            ++unassigned;
            last = l;
          } else if ((l > 0) == (v > 0)) {
            satisfied = true;
            break;
          }
        }
        if (satisfied) continue;
        if (unassigned == 0) return false;
        if (unassigned == 1) {
          assign[std::abs(last)] = last > 0 ? 1 : -1;
          changed = true;
        }
      }
      if (!changed) break;
    }
    int pick = 0;
    for (int v = 1; v <= vars_; ++v)
      if (assign[v] == 0) {
        pick = v;
        break;
      }
    if (pick == 0) return true;
    auto saved = assign;
    assign[pick] = 1;
    if (dpll(assign)) return true;
    assign = saved;
    assign[pick] = -1;
    if (dpll(assign)) return true;
    assign = saved;
    return false;
  }

  int vars_ = 0;
  std::vector<std::vector<int>> clauses_;
};

// ---------------------------------------------------------------------------
// Fixed-domain grounding
//
// Propositional atoms: concept membership per (name, element), role
// membership per (name, element, element), and element assignment per
// (individual, element) with exactly-one constraints. Tseitin variables for
// every ground concept expression.

class GroundedOntology {
 public:
  GroundedOntology(const Ontology& o, int domain_size) : n_(domain_size) {
    for (const auto& c : o.sig.concepts)
      for (int e = 0; e < n_; ++e) concept_var_[{c, e}] = sat_.new_var();
    for (const auto& r : o.sig.roles)
      for (int e = 0; e < n_; ++e)
        for (int f = 0; f < n_; ++f) role_var_[{r, e, f}] = sat_.new_var();
    for (const auto& a : o.sig.individuals) {
      std::vector<int> at_least;
      for (int e = 0; e < n_; ++e) {
        int v = sat_.new_var();
        ind_var_[{a, e}] = v;
        at_least.push_back(v);
      }
      sat_.add_clause(at_least);
      for (int e = 0; e < n_; ++e)
        for (int f = e + 1; f < n_; ++f)
          sat_.add_clause({-ind_var_[{a, e}], -ind_var_[{a, f}]});
    }
    for (const auto& ax : o.all_axioms()) assert_axiom(ax, true);
  }

  // Adds the negation of a ground axiom (for entailment refutation).
  void assert_negated(const Axiom& ax) { assert_axiom(ax, false); }

  bool satisfiable() { return sat_.solve(); }

 private:
  // Tseitin: returns a literal equivalent to "element e is in concept c".
  int concept_lit(const ConceptPtr& c, int e) {
    std::string key = c->text() + "@" + std::to_string(e);
    auto it = expr_var_.find(key);
    if (it != expr_var_.end()) return it->second;
    int v = sat_.new_var();
    expr_var_[key] = v;
    switch (c->kind) {
      case ConceptKind::Top:
        sat_.add_clause({v});
        break;
      case ConceptKind::Bottom:
        sat_.add_clause({-v});
        break;
      case ConceptKind::Name: {
        int a = concept_var_.at({c->name, e});
        sat_.add_clause({-v, a});
        sat_.add_clause({v, -a});
        break;
      }
      case ConceptKind::Not: {
        int a = concept_lit(c->child, e);
        sat_.add_clause({-v, -a});
        sat_.add_clause({v, a});
        break;
      }
      case ConceptKind::And: {
        int a = concept_lit(c->child, e), b = concept_lit(c->rhs, e);
        sat_.add_clause({-v, a});
        sat_.add_clause({-v, b});
        sat_.add_clause({v, -a, -b});
        break;
      }
      case ConceptKind::Or: {
        int a = concept_lit(c->child, e), b = concept_lit(c->rhs, e);
        sat_.add_clause({-v, a, b});
        sat_.add_clause({v, -a});
        sat_.add_clause({v, -b});
        break;
      }
      case ConceptKind::Exists: {
        // v <-> OR_f (edge(e,f) & filler(f))
        std::vector<int> any{-v};
        for (int f = 0; f < n_; ++f) {
          int conj = sat_.new_var();
          int edge = edge_lit(c->role, e, f);
          int fil = concept_lit(c->child, f);
          sat_.add_clause({-conj, edge});
          sat_.add_clause({-conj, fil});
          sat_.add_clause({conj, -edge, -fil});
          sat_.add_clause({v, -conj});
          any.push_back(conj);
        }
        sat_.add_clause(any);
        break;
      }
      case ConceptKind::Forall: {
        // v <-> AND_f (edge(e,f) -> filler(f))
        std::vector<int> back{v};
        for (int f = 0; f < n_; ++f) {
          int edge = edge_lit(c->role, e, f);
          int fil = concept_lit(c->child, f);
          sat_.add_clause({-v, -edge, fil});
          int viol = sat_.new_var();
          sat_.add_clause({-viol, edge});
          sat_.add_clause({-viol, -fil});
          sat_.add_clause({viol, -edge, fil});
          back.push_back(viol);
        }
        sat_.add_clause(back);
        break;
      }
      case ConceptKind::AtLeast:
      case ConceptKind::AtMost: {
        // member(f) := edge(e,f) & filler(f); cardinality via enumeration of
        // subsets is exponential, so encode counting with a totalizer-lite:
        // enumerate all subsets of size threshold (domains here are <= 5)
        std::vector<int> members;
        for (int f = 0; f < n_; ++f) {
          int conj = sat_.new_var();
          int edge = edge_lit(c->role, e, f);
          int fil = concept_lit(c->child, f);
          sat_.add_clause({-conj, edge});
          sat_.add_clause({-conj, fil});
          sat_.add_clause({conj, -edge, -fil});
          members.push_back(conj);
        }
        unsigned k = c->cardinality;
        if (c->kind == ConceptKind::AtLeast) {
          // v -> at least k of members: for every subset of size n-k+1, one holds
          if (k == 0) {
            sat_.add_clause({v});
          } else if (k > static_cast<unsigned>(n_)) {
            sat_.add_clause({-v});
          } else {
            for_each_subset(members, n_ - k + 1, [&](const std::vector<int>& sub) {
              std::vector<int> cl{-v};
              for (int m : sub) cl.push_back(m);
              sat_.add_clause(cl);
            });
            // !v -> at most k-1: for every subset of size k, one fails
            for_each_subset(members, k, [&](const std::vector<int>& sub) {
              std::vector<int> cl{v};
              for (int m : sub) cl.push_back(-m);
              sat_.add_clause(cl);
            });
          }
        } else {  // AtMost
          // v -> at most k: every subset of size k+1 has a failure
          if (k >= static_cast<unsigned>(n_)) {
            sat_.add_clause({v});
          } else {
            for_each_subset(members, k + 1, [&](const std::vector<int>& sub) {
              std::vector<int> cl{-v};
              for (int m : sub) cl.push_back(-m);
              sat_.add_clause(cl);
            });
            // !v -> at least k+1
            for_each_subset(members, n_ - static_cast<int>(k), [&](const std::vector<int>& sub) {
              std::vector<int> cl{v};
              for (int m : sub) cl.push_back(m);
              sat_.add_clause(cl);
            });
          }
        }
        break;
      }
      case ConceptKind::Var:
        throw std::logic_error("variable in ground oracle");
    }
    return v;
  }

  int edge_lit(const RoleTerm& r, int e, int f) {
    if (r.kind == RoleTerm::Kind::Top) return true_lit();
    if (r.kind == RoleTerm::Kind::Bottom) return -true_lit();
    if (r.kind == RoleTerm::Kind::Inverse) return role_var_.at({r.name, f, e});
    return role_var_.at({r.name, e, f});
  }

  int true_lit() {
    if (!true_var_) {
      true_var_ = sat_.new_var();
      sat_.add_clause({true_var_});
    }
    return true_var_;
  }

  template <typename F>
  void for_each_subset(const std::vector<int>& items, int size, F f) {
    if (size <= 0 || size > static_cast<int>(items.size())) return;
    std::vector<int> idx(size);
    std::vector<int> sub(size);
    std::function<void(int, int)> rec = [&](int start, int depth) {
      if (depth == size) {
        for (int i = 0; i < size; ++i) sub[i] = items[idx[i]];
        f(sub);
        return;
      }
      for (int i = start; i < static_cast<int>(items.size()); ++i) {
        idx[depth] = i;
        rec(i + 1, depth + 1);
      }
    };
    rec(0, 0);
  }

  void assert_axiom(const Axiom& ax, bool positive) {
    switch (ax.kind) {
      case AxiomKind::SubClass: {
        if (positive) {
          for (int e = 0; e < n_; ++e)
            sat_.add_clause({-concept_lit(ax.lhs, e), concept_lit(ax.rhs, e)});
        } else {
          // some element in lhs and not rhs; use a fresh "witness" selector
          std::vector<int> any;
          for (int e = 0; e < n_; ++e) {
            int w = sat_.new_var();
            sat_.add_clause({-w, concept_lit(ax.lhs, e)});
            sat_.add_clause({-w, -concept_lit(ax.rhs, e)});
            any.push_back(w);
          }
          sat_.add_clause(any);
        }
        break;
      }
      case AxiomKind::SubRole: {
        auto clause_for = [&](int e, int f, bool pos) {
          int l = edge_lit(ax.role, e, f), r = edge_lit(ax.role2, e, f);
          if (pos) {
            sat_.add_clause({-l, r});
          }
        };
        if (positive) {
          for (int e = 0; e < n_; ++e)
            for (int f = 0; f < n_; ++f) clause_for(e, f, true);
        } else {
          std::vector<int> any;
          for (int e = 0; e < n_; ++e)
            for (int f = 0; f < n_; ++f) {
              int w = sat_.new_var();
              sat_.add_clause({-w, edge_lit(ax.role, e, f)});
              sat_.add_clause({-w, -edge_lit(ax.role2, e, f)});
              any.push_back(w);
            }
          sat_.add_clause(any);
        }
        break;
      }
      case AxiomKind::Transitive: {
        if (positive) {
          for (int e = 0; e < n_; ++e)
            for (int f = 0; f < n_; ++f)
              for (int g = 0; g < n_; ++g)
                sat_.add_clause({-edge_lit(ax.role, e, f), -edge_lit(ax.role, f, g),
                                 edge_lit(ax.role, e, g)});
        } else {
          std::vector<int> any;
          for (int e = 0; e < n_; ++e)
            for (int f = 0; f < n_; ++f)
              for (int g = 0; g < n_; ++g) {
                int w = sat_.new_var();
                sat_.add_clause({-w, edge_lit(ax.role, e, f)});
                sat_.add_clause({-w, edge_lit(ax.role, f, g)});
                sat_.add_clause({-w, -edge_lit(ax.role, e, g)});
                any.push_back(w);
              }
          sat_.add_clause(any);
        }
        break;
      }
      case AxiomKind::ClassAssertion: {
        const std::string& a = ax.individuals[0].name;
        for (int e = 0; e < n_; ++e) {
          int lit = concept_lit(ax.lhs, e);
          sat_.add_clause({-ind_var_.at({a, e}), positive ? lit : -lit});
        }
        break;
      }
      case AxiomKind::RoleAssertion:
      case AxiomKind::NegRoleAssertion: {
        bool want = (ax.kind == AxiomKind::RoleAssertion) == positive;
        const std::string& a = ax.individuals[0].name;
        const std::string& b = ax.individuals[1].name;
        for (int e = 0; e < n_; ++e)
          for (int f = 0; f < n_; ++f) {
            int lit = edge_lit(ax.role, e, f);
            sat_.add_clause(
                {-ind_var_.at({a, e}), -ind_var_.at({b, f}), want ? lit : -lit});
          }
        break;
      }
      case AxiomKind::Equality:
      case AxiomKind::Inequality: {
        bool want_equal = (ax.kind == AxiomKind::Equality) == positive;
        const std::string& a = ax.individuals[0].name;
        const std::string& b = ax.individuals[1].name;
        if (want_equal) {
          for (int e = 0; e < n_; ++e) {
            sat_.add_clause({-ind_var_.at({a, e}), ind_var_.at({b, e})});
            sat_.add_clause({ind_var_.at({a, e}), -ind_var_.at({b, e})});
          }
        } else {
          for (int e = 0; e < n_; ++e)
            sat_.add_clause({-ind_var_.at({a, e}), -ind_var_.at({b, e})});
        }
        break;
      }
    }
  }

  int n_;
  Sat sat_;
  int true_var_ = 0;
  std::map<std::pair<std::string, int>, int> concept_var_;
  std::map<std::tuple<std::string, int, int>, int> role_var_;
  std::map<std::pair<std::string, int>, int> ind_var_;
  std::map<std::string, int> expr_var_;
};

// Satisfiable in some model with domain size <= max_domain.
inline bool oracle_consistent(const Ontology& o, int max_domain) {
  for (int n = 1; n <= max_domain; ++n) {
    GroundedOntology g(o, n);
    if (g.satisfiable()) return true;
  }
  return false;
}

// O ⊨ ax, judged over models of domain size <= max_domain. The generated
// corpora stay inside the small-model regime where this agrees with
// unrestricted entailment.
inline bool oracle_entailed(const Ontology& o, const Axiom& ax, int max_domain) {
  Ontology with_names = o;
  Signature extra;
  collect_names(ax, extra);
  for (const auto& c : extra.concepts) with_names.sig.concepts.insert(c);
  for (const auto& r : extra.roles) with_names.sig.roles.insert(r);
  for (const auto& i : extra.individuals) with_names.sig.individuals.insert(i);
  for (int n = 1; n <= max_domain; ++n) {
    GroundedOntology g(with_names, n);
    g.assert_negated(ax);
    if (g.satisfiable()) return false;  // countermodel found
  }
  return true;
}

}  // namespace dlq::testing

#endif  // DLQ_TESTS_MODEL_ORACLE_HPP
