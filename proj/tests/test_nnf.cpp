#include <doctest.h>

#include <vector>

#include "dlq/nnf.hpp"
#include "dlq/parser.hpp"

using namespace dlq;

TEST_CASE("de morgan") {
  ConceptPtr c = parse_concept_text("not(and(A B))", false);
  CHECK(normalize_nnf(c)->text() == "or(not(A) not(B))");
}

TEST_CASE("quantifier duality") {
  ConceptPtr c = parse_concept_text("not(some(r A))", false);
  CHECK(normalize_nnf(c)->text() == "all(r not(A))");
}

TEST_CASE("counting duality") {
  CHECK(normalize_nnf(parse_concept_text("not(atMost(2 r A))", false))->text() ==
        "atLeast(3 r A)");
  CHECK(normalize_nnf(parse_concept_text("not(atLeast(2 r A))", false))->text() ==
        "atMost(1 r A)");
  CHECK(normalize_nnf(parse_concept_text("not(atLeast(0 r A))", false))->text() ==
        "Bottom");
}

TEST_CASE("double negation and constants") {
  CHECK(normalize_nnf(parse_concept_text("not(not(A))", false))->text() == "A");
  CHECK(normalize_nnf(parse_concept_text("not(Top)", false))->text() == "Bottom");
  CHECK(normalize_nnf(parse_concept_text("not(Bottom)", false))->text() == "Top");
}

TEST_CASE("nnf output shape") {
  const char* inputs[] = {
      "not(or(A and(B not(C))))",
      "not(all(r or(A B)))",
      "not(and(some(r A) atMost(1 r B)))",
  };
  for (const char* in : inputs) {
    ConceptPtr n = normalize_nnf(parse_concept_text(in, false));
    CHECK(in_nnf(n));
  }
}

// Exhaustive small-interpretation oracle: enumerate every interpretation
// over <= 2 concept names, <= 1 role, domain sizes 1..3, and compare the
// extensions of C and nnf(C) pointwise.
namespace {

struct Interp {
  int n;
  // bit e of ext[A] = membership of element e
  unsigned extA = 0, extB = 0;
  // bit (e*n+f) = edge e->f
  unsigned edges = 0;

  bool in_concept(const ConceptPtr& c, int e) const {
    switch (c->kind) {
      case ConceptKind::Top: return true;
      case ConceptKind::Bottom: return false;
      case ConceptKind::Name: return ((c->name == "A" ? extA : extB) >> e) & 1u;
      case ConceptKind::Not: return !in_concept(c->child, e);
      case ConceptKind::And: return in_concept(c->child, e) && in_concept(c->rhs, e);
      case ConceptKind::Or: return in_concept(c->child, e) || in_concept(c->rhs, e);
      case ConceptKind::Exists: {
        for (int f = 0; f < n; ++f)
          if (edge(e, f) && in_concept(c->child, f)) return true;
        return false;
      }
      case ConceptKind::Forall: {
        for (int f = 0; f < n; ++f)
          if (edge(e, f) && !in_concept(c->child, f)) return false;
        return true;
      }
      case ConceptKind::AtLeast:
      case ConceptKind::AtMost: {
        int count = 0;
        for (int f = 0; f < n; ++f)
          if (edge(e, f) && in_concept(c->child, f)) ++count;
        return c->kind == ConceptKind::AtLeast
                   ? count >= static_cast<int>(c->cardinality)
                   : count <= static_cast<int>(c->cardinality);
      }
      default: return false;
    }
  }

  bool edge(int e, int f) const { return (edges >> (e * n + f)) & 1u; }
};

}  // namespace

TEST_CASE("nnf preserves extensions on all small interpretations") {
  std::vector<ConceptPtr> cases;
  const char* texts[] = {
      "not(and(A B))",
      "not(or(A not(B)))",
      "not(some(r A))",
      "not(all(r and(A B)))",
      "not(atMost(1 r A))",
      "not(atLeast(2 r not(A)))",
      "not(and(some(r or(A B)) not(all(r A))))",
      "not(not(some(r not(and(A B)))))",
  };
  for (const char* t : texts) cases.push_back(parse_concept_text(t, false));

  for (const ConceptPtr& c : cases) {
    ConceptPtr n = normalize_nnf(c);
    for (int size = 1; size <= 3; ++size) {
      for (unsigned extA = 0; extA < (1u << size); ++extA)
        for (unsigned extB = 0; extB < (1u << size); ++extB)
          for (unsigned edges = 0; edges < (1u << (size * size)); ++edges) {
            Interp interp{size, extA, extB, edges};
            for (int e = 0; e < size; ++e) {
              REQUIRE(interp.in_concept(c, e) == interp.in_concept(n, e));
            }
          }
    }
  }
}
