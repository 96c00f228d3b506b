#include <doctest.h>

#include <random>

#include "dlq/hierarchy.hpp"
#include "dlq/parser.hpp"

using namespace dlq;

TEST_CASE("closure contains reflexivity, asserted pairs, and inverse propagation") {
  Ontology o = parse_ontology("SubRoleOf(r s) ClassAssertion(Top a)");
  auto h = RoleHierarchyClosure::build(o);
  RoleTerm r = RoleTerm::named("r"), s = RoleTerm::named("s");
  CHECK(h.subsumed(r, r));
  CHECK(h.subsumed(s, s));
  CHECK(h.subsumed(r, s));
  CHECK(h.subsumed(r.inv(), s.inv()));
  CHECK_FALSE(h.subsumed(s, r));
}

TEST_CASE("mutual inclusion gives equivalence") {
  Ontology o = parse_ontology("SubRoleOf(r s) SubRoleOf(s r)");
  auto h = RoleHierarchyClosure::build(o);
  CHECK(h.equivalent(RoleTerm::named("r"), RoleTerm::named("s")));
}

TEST_CASE("transitivity and simplicity flags") {
  Ontology o = parse_ontology("Trans(r) SubRoleOf(r s)");
  auto h = RoleHierarchyClosure::build(o);
  CHECK(h.transitive(RoleTerm::named("r")));
  CHECK_FALSE(h.simple(RoleTerm::named("r")));
  CHECK_FALSE(h.simple(RoleTerm::named("s")));
}

TEST_CASE("equivalent role inherits transitivity") {
  // r ≡_H s and trans(s) makes r transitive w.r.t. H
  Ontology o = parse_ontology("SubRoleOf(r s) SubRoleOf(s r) Trans(s)");
  auto h = RoleHierarchyClosure::build(o);
  CHECK(h.transitive(RoleTerm::named("r")));
}

TEST_CASE("top role is never simple") {
  Ontology o = parse_ontology("ClassAssertion(Top a)");
  auto h = RoleHierarchyClosure::build(o);
  CHECK_FALSE(h.simple(RoleTerm::top()));
  CHECK(h.simple(RoleTerm::bottom()));
}

TEST_CASE("simplicity report") {
  SUBCASE("no transitivity, empty report") {
    Ontology o = parse_ontology("SubClassOf(A atMost(1 r Top)) SubRoleOf(r s)");
    CHECK(check_simplicity(o).empty());
  }
  SUBCASE("direct violation") {
    std::vector<Axiom> axioms = {
        Axiom::transitive(RoleTerm::named("r")),
        Axiom::sub_class(Concept::named("A"),
                         Concept::at_most(1, RoleTerm::named("r"), Concept::top()))};
    auto h = RoleHierarchyClosure::build(
        std::vector<Axiom>{Axiom::transitive(RoleTerm::named("r"))});
    auto report = check_simplicity(axioms, h);
    REQUIRE(report.size() == 1);
    CHECK(report[0].role_text == "r");
  }
  SUBCASE("violation through the hierarchy") {
    std::vector<Axiom> axioms = {
        Axiom::transitive(RoleTerm::named("r")),
        Axiom::sub_role(RoleTerm::named("r"), RoleTerm::named("s")),
        Axiom::sub_class(Concept::named("A"),
                         Concept::at_least(2, RoleTerm::named("s"), Concept::named("B")))};
    auto h = RoleHierarchyClosure::build(axioms);
    auto report = check_simplicity(axioms, h);
    REQUIRE(report.size() == 1);
    CHECK(report[0].role_text == "s");
  }
}

// Brute-force fixpoint over explicit derivation rules: reflexivity,
// asserted inclusions, inverse propagation, transitivity. Must equal the
// computed closure on random role boxes over up to 6 roles.
TEST_CASE("closure equals brute-force fixpoint") {
  std::mt19937 rng(20240817);
  const std::vector<std::string> role_names = {"r0", "r1", "r2", "r3", "r4", "r5"};
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> n_axioms(0, 7), pick(0, 5);
    std::vector<Axiom> rbox;
    for (int i = 0, n = n_axioms(rng); i < n; ++i) {
      RoleTerm a = RoleTerm::named(role_names[pick(rng)]);
      RoleTerm b = RoleTerm::named(role_names[pick(rng)]);
      rbox.push_back(Axiom::sub_role(a, b));
    }
    auto computed = RoleHierarchyClosure::build(rbox);

    // independent fixpoint
    std::set<std::pair<RoleTerm, RoleTerm>> pairs;
    std::set<RoleTerm> universe;
    for (const auto& ax : rbox) {
      for (const RoleTerm* t : {&ax.role, &ax.role2}) {
        universe.insert(*t);
        universe.insert(t->inv());
      }
      pairs.insert({ax.role, ax.role2});
      pairs.insert({ax.role.inv(), ax.role2.inv()});
    }
    for (const auto& t : universe) pairs.insert({t, t});
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& p : std::set<std::pair<RoleTerm, RoleTerm>>(pairs))
        for (const auto& q : std::set<std::pair<RoleTerm, RoleTerm>>(pairs))
          if (p.second == q.first && pairs.insert({p.first, q.second}).second)
            changed = true;
    }
    for (const auto& a : universe)
      for (const auto& b : universe)
        CHECK(computed.subsumed(a, b) == (a == b || pairs.count({a, b}) != 0));
  }
}

TEST_CASE("taxonomy basics") {
  // order: A ⊑ B ⊑ C, D ≡ B
  auto oracle = [](const std::string& x, const std::string& y) {
    auto rank = [](const std::string& n) -> int {
      if (n == "Bottom") return 0;
      if (n == "A") return 1;
      if (n == "B" || n == "D") return 2;
      if (n == "C") return 3;
      return 4;  // Top
    };
    if (x == y) return true;
    if (rank(x) == rank(y)) return rank(x) == 2;  // B ≡ D
    return rank(x) < rank(y);
  };
  Taxonomy t = Taxonomy::build({"A", "B", "C", "D"}, "Top", "Bottom", oracle);
  CHECK(t.subsumed("A", "C"));
  CHECK(t.equivalent("B", "D"));
  CHECK(t.equivalents("B") == std::set<std::string>{"D"});
  CHECK(t.subs_closure("C") == std::set<std::string>{"A", "B", "C", "D"});
  CHECK(t.supers_closure("A") == std::set<std::string>{"A", "B", "C", "D"});
  CHECK(t.direct_subs("C") == std::vector<std::string>{"B"});
  CHECK(t.direct_supers("A") == std::vector<std::string>{"B"});
  CHECK(t.direct_subs("Top") == std::vector<std::string>{"C"});
  // depths: leaf A=1, B=2, C=3
  CHECK(t.depth("A") == 1);
  CHECK(t.depth("B") == 2);
  CHECK(t.depth("C") == 3);
  CHECK(t.depth("Top") == 4);
}

TEST_CASE("taxonomy bottom node collects unsatisfiable names") {
  auto oracle = [](const std::string& x, const std::string& y) {
    if (x == y) return true;
    if (x == "Bottom" || y == "Top") return true;
    if (x == "U") return true;  // U unsatisfiable: below everything
    return false;
  };
  Taxonomy t = Taxonomy::build({"A", "U"}, "Top", "Bottom", oracle);
  CHECK(t.equivalent("U", "Bottom"));
  CHECK(t.subs_closure("A") == std::set<std::string>{"A", "U"});
  // direct subs of A reach the bottom node, shown under its member name
  CHECK(t.direct_subs("A") == std::vector<std::string>{"U"});
}
