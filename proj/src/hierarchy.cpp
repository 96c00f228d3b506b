#include "dlq/hierarchy.hpp"

#include <algorithm>
#include <cassert>

namespace dlq {

RoleHierarchyClosure RoleHierarchyClosure::build(const Ontology& o) {
  return build(o.rbox);
}

RoleHierarchyClosure RoleHierarchyClosure::build(const std::vector<Axiom>& rbox) {
  RoleHierarchyClosure h;
  auto touch = [&](const RoleTerm& r) {
    h.universe_.insert(r);
    h.universe_.insert(r.inv());
  };
  std::set<std::pair<RoleTerm, RoleTerm>>& pairs = h.pairs_;
  std::set<RoleTerm> declared_trans;
  for (const auto& ax : rbox) {
    if (ax.kind == AxiomKind::SubRole) {
      touch(ax.role);
      touch(ax.role2);
      pairs.insert({ax.role, ax.role2});
      pairs.insert({ax.role.inv(), ax.role2.inv()});
    } else if (ax.kind == AxiomKind::Transitive) {
      touch(ax.role);
      declared_trans.insert(ax.role);
    }
  }
  // reflexivity over the touched universe
  for (const auto& r : h.universe_) pairs.insert({r, r});
  // transitive closure
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [a, b] : std::set<std::pair<RoleTerm, RoleTerm>>(pairs))
      for (const auto& [c, d] : std::set<std::pair<RoleTerm, RoleTerm>>(pairs))
        if (b == c && pairs.insert({a, d}).second) changed = true;
  }
  // r transitive w.r.t. H: exists s with r ≡_H s and trans(s) or trans(inv(s))
  for (const auto& r : h.universe_) {
    for (const auto& s : h.universe_) {
      if (!(pairs.count({r, s}) && pairs.count({s, r}))) continue;
      if (declared_trans.count(s) || declared_trans.count(s.inv())) {
        h.transitive_.insert(r);
        break;
      }
    }
  }
  return h;
}

bool RoleHierarchyClosure::subsumed(const RoleTerm& r, const RoleTerm& s) const {
  if (r == s) return true;
  return pairs_.count({r, s}) != 0;
}

bool RoleHierarchyClosure::equivalent(const RoleTerm& r, const RoleTerm& s) const {
  return subsumed(r, s) && subsumed(s, r);
}

bool RoleHierarchyClosure::transitive(const RoleTerm& r) const {
  return transitive_.count(r) != 0;
}

bool RoleHierarchyClosure::simple(const RoleTerm& r) const {
  if (r.kind == RoleTerm::Kind::Top) return false;
  for (const auto& t : transitive_)
    if (subsumed(t, r)) return false;
  return true;
}

std::set<std::string> RoleHierarchyClosure::named_subroles(const std::string& r) const {
  std::set<std::string> out{r};
  RoleTerm rt = RoleTerm::named(r);
  for (const auto& s : universe_)
    if (s.is_named() && subsumed(s, rt)) out.insert(s.name);
  return out;
}

std::set<std::string> RoleHierarchyClosure::named_superroles(const std::string& r) const {
  std::set<std::string> out{r};
  RoleTerm rt = RoleTerm::named(r);
  for (const auto& s : universe_)
    if (s.is_named() && subsumed(rt, s)) out.insert(s.name);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void find_restrictions(const ConceptPtr& c, const std::string& axiom_text,
                       const RoleHierarchyClosure& h,
                       std::vector<SimplicityViolation>& out) {
  if (!c) return;
  if ((c->kind == ConceptKind::AtLeast || c->kind == ConceptKind::AtMost) &&
      !c->role.is_var() && !h.simple(c->role)) {
    out.push_back({axiom_text, c->text(), c->role.text()});
  }
  find_restrictions(c->child, axiom_text, h, out);
  find_restrictions(c->rhs, axiom_text, h, out);
}

}  // namespace

std::vector<SimplicityViolation> check_simplicity(const std::vector<Axiom>& axioms,
                                                  const RoleHierarchyClosure& closure) {
  std::vector<SimplicityViolation> out;
  for (const auto& ax : axioms) {
    find_restrictions(ax.lhs, ax.text(), closure, out);
    find_restrictions(ax.rhs, ax.text(), closure, out);
  }
  return out;
}

std::vector<SimplicityViolation> check_simplicity(const Ontology& o) {
  return check_simplicity(o.all_axioms(), RoleHierarchyClosure::build(o));
}

// ---------------------------------------------------------------------------

Taxonomy Taxonomy::build(
    const std::set<std::string>& names, const std::string& top_name,
    const std::string& bottom_name,
    const std::function<bool(const std::string&, const std::string&)>& oracle) {
  Taxonomy t;
  t.top_name_ = top_name;
  t.bottom_name_ = bottom_name;

  std::vector<std::string> elems{top_name, bottom_name};
  elems.insert(elems.end(), names.begin(), names.end());
  const std::size_t n = elems.size();

  // subsumption matrix; top/bottom relationships are fixed
  std::vector<std::vector<bool>> sub(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    sub[i][i] = true;
    sub[i][0] = true;  // x ⊑ top
    sub[1][i] = true;  // bottom ⊑ x
  }
  for (std::size_t i = 2; i < n; ++i) {
    sub[i][1] = oracle(elems[i], bottom_name);  // unsatisfiable name
    sub[0][i] = oracle(top_name, elems[i]);
    for (std::size_t j = 2; j < n; ++j)
      if (i != j) sub[i][j] = oracle(elems[i], elems[j]);
  }

  // equivalence classes
  std::vector<int> cls(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    int id = static_cast<int>(t.nodes_.size());
    t.nodes_.emplace_back();
    cls[i] = id;
    for (std::size_t j = i + 1; j < n; ++j)
      if (cls[j] < 0 && sub[i][j] && sub[j][i]) cls[j] = id;
    for (std::size_t j = i; j < n; ++j)
      if (cls[j] == cls[i] && j >= 2) t.nodes_[id].members.push_back(elems[j]);
    std::sort(t.nodes_[id].members.begin(), t.nodes_[id].members.end());
  }
  t.top_ = cls[0];
  t.bottom_ = cls[1];
  for (std::size_t i = 2; i < n; ++i) t.index_[elems[i]] = cls[i];

  const int m = static_cast<int>(t.nodes_.size());
  std::vector<std::vector<bool>> below(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sub[i][j]) below[cls[i]][cls[j]] = true;

  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && below[a][b]) {
        t.nodes_[a].supers_all.insert(b);
        t.nodes_[b].subs_all.insert(a);
      }

  // transitive reduction for direct edges
  for (int a = 0; a < m; ++a) {
    for (int b : t.nodes_[a].supers_all) {
      bool direct = true;
      for (int c : t.nodes_[a].supers_all) {
        if (c == b || !below[c][b]) continue;
        direct = false;
        break;
      }
      if (direct) {
        t.nodes_[a].direct_supers.insert(b);
        t.nodes_[b].direct_subs.insert(a);
      }
    }
  }
  return t;
}

int Taxonomy::node_of(const std::string& name) const {
  if (name == top_name_) return top_;
  if (name == bottom_name_) return bottom_;
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

std::string Taxonomy::rep_of(int node) const {
  if (!nodes_[node].members.empty()) return nodes_[node].members.front();
  return node == top_ ? top_name_ : bottom_name_;
}

bool Taxonomy::subsumed(const std::string& a, const std::string& b) const {
  int na = node_of(a), nb = node_of(b);
  if (na < 0 || nb < 0) return false;
  return na == nb || nodes_[na].supers_all.count(nb) != 0;
}

bool Taxonomy::equivalent(const std::string& a, const std::string& b) const {
  int na = node_of(a), nb = node_of(b);
  return na >= 0 && na == nb;
}

std::set<std::string> Taxonomy::subs_closure(const std::string& name) const {
  std::set<std::string> out;
  int nd = node_of(name);
  if (nd < 0) return out;
  auto add = [&](int x) {
    for (const auto& mem : nodes_[x].members) out.insert(mem);
  };
  add(nd);
  for (int x : nodes_[nd].subs_all) add(x);
  return out;
}

std::set<std::string> Taxonomy::supers_closure(const std::string& name) const {
  std::set<std::string> out;
  int nd = node_of(name);
  if (nd < 0) return out;
  auto add = [&](int x) {
    for (const auto& mem : nodes_[x].members) out.insert(mem);
  };
  add(nd);
  for (int x : nodes_[nd].supers_all) add(x);
  return out;
}

std::set<std::string> Taxonomy::equivalents(const std::string& name) const {
  std::set<std::string> out;
  int nd = node_of(name);
  if (nd < 0) return out;
  for (const auto& mem : nodes_[nd].members)
    if (mem != name) out.insert(mem);
  return out;
}

std::vector<std::string> Taxonomy::direct_subs(const std::string& name) const {
  std::vector<std::string> out;
  int nd = node_of(name);
  if (nd < 0) return out;
  for (int x : nodes_[nd].direct_subs) out.push_back(rep_of(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> Taxonomy::direct_supers(const std::string& name) const {
  std::vector<std::string> out;
  int nd = node_of(name);
  if (nd < 0) return out;
  for (int x : nodes_[nd].direct_supers) out.push_back(rep_of(x));
  std::sort(out.begin(), out.end());
  return out;
}

int Taxonomy::depth(const std::string& name) const {
  int nd = node_of(name);
  if (nd < 0) return 1;
  // longest downward path over nodes that carry signature names
  std::function<int(int)> height = [&](int node) -> int {
    auto it = depth_cache_.find(node);
    if (it != depth_cache_.end()) return it->second;
    depth_cache_[node] = 1;  // cycle guard; taxonomy is acyclic anyway
    int best = 0;
    for (int s : nodes_[node].direct_subs) {
      if (s == bottom_ && nodes_[s].members.empty()) continue;
      best = std::max(best, height(s));
    }
    int h = 1 + best;
    depth_cache_[node] = h;
    return h;
  };
  return height(nd);
}

std::set<std::string> Taxonomy::names() const {
  std::set<std::string> out;
  for (const auto& [name, _] : index_) out.insert(name);
  return out;
}

}  // namespace dlq
