#include "tableau.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>

#include "dlq/error.hpp"
#include "dlq/nnf.hpp"

// Classic tableau with NNF labels, ancestor subset blocking, and
// copy-on-branch depth-first search over the nondeterministic rules
// (disjunction, qualified-number choose, at-most merge). Provenance: an
// entry is nondeterministic iff some premise is, or the producing rule had
// more than one live alternative. The top role is handled as a universal
// role (forall over it constrains every node, exists over it creates an
// edge-free witness); the bottom role is rewritten away before interning.

namespace dlq::internal {

namespace {

using Cid = int;

struct Clash {};

// ---------------------------------------------------------------------------

ConceptPtr eliminate_bottom_role(const ConceptPtr& c) {
  if (!c) return c;
  auto bot = [](const RoleTerm& r) { return r.kind == RoleTerm::Kind::Bottom; };
  switch (c->kind) {
    case ConceptKind::Not:
      return Concept::negation(eliminate_bottom_role(c->child));
    case ConceptKind::And:
      return Concept::conj(eliminate_bottom_role(c->child), eliminate_bottom_role(c->rhs));
    case ConceptKind::Or:
      return Concept::disj(eliminate_bottom_role(c->child), eliminate_bottom_role(c->rhs));
    case ConceptKind::Exists:
      if (bot(c->role)) return Concept::bottom();
      return Concept::exists(c->role, eliminate_bottom_role(c->child));
    case ConceptKind::Forall:
      if (bot(c->role)) return Concept::top();
      return Concept::forall(c->role, eliminate_bottom_role(c->child));
    case ConceptKind::AtLeast:
      if (bot(c->role)) return c->cardinality == 0 ? Concept::top() : Concept::bottom();
      return Concept::at_least(c->cardinality, c->role, eliminate_bottom_role(c->child));
    case ConceptKind::AtMost:
      if (bot(c->role)) return Concept::top();
      return Concept::at_most(c->cardinality, c->role, eliminate_bottom_role(c->child));
    default:
      return c;
  }
}

// ---------------------------------------------------------------------------

class Context {
 public:
  Context(const RoleHierarchyClosure& closure, const ReasonerOptions& opts)
      : closure_(closure), opts_(opts) {}

  Cid intern_input(const ConceptPtr& raw) {
    return intern(normalize_nnf(eliminate_bottom_role(raw)));
  }

  Cid intern(const ConceptPtr& nnf) {
    std::string key = nnf->text();
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    if (nnf->kind == ConceptKind::Exists || nnf->kind == ConceptKind::Forall ||
        nnf->kind == ConceptKind::AtLeast || nnf->kind == ConceptKind::AtMost) {
      if (nnf->role.kind == RoleTerm::Kind::Inverse || nnf->role.is_var())
        throw UnsupportedConstructError("role term " + nnf->role.text() +
                                        " inside the reasoner");
    }
    Cid id = static_cast<Cid>(concepts_.size());
    concepts_.push_back(nnf);
    index_.emplace(std::move(key), id);
    return id;
  }

  const ConceptPtr& concept_of(Cid id) const { return concepts_[id]; }

  Cid complement(Cid id) {
    auto it = complement_.find(id);
    if (it != complement_.end()) return it->second;
    Cid c = intern(normalize_nnf_negated(concepts_[id]));
    complement_[id] = c;
    complement_[c] = id;
    return c;
  }

  bool sub_role(const std::string& r, const std::string& s) const {
    return closure_.subsumed(RoleTerm::named(r), RoleTerm::named(s));
  }

  // named transitive roles t with t ⊑_H quantifier-role
  std::vector<std::string> transitive_under(const RoleTerm& quant) const {
    std::vector<std::string> out;
    for (const auto& t : closure_.universe()) {
      if (!t.is_named()) continue;
      if (closure_.transitive(t) && closure_.subsumed(t, quant)) out.push_back(t.name);
    }
    return out;
  }

  void count_node() {
    if (++nodes_created_ > opts_.node_budget)
      throw ResourceLimitError("node budget (" + std::to_string(opts_.node_budget) + ")");
  }
  void count_step() {
    if (++steps_ > opts_.step_budget) throw ResourceLimitError("rule application budget");
  }

  const RoleHierarchyClosure& closure() const { return closure_; }

 private:
  const RoleHierarchyClosure& closure_;
  ReasonerOptions opts_;
  std::vector<ConceptPtr> concepts_;
  std::map<std::string, Cid> index_;
  std::map<Cid, Cid> complement_;
  std::size_t nodes_created_ = 0, steps_ = 0;
};

// ---------------------------------------------------------------------------

struct Event {
  bool is_edge = false;
  int node = -1;
  Cid cid = -1;
  bool nondet = false;
  int to = -1;
  std::string role;
};

struct Node {
  bool alive = true;
  int merged_into = -1;
  bool named = false;
  int parent = -1;
  std::map<Cid, bool> label;  // cid -> nondet
  std::set<Cid> fired;        // generators already applied
};

struct State {
  std::vector<Node> nodes;
  std::map<std::pair<int, int>, std::map<std::string, bool>> edges;
  std::map<int, std::set<int>> out_adj, in_adj;
  std::set<std::pair<int, int>> unequal;
  std::vector<std::tuple<int, int, std::string>> neg_role;  // no edge role' ⊑ role
  std::vector<std::pair<Cid, bool>> globals;                // from forall over the top role
  std::deque<Event> todo;
  std::map<std::string, int> named_node;
  std::map<std::string, bool> named_merge_nondet;
  std::vector<std::pair<int, Cid>> pending_or;
  std::vector<std::pair<int, Cid>> pending_atmost;
};

class Solver {
 public:
  Solver(Context& ctx, std::vector<Cid> gcis) : ctx_(ctx), gcis_(std::move(gcis)) {}

  int find(const State& s, int x) const {
    while (s.nodes[x].merged_into >= 0) x = s.nodes[x].merged_into;
    return x;
  }

  int create_node(State& s, int parent, bool named) {
    ctx_.count_node();
    int id = static_cast<int>(s.nodes.size());
    Node n;
    n.named = named;
    n.parent = parent;
    s.nodes.push_back(std::move(n));
    // Top is kept in every label so filler-membership tests over Top never
    // trigger the choose-rule
    add_label(s, id, ctx_.intern(Concept::top()), false);
    for (Cid g : gcis_) add_label(s, id, g, false);
    for (const auto& [cid, nondet] : s.globals) add_label(s, id, cid, nondet);
    return id;
  }

  int named_node_of(State& s, const std::string& individual) {
    auto it = s.named_node.find(individual);
    if (it != s.named_node.end()) return find(s, it->second);
    int id = create_node(s, -1, true);
    s.named_node[individual] = id;
    s.named_merge_nondet[individual] = false;
    return id;
  }

  void add_label(State& s, int x, Cid cid, bool nondet) {
    x = find(s, x);
    auto& label = s.nodes[x].label;
    auto it = label.find(cid);
    if (it != label.end()) {
      if (it->second && !nondet) it->second = false;  // upgrade to deterministic
      return;
    }
    ConceptPtr c = ctx_.concept_of(cid);
    if (c->kind == ConceptKind::Bottom) throw Clash{};
    // atomic clash detection
    if (c->kind == ConceptKind::Name || c->kind == ConceptKind::Not) {
      Cid comp = ctx_.complement(cid);
      if (label.count(comp)) {
        label.emplace(cid, nondet);
        throw Clash{};
      }
    }
    label.emplace(cid, nondet);
    s.todo.push_back(Event{false, x, cid, nondet, -1, {}});
  }

  void add_edge(State& s, int x, int y, const std::string& role, bool nondet) {
    x = find(s, x);
    y = find(s, y);
    auto& roles = s.edges[{x, y}];
    auto it = roles.find(role);
    if (it != roles.end()) {
      if (it->second && !nondet) it->second = false;
      return;
    }
    roles.emplace(role, nondet);
    s.out_adj[x].insert(y);
    s.in_adj[y].insert(x);
    check_neg_role(s, x, y, role);
    s.todo.push_back(Event{true, x, -1, nondet, y, role});
  }

  void check_neg_role(State& s, int x, int y, const std::string& role) {
    for (const auto& [cx, cy, forbidden] : s.neg_role) {
      if (find(s, cx) == x && find(s, cy) == y && ctx_.sub_role(role, forbidden))
        throw Clash{};
    }
  }

  void add_unequal(State& s, int x, int y) {
    x = find(s, x);
    y = find(s, y);
    if (x == y) throw Clash{};
    s.unequal.insert({std::min(x, y), std::max(x, y)});
  }

  bool are_unequal(const State& s, int x, int y) const {
    return s.unequal.count({std::min(x, y), std::max(x, y)}) != 0;
  }

  void merge_nodes(State& s, int survivor, int victim, bool nondet) {
    survivor = find(s, survivor);
    victim = find(s, victim);
    if (survivor == victim) return;
    // prefer a named representative
    if (!s.nodes[survivor].named && s.nodes[victim].named) std::swap(survivor, victim);
    if (are_unequal(s, survivor, victim)) throw Clash{};

    // relocate inequality constraints first so self-inequality clashes fire
    std::set<std::pair<int, int>> new_unequal;
    for (auto [a, b] : s.unequal) {
      if (a == victim) a = survivor;
      if (b == victim) b = survivor;
      if (a == b) throw Clash{};
      new_unequal.insert({std::min(a, b), std::max(a, b)});
    }
    s.unequal = std::move(new_unequal);

    s.nodes[victim].alive = false;
    s.nodes[victim].merged_into = survivor;

    // relocate edges
    std::vector<std::pair<std::pair<int, int>, std::map<std::string, bool>>> moved;
    for (auto it = s.edges.begin(); it != s.edges.end();) {
      auto [from, to] = it->first;
      if (from == victim || to == victim) {
        moved.push_back(*it);
        s.out_adj[from].erase(to);
        s.in_adj[to].erase(from);
        it = s.edges.erase(it);
      } else {
        ++it;
      }
    }
    for (const auto& [key, roles] : moved) {
      int from = key.first == victim ? survivor : key.first;
      int to = key.second == victim ? survivor : key.second;
      for (const auto& [role, prov] : roles) add_edge(s, from, to, role, prov || nondet);
    }

    for (auto& [cx, cy, role] : s.neg_role) {
      if (cx == victim) cx = survivor;
      if (cy == victim) cy = survivor;
    }
    for (const auto& [key, roles] : s.edges) {
      if (key.first != survivor && key.second != survivor) continue;
      for (const auto& [role, prov] : roles) {
        (void)prov;
        check_neg_role(s, key.first, key.second, role);
      }
    }

    // relocate labels; merged label entries inherit the merge provenance
    auto victim_label = s.nodes[victim].label;
    for (const auto& [cid, prov] : victim_label) add_label(s, survivor, cid, prov || nondet);
    auto victim_fired = s.nodes[victim].fired;
    s.nodes[survivor].fired.insert(victim_fired.begin(), victim_fired.end());

    for (auto& n : s.nodes)
      if (n.parent == victim) n.parent = survivor;
    for (auto& [ind, node] : s.named_node) {
      if (find(s, node) == survivor && node != survivor) {
        // path went through the victim; record the merge provenance
        if (nondet) s.named_merge_nondet[ind] = true;
        node = survivor;
      }
    }
  }

  // -------------------------------------------------------------------------

  void process(State& s, const Event& ev) {
    ctx_.count_step();
    if (ev.is_edge) {
      process_edge(s, find(s, ev.node), find(s, ev.to), ev.role, ev.nondet);
      return;
    }
    int x = find(s, ev.node);
    Cid cid = ev.cid;
    bool prov = s.nodes[x].label.count(cid) ? s.nodes[x].label[cid] : ev.nondet;
    ConceptPtr c = ctx_.concept_of(cid);
    switch (c->kind) {
      case ConceptKind::And:
        add_label(s, x, ctx_.intern(c->child), prov);
        add_label(s, x, ctx_.intern(c->rhs), prov);
        break;
      case ConceptKind::Or:
        s.pending_or.push_back({x, cid});
        break;
      case ConceptKind::Forall: {
        if (c->role.kind == RoleTerm::Kind::Top) {
          Cid filler = ctx_.intern(c->child);
          s.globals.push_back({filler, prov});
          for (int y = 0; y < static_cast<int>(s.nodes.size()); ++y)
            if (s.nodes[y].alive) add_label(s, y, filler, prov);
          break;
        }
        auto out = s.out_adj.find(x);
        if (out == s.out_adj.end()) break;
        for (int y : std::set<int>(out->second)) {
          auto e = s.edges.find({x, y});
          if (e == s.edges.end()) continue;
          for (const auto& [erole, eprov] : std::map<std::string, bool>(e->second))
            propagate_forall(s, x, cid, y, erole, prov || eprov);
        }
        break;
      }
      case ConceptKind::AtMost:
        s.pending_atmost.push_back({x, cid});
        break;
      default:
        break;  // names, negated names, Top handled at insertion; generators scanned later
    }
  }

  void process_edge(State& s, int x, int y, const std::string& role, bool eprov) {
    for (const auto& [cid, lprov] : std::map<Cid, bool>(s.nodes[x].label)) {
      ConceptPtr c = ctx_.concept_of(cid);
      if (c->kind == ConceptKind::Forall && c->role.kind != RoleTerm::Kind::Top)
        propagate_forall(s, x, cid, y, role, lprov || eprov);
    }
  }

  // forall-rule plus the transitivity propagation rule
  void propagate_forall(State& s, int x, Cid forall_cid, int y, const std::string& edge_role,
                        bool prov) {
    (void)x;
    ConceptPtr c = ctx_.concept_of(forall_cid);
    if (!ctx_.sub_role(edge_role, c->role.name)) return;
    add_label(s, y, ctx_.intern(c->child), prov);
    for (const auto& t : ctx_.transitive_under(c->role)) {
      if (!ctx_.sub_role(edge_role, t)) continue;
      add_label(s, y, ctx_.intern(Concept::forall(RoleTerm::named(t), c->child)), prov);
    }
  }

  // -------------------------------------------------------------------------

  // neighbors of x reachable via an edge whose role is subsumed by `role`
  std::vector<std::pair<int, bool>> neighbors(const State& s, int x, const RoleTerm& role) const {
    std::vector<std::pair<int, bool>> out;
    if (role.kind == RoleTerm::Kind::Top) {
      for (int y = 0; y < static_cast<int>(s.nodes.size()); ++y)
        if (s.nodes[y].alive) out.push_back({y, false});
      return out;
    }
    auto adj = s.out_adj.find(x);
    if (adj == s.out_adj.end()) return out;
    for (int y : adj->second) {
      auto e = s.edges.find({x, y});
      if (e == s.edges.end()) continue;
      bool found = false, prov = true;
      for (const auto& [erole, eprov] : e->second) {
        if (ctx_.sub_role(erole, role.name)) {
          found = true;
          prov = prov && eprov;
        }
      }
      if (found) out.push_back({y, prov});
    }
    return out;
  }

  void saturate(State& s) {
    for (;;) {
      while (!s.todo.empty()) {
        Event ev = s.todo.front();
        s.todo.pop_front();
        process(s, ev);
      }
      bool progressed = false;

      // resolve satisfied / falsified / forced disjunctions
      std::vector<std::pair<int, Cid>> keep_or;
      for (auto [node, cid] : s.pending_or) {
        int x = find(s, node);
        ConceptPtr c = ctx_.concept_of(cid);
        Cid a = ctx_.intern(c->child), b = ctx_.intern(c->rhs);
        const auto& label = s.nodes[x].label;
        if (label.count(a) || label.count(b)) continue;
        bool a_dead = label.count(ctx_.complement(a)) != 0;
        bool b_dead = label.count(ctx_.complement(b)) != 0;
        bool or_prov = label.count(cid) ? label.at(cid) : false;
        if (a_dead && b_dead) throw Clash{};
        if (a_dead || b_dead) {
          Cid forced = a_dead ? b : a;
          bool dead_prov = label.at(ctx_.complement(a_dead ? a : b));
          add_label(s, x, forced, or_prov || dead_prov);
          progressed = true;
          continue;
        }
        keep_or.push_back({x, cid});
      }
      s.pending_or = std::move(keep_or);

      // forced at-most merges (exactly one mergeable pair)
      for (auto [node, cid] : std::vector<std::pair<int, Cid>>(s.pending_atmost)) {
        int x = find(s, node);
        if (!s.nodes[x].label.count(cid)) continue;
        AtMostStatus st = atmost_status(s, x, cid);
        if (st.kind == AtMostStatus::Kind::ForcedMerge) {
          merge_nodes(s, st.merge_a, st.merge_b, st.premise_nondet);
          progressed = true;
          break;  // state changed; rescan
        }
        if (st.kind == AtMostStatus::Kind::Clash) throw Clash{};
      }

      if (!progressed && s.todo.empty()) return;
    }
  }

  struct AtMostStatus {
    enum class Kind { Satisfied, NeedsChoose, NeedsMergeChoice, ForcedMerge, Clash };
    Kind kind = Kind::Satisfied;
    int choose_node = -1;
    Cid filler = -1, neg_filler = -1;
    std::vector<std::pair<int, int>> merge_pairs;
    int merge_a = -1, merge_b = -1;
    bool premise_nondet = false;
  };

  AtMostStatus atmost_status(const State& s, int x, Cid cid) {
    AtMostStatus st;
    ConceptPtr c = ctx_.concept_of(cid);
    Cid filler = ctx_.intern(c->child);
    Cid negf = ctx_.complement(filler);
    bool base_prov = s.nodes[x].label.at(cid);
    auto ns = neighbors(s, x, c->role);
    std::vector<std::pair<int, bool>> with_filler;
    for (auto [y, eprov] : ns) {
      const auto& ylabel = s.nodes[y].label;
      if (ylabel.count(filler)) {
        with_filler.push_back({y, eprov || ylabel.at(filler)});
      } else if (!ylabel.count(negf)) {
        st.kind = AtMostStatus::Kind::NeedsChoose;
        st.choose_node = y;
        st.filler = filler;
        st.neg_filler = negf;
        return st;
      }
    }
    if (with_filler.size() <= c->cardinality) return st;  // satisfied
    for (std::size_t i = 0; i < with_filler.size(); ++i)
      for (std::size_t j = i + 1; j < with_filler.size(); ++j)
        if (!are_unequal(s, with_filler[i].first, with_filler[j].first))
          st.merge_pairs.push_back({with_filler[i].first, with_filler[j].first});
    if (st.merge_pairs.empty()) {
      st.kind = AtMostStatus::Kind::Clash;
      return st;
    }
    bool premise = base_prov;
    for (auto [y, p] : with_filler) premise = premise || p;
    st.premise_nondet = premise || st.merge_pairs.size() > 1;
    st.merge_a = st.merge_pairs.front().first;
    st.merge_b = st.merge_pairs.front().second;
    st.kind = st.merge_pairs.size() == 1 ? AtMostStatus::Kind::ForcedMerge
                                         : AtMostStatus::Kind::NeedsMergeChoice;
    return st;
  }

  // -------------------------------------------------------------------------

  bool blocked(const State& s, int x) const {
    if (s.nodes[x].named) return false;
    auto keyset = [&](int n) {
      std::set<Cid> out;
      for (const auto& [cid, _] : s.nodes[n].label) out.insert(cid);
      return out;
    };
    std::set<Cid> mine = keyset(x);
    int anc = s.nodes[x].parent;
    while (anc >= 0) {
      anc = find(s, anc);
      if (!s.nodes[anc].named) {
        std::set<Cid> theirs = keyset(anc);
        if (std::includes(theirs.begin(), theirs.end(), mine.begin(), mine.end()))
          return true;
      }
      anc = s.nodes[anc].parent;
    }
    return false;
  }

  // fires the first applicable generating rule; returns false when none
  bool apply_one_generator(State& s) {
    for (int x = 0; x < static_cast<int>(s.nodes.size()); ++x) {
      if (!s.nodes[x].alive) continue;
      for (const auto& [cid, prov] : std::map<Cid, bool>(s.nodes[x].label)) {
        ConceptPtr c = ctx_.concept_of(cid);
        if (c->kind != ConceptKind::Exists && c->kind != ConceptKind::AtLeast) continue;
        if (s.nodes[x].fired.count(cid)) continue;
        if (c->kind == ConceptKind::AtLeast && c->cardinality == 0) {
          s.nodes[x].fired.insert(cid);
          continue;
        }
        if (blocked(s, x)) continue;
        Cid filler = ctx_.intern(c->child);
        auto ns = neighbors(s, x, c->role);
        if (c->kind == ConceptKind::Exists) {
          bool witnessed = false;
          for (auto [y, _] : ns)
            if (s.nodes[y].label.count(filler)) witnessed = true;
          s.nodes[x].fired.insert(cid);
          if (witnessed) continue;
          int y = create_node(s, x, false);
          if (c->role.kind != RoleTerm::Kind::Top) add_edge(s, x, y, c->role.name, prov);
          add_label(s, y, filler, prov);
          return true;
        }
        // at-least: ensure n pairwise-unequal witnesses
        std::vector<int> witnesses;
        for (auto [y, _] : ns)
          if (s.nodes[y].label.count(filler)) witnesses.push_back(y);
        bool enough = false;
        if (witnesses.size() >= c->cardinality) {
          // check for a pairwise-unequal subset of size n (greedy suffices here)
          std::vector<int> chosen;
          for (int y : witnesses) {
            bool ok = true;
            for (int z : chosen)
              if (!are_unequal(s, y, z)) ok = false;
            if (ok) chosen.push_back(y);
          }
          enough = chosen.size() >= c->cardinality;
        }
        s.nodes[x].fired.insert(cid);
        if (enough) continue;
        std::vector<int> fresh;
        for (unsigned i = 0; i < c->cardinality; ++i) {
          int y = create_node(s, x, false);
          if (c->role.kind != RoleTerm::Kind::Top) add_edge(s, x, y, c->role.name, prov);
          add_label(s, y, filler, prov);
          fresh.push_back(y);
        }
        for (std::size_t i = 0; i < fresh.size(); ++i)
          for (std::size_t j = i + 1; j < fresh.size(); ++j)
            add_unequal(s, fresh[i], fresh[j]);
        return true;
      }
    }
    return false;
  }

  // -------------------------------------------------------------------------

  bool search(State& s, PreModel* out, bool want_premodel) {
    for (;;) {
      try {
        saturate(s);
      } catch (const Clash&) {
        return false;
      }

      // disjunction choice
      for (auto [node, cid] : s.pending_or) {
        int x = find(s, node);
        ConceptPtr c = ctx_.concept_of(cid);
        Cid alts[2] = {ctx_.intern(c->child), ctx_.intern(c->rhs)};
        const auto& label = s.nodes[x].label;
        if (label.count(alts[0]) || label.count(alts[1])) continue;
        for (Cid alt : alts) {
          State branch = s;
          try {
            add_label(branch, x, alt, true);
          } catch (const Clash&) {
            continue;
          }
          if (search(branch, out, want_premodel)) {
            s = std::move(branch);
            return true;
          }
        }
        return false;
      }

      // choose-rule and at-most merge choices
      for (auto [node, cid] : s.pending_atmost) {
        int x = find(s, node);
        if (!s.nodes[x].label.count(cid)) continue;
        AtMostStatus st = atmost_status(s, x, cid);
        if (st.kind == AtMostStatus::Kind::Satisfied) continue;
        if (st.kind == AtMostStatus::Kind::NeedsChoose) {
          for (Cid alt : {st.filler, st.neg_filler}) {
            State branch = s;
            try {
              add_label(branch, st.choose_node, alt, true);
            } catch (const Clash&) {
              continue;
            }
            if (search(branch, out, want_premodel)) {
              s = std::move(branch);
              return true;
            }
          }
          return false;
        }
        // merge choice (forced merges were consumed by saturate)
        for (auto [a, b] : st.merge_pairs) {
          State branch = s;
          try {
            merge_nodes(branch, a, b, st.premise_nondet);
          } catch (const Clash&) {
            continue;
          }
          if (search(branch, out, want_premodel)) {
            s = std::move(branch);
            return true;
          }
        }
        return false;
      }

      if (apply_one_generator(s)) continue;

      if (want_premodel && out) extract(s, *out);
      return true;
    }
  }

  void extract(const State& s, PreModel& pm) {
    pm = PreModel{};
    // stable node names: lexicographically smallest individual per node
    std::map<int, std::string> node_name;
    for (const auto& [ind, node] : s.named_node) {
      int rep = find(s, node);
      auto it = node_name.find(rep);
      if (it == node_name.end() || ind < it->second) node_name[rep] = ind;
    }
    int fresh_id = 0;
    for (int x = 0; x < static_cast<int>(s.nodes.size()); ++x) {
      if (!s.nodes[x].alive) continue;
      if (!node_name.count(x)) node_name[x] = "_:" + std::to_string(fresh_id++);
    }
    for (const auto& [node, name] : node_name) {
      pm.nodes.insert(name);
      std::vector<PreModel::ConceptEntry> entries;
      for (const auto& [cid, nondet] : s.nodes[node].label) {
        ConceptPtr c = ctx_.concept_of(cid);
        if (c->kind == ConceptKind::Name && c->name.rfind(kFreshPrefix, 0) != 0)
          entries.push_back({c->name, nondet});
      }
      std::sort(entries.begin(), entries.end(),
                [](const auto& a, const auto& b) { return a.concept_name < b.concept_name; });
      pm.concept_labels[name] = std::move(entries);
    }
    for (const auto& [key, roles] : s.edges) {
      auto a = node_name.find(find(s, key.first));
      auto b = node_name.find(find(s, key.second));
      if (a == node_name.end() || b == node_name.end()) continue;
      std::vector<PreModel::RoleEntry> entries;
      for (const auto& [role, nondet] : roles) entries.push_back({role, nondet});
      std::sort(entries.begin(), entries.end(),
                [](const auto& x, const auto& y) { return x.role < y.role; });
      auto& slot = pm.edge_labels[{a->second, b->second}];
      for (auto& e : entries) {
        bool found = false;
        for (auto& have : slot)
          if (have.role == e.role) {
            have.nondet = have.nondet && e.nondet;
            found = true;
          }
        if (!found) slot.push_back(e);
      }
    }
    for (const auto& [ind, node] : s.named_node) {
      pm.named_individuals.insert(ind);
      pm.merge_map[ind] = node_name.at(find(s, node));
      auto it = s.named_merge_nondet.find(ind);
      pm.merge_nondet[ind] = it != s.named_merge_nondet.end() && it->second;
    }
  }

 private:
  Context& ctx_;
  std::vector<Cid> gcis_;
};

}  // namespace

// ---------------------------------------------------------------------------

TableauResult run_tableau(const Ontology& o, const std::vector<Axiom>& extra,
                          const RoleHierarchyClosure& closure, const ReasonerOptions& opts,
                          bool want_premodel) {
  Context ctx(closure, opts);

  std::vector<Cid> gcis;
  auto add_gci = [&](const ConceptPtr& lhs, const ConceptPtr& rhs) {
    ConceptPtr g = Concept::disj(Concept::negation(lhs), rhs);
    gcis.push_back(ctx.intern_input(g));
  };
  for (const auto& ax : o.tbox) add_gci(ax.lhs, ax.rhs);
  for (const auto& ax : extra)
    if (ax.kind == AxiomKind::SubClass) add_gci(ax.lhs, ax.rhs);
  // role inclusions among the extra axioms are not supported as test axioms;
  // entailment encodings never produce them
  Solver solver(ctx, gcis);

  State s;
  TableauResult result;

  try {
    // upfront union-find over asserted equalities (deterministic merges)
    std::map<std::string, std::string> uf;
    std::function<std::string(const std::string&)> uf_find =
        [&](const std::string& a) -> std::string {
      auto it = uf.find(a);
      if (it == uf.end() || it->second == a) return a;
      return it->second = uf_find(it->second);
    };
    std::vector<const Axiom*> assertions;
    for (const auto& ax : o.abox) assertions.push_back(&ax);
    for (const auto& ax : extra)
      if (ax.kind != AxiomKind::SubClass) assertions.push_back(&ax);
    for (const Axiom* ax : assertions) {
      if (ax->kind != AxiomKind::Equality) continue;
      std::string ra = uf_find(ax->individuals[0].name);
      std::string rb = uf_find(ax->individuals[1].name);
      if (ra != rb) uf[std::max(ra, rb)] = std::min(ra, rb);
    }

    // one node per equality class; every signature individual gets a node
    std::set<std::string> individuals = o.sig.individuals;
    for (const Axiom* ax : assertions)
      for (const auto& t : ax->individuals) individuals.insert(t.name);
    std::map<std::string, int> class_node;
    for (const auto& ind : individuals) {
      std::string rep = uf_find(ind);
      auto it = class_node.find(rep);
      int node;
      if (it == class_node.end()) {
        node = solver.named_node_of(s, rep);
        class_node[rep] = node;
      } else {
        node = it->second;
      }
      s.named_node[ind] = node;
      s.named_merge_nondet[ind] = false;
    }

    for (const Axiom* ax : assertions) {
      switch (ax->kind) {
        case AxiomKind::ClassAssertion: {
          int n = solver.named_node_of(s, ax->individuals[0].name);
          solver.add_label(s, n, ctx.intern_input(ax->lhs), false);
          break;
        }
        case AxiomKind::RoleAssertion: {
          if (ax->role.kind == RoleTerm::Kind::Top) break;  // tautological
          if (ax->role.kind == RoleTerm::Kind::Bottom) throw Clash{};
          int a = solver.named_node_of(s, ax->individuals[0].name);
          int b = solver.named_node_of(s, ax->individuals[1].name);
          solver.add_edge(s, a, b, ax->role.name, false);
          break;
        }
        case AxiomKind::NegRoleAssertion: {
          if (ax->role.kind == RoleTerm::Kind::Bottom) break;  // tautological
          if (ax->role.kind == RoleTerm::Kind::Top) throw Clash{};
          int a = solver.named_node_of(s, ax->individuals[0].name);
          int b = solver.named_node_of(s, ax->individuals[1].name);
          s.neg_role.push_back({a, b, ax->role.name});
          auto e = s.edges.find({a, b});
          if (e != s.edges.end())
            for (const auto& [role, prov] : e->second) {
              (void)prov;
              if (ctx.sub_role(role, ax->role.name)) throw Clash{};
            }
          break;
        }
        case AxiomKind::Equality:
          break;  // handled upfront
        case AxiomKind::Inequality: {
          int a = solver.named_node_of(s, ax->individuals[0].name);
          int b = solver.named_node_of(s, ax->individuals[1].name);
          solver.add_unequal(s, a, b);
          break;
        }
        default:
          break;
      }
    }
  } catch (const Clash&) {
    result.consistent = false;
    return result;
  }

  PreModel pm;
  result.consistent = solver.search(s, &pm, want_premodel);
  if (result.consistent && want_premodel) result.premodel = std::move(pm);
  return result;
}

}  // namespace dlq::internal
