#include "dlq/parser.hpp"

#include <cctype>
#include <sstream>

#include "dlq/error.hpp"
#include "dlq/hierarchy.hpp"

namespace dlq {

namespace {

struct Token {
  enum class Kind { Ident, Var, Number, LParen, RParen, End };
  Kind kind;
  std::string text;
  unsigned long number = 0;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_space();
    tok_ = Token{Token::Kind::End, "", 0, line_, col_};
    if (pos_ >= src_.size()) return;
    char c = src_[pos_];
    if (c == '(') {
      tok_ = {Token::Kind::LParen, "(", 0, line_, col_};
      bump();
      return;
    }
    if (c == ')') {
      tok_ = {Token::Kind::RParen, ")", 0, line_, col_};
      bump();
      return;
    }
    if (c == '{' || c == '}')
      throw ParseError("unsupported construct: nominal (enumeration syntax)", line_, col_);
    int line = line_, col = col_;
    if (c == '?') {
      bump();
      std::string name = read_word();
      if (name.empty()) throw ParseError("expected variable name after '?'", line, col);
      tok_ = {Token::Kind::Var, name, 0, line, col};
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string word = read_word();
      // all-digit word is a cardinality, otherwise an identifier like 9thing
      bool digits = true;
      for (char w : word)
        if (!std::isdigit(static_cast<unsigned char>(w))) digits = false;
      if (digits) {
        tok_ = {Token::Kind::Number, word, std::stoul(word), line, col};
        return;
      }
      tok_ = {Token::Kind::Ident, word, 0, line, col};
      return;
    }
    std::string word = read_word();
    if (word.empty())
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    tok_ = {Token::Kind::Ident, word, 0, line, col};
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  std::string read_word() {
    std::string out;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' ||
          c == '#' || c == '{' || c == '}' || c == '?')
        break;
      out += c;
      bump();
    }
    return out;
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

const char* kUnsupportedKeywords[][2] = {
    {"oneOf", "nominal"},
    {"ObjectOneOf", "nominal"},
    {"hasSelf", "Self concept"},
    {"ObjectHasSelf", "Self concept"},
    {"Self", "Self concept"},
    {"chain", "role chain"},
    {"ObjectPropertyChain", "role chain"},
    {"SubObjectPropertyChainOf", "role chain"},
    {"DataSomeValuesFrom", "data property"},
    {"DataAllValuesFrom", "data property"},
    {"DataPropertyAssertion", "data property"},
};

class Parser {
 public:
  Parser(std::string_view src, bool allow_vars) : lex_(src), allow_vars_(allow_vars) {}

  std::vector<Axiom> parse_axioms() {
    std::vector<Axiom> out;
    while (lex_.peek().kind != Token::Kind::End) {
      auto axioms = parse_axiom();
      out.insert(out.end(), axioms.begin(), axioms.end());
    }
    return out;
  }

  ConceptPtr parse_single_concept() {
    ConceptPtr c = parse_concept();
    expect_end();
    return c;
  }

  Axiom parse_single_axiom() {
    auto axioms = parse_axiom();
    expect_end();
    if (axioms.size() != 1)
      throw ParseError("expected exactly one axiom", 1, 1);
    return axioms.front();
  }

 private:
  void expect_end() {
    const Token& t = lex_.peek();
    if (t.kind != Token::Kind::End)
      throw ParseError("unexpected trailing input '" + t.text + "'", t.line, t.col);
  }

  Token expect(Token::Kind k, const char* what) {
    Token t = lex_.next();
    if (t.kind != k)
      throw ParseError(std::string("expected ") + what + ", got '" + t.text + "'",
                       t.line, t.col);
    return t;
  }

  [[noreturn]] void fail_unsupported(const Token& t) {
    for (const auto& [kw, construct] : kUnsupportedKeywords)
      if (t.text == kw)
        throw ParseError(std::string("unsupported construct: ") + construct, t.line,
                         t.col);
    throw ParseError("unknown keyword '" + t.text + "'", t.line, t.col);
  }

  std::vector<Axiom> parse_axiom() {
    Token head = expect(Token::Kind::Ident, "axiom keyword");
    expect(Token::Kind::LParen, "'('");
    std::vector<Axiom> out;
    if (head.text == "SubClassOf") {
      ConceptPtr l = parse_concept();
      ConceptPtr r = parse_concept();
      out.push_back(Axiom::sub_class(std::move(l), std::move(r)));
    } else if (head.text == "EquivalentClasses") {
      std::vector<ConceptPtr> cs;
      cs.push_back(parse_concept());
      cs.push_back(parse_concept());
      while (lex_.peek().kind != Token::Kind::RParen) cs.push_back(parse_concept());
      for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
        out.push_back(Axiom::sub_class(cs[i], cs[i + 1]));
        out.push_back(Axiom::sub_class(cs[i + 1], cs[i]));
      }
    } else if (head.text == "SubRoleOf") {
      RoleTerm l = parse_role();
      RoleTerm r = parse_role();
      out.push_back(Axiom::sub_role(std::move(l), std::move(r)));
    } else if (head.text == "Trans") {
      out.push_back(Axiom::transitive(parse_role()));
    } else if (head.text == "ClassAssertion") {
      ConceptPtr c = parse_concept();
      out.push_back(Axiom::class_assertion(std::move(c), parse_individual()));
    } else if (head.text == "RoleAssertion") {
      RoleTerm r = parse_role();
      IndividualTerm a = parse_individual();
      IndividualTerm b = parse_individual();
      out.push_back(Axiom::role_assertion(std::move(r), std::move(a), std::move(b)));
    } else if (head.text == "NegRoleAssertion") {
      RoleTerm r = parse_role();
      IndividualTerm a = parse_individual();
      IndividualTerm b = parse_individual();
      out.push_back(Axiom::neg_role_assertion(std::move(r), std::move(a), std::move(b)));
    } else if (head.text == "SameAs") {
      std::vector<IndividualTerm> ts;
      ts.push_back(parse_individual());
      ts.push_back(parse_individual());
      while (lex_.peek().kind != Token::Kind::RParen) ts.push_back(parse_individual());
      out.push_back(Axiom::equality(std::move(ts)));
    } else if (head.text == "DifferentFrom") {
      IndividualTerm a = parse_individual();
      IndividualTerm b = parse_individual();
      out.push_back(Axiom::inequality(std::move(a), std::move(b)));
    } else {
      fail_unsupported(head);
    }
    expect(Token::Kind::RParen, "')'");
    return out;
  }

  ConceptPtr parse_concept() {
    Token t = lex_.next();
    if (t.kind == Token::Kind::Var) {
      if (!allow_vars_)
        throw ParseError("variable ?" + t.text + " not allowed in an ontology", t.line,
                         t.col);
      return Concept::var(t.text);
    }
    if (t.kind != Token::Kind::Ident)
      throw ParseError("expected concept, got '" + t.text + "'", t.line, t.col);
    if (t.text == "Top") return Concept::top();
    if (t.text == "Bottom") return Concept::bottom();
    if (lex_.peek().kind != Token::Kind::LParen) {
      check_name(t);
      return Concept::named(t.text);
    }
    lex_.next();  // '('
    ConceptPtr result;
    if (t.text == "not") {
      result = Concept::negation(parse_concept());
    } else if (t.text == "and" || t.text == "or") {
      std::vector<ConceptPtr> cs;
      cs.push_back(parse_concept());
      cs.push_back(parse_concept());
      while (lex_.peek().kind != Token::Kind::RParen) cs.push_back(parse_concept());
      result = cs.back();
      for (auto it = cs.rbegin() + 1; it != cs.rend(); ++it)
        result = t.text == "and" ? Concept::conj(*it, result) : Concept::disj(*it, result);
    } else if (t.text == "some" || t.text == "all") {
      RoleTerm r = parse_role();
      ConceptPtr filler = parse_concept();
      result = t.text == "some" ? Concept::exists(std::move(r), std::move(filler))
                                : Concept::forall(std::move(r), std::move(filler));
    } else if (t.text == "atLeast" || t.text == "atMost" || t.text == "exactly") {
      Token n = expect(Token::Kind::Number, "cardinality");
      RoleTerm r = parse_role();
      ConceptPtr filler = parse_concept();
      if (t.text == "atLeast") {
        result = Concept::at_least(static_cast<unsigned>(n.number), r, filler);
      } else if (t.text == "atMost") {
        result = Concept::at_most(static_cast<unsigned>(n.number), r, filler);
      } else {
        // exactly(n r C) desugars to and(atLeast(n r C) atMost(n r C))
        result = Concept::conj(Concept::at_least(static_cast<unsigned>(n.number), r, filler),
                               Concept::at_most(static_cast<unsigned>(n.number), r, filler));
      }
    } else {
      fail_unsupported(t);
    }
    expect(Token::Kind::RParen, "')'");
    return result;
  }

  RoleTerm parse_role() {
    Token t = lex_.next();
    if (t.kind == Token::Kind::Var) {
      if (!allow_vars_)
        throw ParseError("variable ?" + t.text + " not allowed in an ontology", t.line,
                         t.col);
      return RoleTerm::var(t.text);
    }
    if (t.kind != Token::Kind::Ident)
      throw ParseError("expected role, got '" + t.text + "'", t.line, t.col);
    if (t.text == "TopRole") return RoleTerm::top();
    if (t.text == "BottomRole") return RoleTerm::bottom();
    if (t.text == "inv") {
      expect(Token::Kind::LParen, "'('");
      Token inner = expect(Token::Kind::Ident, "role name");
      check_name(inner);
      expect(Token::Kind::RParen, "')'");
      return RoleTerm::inverse(inner.text);
    }
    check_name(t);
    return RoleTerm::named(t.text);
  }

  IndividualTerm parse_individual() {
    Token t = lex_.next();
    if (t.kind == Token::Kind::Var) {
      if (!allow_vars_)
        throw ParseError("variable ?" + t.text + " not allowed in an ontology", t.line,
                         t.col);
      return IndividualTerm::var(t.text);
    }
    if (t.kind != Token::Kind::Ident)
      throw ParseError("expected individual, got '" + t.text + "'", t.line, t.col);
    check_name(t);
    return IndividualTerm::named(t.text);
  }

  void check_name(const Token& t) {
    static const std::set<std::string> reserved = {
        "Top",  "Bottom", "TopRole", "BottomRole", "not",     "and",
        "or",   "some",   "all",     "atLeast",    "atMost",  "exactly",
        "inv",  "Trans",  "SameAs",  "SubClassOf", "SubRoleOf"};
    if (reserved.count(t.text))
      throw ParseError("reserved word '" + t.text + "' used as a name", t.line, t.col);
    for (const auto& [kw, construct] : kUnsupportedKeywords)
      if (t.text == kw)
        throw ParseError(std::string("unsupported construct: ") + construct, t.line,
                         t.col);
  }

  Lexer lex_;
  bool allow_vars_;
};

void check_signature_disjoint(const Signature& sig) {
  for (const auto& c : sig.concepts)
    if (sig.roles.count(c) || sig.individuals.count(c))
      throw UnsupportedConstructError("name '" + c + "' used in two sorts");
  for (const auto& r : sig.roles)
    if (sig.individuals.count(r))
      throw UnsupportedConstructError("name '" + r + "' used in two sorts");
}

void check_no_inverse(const ConceptPtr& c) {
  if (!c) return;
  if (c->role.kind == RoleTerm::Kind::Inverse)
    throw UnsupportedConstructError("inverse role " + c->role.text() + " in an ontology");
  check_no_inverse(c->child);
  check_no_inverse(c->rhs);
}

}  // namespace

Ontology parse_ontology(std::string_view text) {
  Parser p(text, /*allow_vars=*/false);
  std::vector<Axiom> axioms = p.parse_axioms();
  Ontology o;
  for (auto& ax : axioms) {
    check_no_inverse(ax.lhs);
    check_no_inverse(ax.rhs);
    for (const RoleTerm* r : {&ax.role, &ax.role2})
      if (r->kind == RoleTerm::Kind::Inverse)
        throw UnsupportedConstructError("inverse role " + r->text() + " in an ontology");
    if (ax.kind == AxiomKind::Equality && ax.individuals.size() > 2) {
      // n-ary SameAs expands to a binary chain
      for (std::size_t i = 0; i + 1 < ax.individuals.size(); ++i)
        o.add(Axiom::equality({ax.individuals[i], ax.individuals[i + 1]}));
      continue;
    }
    o.add(std::move(ax));
  }
  check_signature_disjoint(o.sig);
  auto violations = check_simplicity(o);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw UnsupportedConstructError("number restriction " + v.restriction_text +
                                    " over non-simple role " + v.role_text + " in " +
                                    v.axiom_text);
  }
  return o;
}

Query parse_query(std::string_view text) {
  Parser p(text, /*allow_vars=*/true);
  std::vector<Axiom> axioms = p.parse_axioms();
  if (axioms.empty()) throw ParseError("empty query", 1, 1);
  Query q;
  for (auto& at : axioms) {
    if (at.kind == AxiomKind::Equality && at.individuals.size() > 2) {
      // cost functions are only defined for binary equality; chain eagerly
      for (std::size_t i = 0; i + 1 < at.individuals.size(); ++i)
        q.add(Axiom::equality({at.individuals[i], at.individuals[i + 1]}));
      continue;
    }
    q.add(std::move(at));
  }
  check_signature_disjoint(q.constants);
  // a query name may not reuse a variable sort slot; vars are checked in add()
  return q;
}

ConceptPtr parse_concept_text(std::string_view text, bool allow_variables) {
  Parser p(text, allow_variables);
  return p.parse_single_concept();
}

Axiom parse_template_text(std::string_view text) {
  Parser p(text, /*allow_vars=*/true);
  return p.parse_single_axiom();
}

std::string serialize_ontology(const Ontology& o) {
  std::ostringstream os;
  for (const auto& ax : o.all_axioms()) os << ax.text() << "\n";
  return os.str();
}

}  // namespace dlq
