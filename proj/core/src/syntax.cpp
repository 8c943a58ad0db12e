#include "dlproof/syntax.hpp"

#include <optional>

#include "dlproof/error.hpp"

namespace dlproof {

namespace {

enum class Tok { Word, Open, Close, End };

struct Token {
  Tok type;
  std::string_view text;
  std::size_t line;
  std::size_t col;
};

bool isWordChar(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
         c == '_' || c == '.' || c == '-' || c == ':';
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skipBlank();
    Token t{Tok::End, {}, line_, col_};
    if (pos_ >= src_.size()) return t;
    char c = src_[pos_];
    if (c == '(' || c == ')') {
      t.type = c == '(' ? Tok::Open : Tok::Close;
      t.text = src_.substr(pos_, 1);
      advance();
      return t;
    }
    if (!isWordChar(c)) throw SyntaxError(line_, col_, "name, '(' or ')'");
    std::size_t start = pos_;
    while (pos_ < src_.size() && isWordChar(src_[pos_])) advance();
    t.type = Tok::Word;
    t.text = src_.substr(start, pos_ - start);
    return t;
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(src_[pos_]) & 0xC0) != 0x80) {
      ++col_;
    }
    ++pos_;
  }

  void skipBlank() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) { shift(); }

  bool atEnd() const { return cur_.type == Tok::End; }

  Axiom axiom() {
    Token head = expectWord("SubClassOf or SubObjectPropertyOf");
    if (head.text == "SubClassOf") {
      expectOpen();
      auto args = conceptArgs(2, 2);
      return Axiom::inclusion(args[0], args[1]);
    }
    if (head.text == "SubObjectPropertyOf") {
      expectOpen();
      RoleName sub = role();
      RoleName sup = role();
      expectClose();
      return Axiom::roleInclusion(sub, sup);
    }
    throw SyntaxError(head.line, head.col, "SubClassOf or SubObjectPropertyOf");
  }

  Concept conceptExpr() {
    Token t = expectWord("ConceptExpr");
    if (t.text == "owl:Thing") return Concept::top();
    if (t.text == "owl:Nothing") return Concept::bottom();
    if (t.text == "ObjectIntersectionOf" || t.text == "ObjectUnionOf") {
      expectOpen();
      auto args = conceptArgs(2, std::nullopt);
      return t.text == "ObjectIntersectionOf" ? Concept::conjunction(std::move(args))
                                              : Concept::disjunction(std::move(args));
    }
    if (t.text == "ObjectComplementOf") {
      expectOpen();
      auto args = conceptArgs(1, 1);
      return Concept::negation(args[0]);
    }
    if (t.text == "ObjectSomeValuesFrom" || t.text == "ObjectAllValuesFrom") {
      expectOpen();
      RoleName r = role();
      auto args = conceptArgs(1, 1);
      return t.text == "ObjectSomeValuesFrom" ? Concept::exists(r, args[0])
                                              : Concept::forall(r, args[0]);
    }
    if (isKeyword(t.text) || !isValidIdentifier(t.text)) {
      throw SyntaxError(t.line, t.col, "ConceptExpr");
    }
    return Concept::atomic(ConceptName(t.text));
  }

  void expectEnd() {
    if (!atEnd()) throw SyntaxError(cur_.line, cur_.col, "end of input");
  }

 private:
  static bool isKeyword(std::string_view w) {
    return w == "SubClassOf" || w == "SubObjectPropertyOf" || w == "ObjectIntersectionOf" ||
           w == "ObjectUnionOf" || w == "ObjectComplementOf" || w == "ObjectSomeValuesFrom" ||
           w == "ObjectAllValuesFrom" || w == "owl:Thing" || w == "owl:Nothing";
  }

  void shift() { cur_ = lex_.next(); }

  Token expectWord(const char* what) {
    if (cur_.type != Tok::Word) throw SyntaxError(cur_.line, cur_.col, what);
    Token t = cur_;
    shift();
    return t;
  }

  void expectOpen() {
    if (cur_.type != Tok::Open) throw SyntaxError(cur_.line, cur_.col, "'('");
    shift();
  }

  void expectClose() {
    if (cur_.type != Tok::Close) throw SyntaxError(cur_.line, cur_.col, "')'");
    shift();
  }

  RoleName role() {
    Token t = expectWord("role name");
    if (isKeyword(t.text) || !isValidIdentifier(t.text)) {
      throw SyntaxError(t.line, t.col, "role name");
    }
    return RoleName(t.text);
  }

  // Parses concepts up to the closing parenthesis.
  std::vector<Concept> conceptArgs(std::size_t min, std::optional<std::size_t> max) {
    std::vector<Concept> args;
    for (;;) {
      if (cur_.type == Tok::Close) {
        if (args.size() < min) throw SyntaxError(cur_.line, cur_.col, "ConceptExpr");
        shift();
        return args;
      }
      if (max && args.size() == *max) throw SyntaxError(cur_.line, cur_.col, "')'");
      if (cur_.type != Tok::Word) {
        throw SyntaxError(cur_.line, cur_.col, "ConceptExpr or ')'");
      }
      args.push_back(conceptExpr());
    }
  }

  Lexer lex_;
  Token cur_{};
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Ontology parseOntology(std::string_view text, std::string name) {
  Parser p(text);
  Ontology o(std::move(name));
  while (!p.atEnd()) o.add(p.axiom());
  return o;
}

Axiom parseAxiom(std::string_view text) {
  Parser p(text);
  Axiom a = p.axiom();
  p.expectEnd();
  return a;
}

Concept parseConcept(std::string_view text) {
  Parser p(text);
  Concept c = p.conceptExpr();
  p.expectEnd();
  return c;
}

Signature parseSignature(std::string_view text) {
  Signature sig;
  std::size_t lineNo = 0;
  while (!text.empty()) {
    ++lineNo;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    bool isRole = false;
    if (line.starts_with("role:")) {
      isRole = true;
      line = trim(line.substr(5));
    } else if (line.starts_with("concept:")) {
      line = trim(line.substr(8));
    }
    if (!isValidIdentifier(line)) throw SyntaxError(lineNo, 1, "name");
    if (isRole) {
      sig.roles.insert(RoleName(line));
    } else {
      sig.concepts.insert(ConceptName(line));
    }
  }
  return sig;
}

namespace {

std::string pretty(const Concept& c);

std::string prettyOperand(const Concept& c, ConceptKind parent) {
  bool wrap = (c.is(ConceptKind::And) || c.is(ConceptKind::Or)) && !c.is(parent);
  return wrap ? "(" + pretty(c) + ")" : pretty(c);
}

std::string pretty(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Top: return "⊤";
    case ConceptKind::Bottom: return "⊥";
    case ConceptKind::Atomic: return c.name().str();
    case ConceptKind::Not: return "¬" + prettyOperand(c.sub(), ConceptKind::Not);
    case ConceptKind::And:
    case ConceptKind::Or: {
      std::string out;
      const char* sep = c.is(ConceptKind::And) ? " ⊓ " : " ⊔ ";
      for (std::size_t i = 0; i < c.operands().size(); ++i) {
        if (i) out += sep;
        out += prettyOperand(c.operands()[i], c.kind());
      }
      return out;
    }
    case ConceptKind::Exists:
      return "∃" + c.role().str() + "." + prettyOperand(c.sub(), ConceptKind::Exists);
    case ConceptKind::Forall:
      return "∀" + c.role().str() + "." + prettyOperand(c.sub(), ConceptKind::Forall);
  }
  return {};
}

}  // namespace

std::string render(const Concept& c, RenderStyle style) {
  return style == RenderStyle::Functional ? c.key() : pretty(c);
}

std::string render(const Axiom& a, RenderStyle style) {
  if (style == RenderStyle::Functional) return a.key();
  if (a.isRoleInclusion()) return a.sub().str() + " ⊑ " + a.sup().str();
  return pretty(a.lhs()) + " ⊑ " + pretty(a.rhs());
}

std::string render(const Ontology& o) {
  std::string out;
  for (const auto& a : o) {
    out += a.key();
    out += '\n';
  }
  return out;
}

}  // namespace dlproof
