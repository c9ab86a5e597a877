#include "umlsem/frontend.h"

#include <cctype>
#include <map>
#include <set>

namespace umlsem {

namespace {

enum class Tok {
  kIdent,
  kInt,
  kString,
  kLBrace,
  kRBrace,
  kLBracket,
  kRBracket,
  kColon,
  kComma,
  kSemicolon,
  kDot,
  kDotDot,
  kArrow,
  kEquals,
  kStar,
  kEof,
};

std::string_view tok_name(Tok t)
{
  switch (t) {
    case Tok::kIdent: return "identifier";
    case Tok::kInt: return "integer";
    case Tok::kString: return "string literal";
    case Tok::kLBrace: return "'{'";
    case Tok::kRBrace: return "'}'";
    case Tok::kLBracket: return "'['";
    case Tok::kRBracket: return "']'";
    case Tok::kColon: return "':'";
    case Tok::kComma: return "','";
    case Tok::kSemicolon: return "';'";
    case Tok::kDot: return "'.'";
    case Tok::kDotDot: return "'..'";
    case Tok::kArrow: return "'->'";
    case Tok::kEquals: return "'='";
    case Tok::kStar: return "'*'";
    case Tok::kEof: return "end of input";
  }
  return "token";
}

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  Lexer(std::string_view src, std::vector<SourceError> & errors)
      : src_(src), errors_(errors)
  {
  }

  std::vector<Token> run()
  {
    std::vector<Token> out;
    while (true) {
      skip_space_and_comments();
      if (pos_ >= src_.size()) {
        out.push_back({Tok::kEof, "", line_, col_});
        return out;
      }
      const std::size_t line = line_, col = col_;
      const char ch = src_[pos_];
      auto single = [&](Tok t) {
        advance();
        out.push_back({t, std::string(1, ch), line, col});
      };
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::string text;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                src_[pos_] == '_')) {
          text += src_[pos_];
          advance();
        }
        out.push_back({Tok::kIdent, std::move(text), line, col});
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::string text;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          text += src_[pos_];
          advance();
        }
        out.push_back({Tok::kInt, std::move(text), line, col});
      } else if (ch == '"') {
        lex_string(out, line, col);
      } else if (ch == '.') {
        if (peek(1) == '.') {
          advance();
          advance();
          out.push_back({Tok::kDotDot, "..", line, col});
        } else {
          single(Tok::kDot);
        }
      } else if (ch == '-' && peek(1) == '>') {
        advance();
        advance();
        out.push_back({Tok::kArrow, "->", line, col});
      } else if (ch == '{') {
        single(Tok::kLBrace);
      } else if (ch == '}') {
        single(Tok::kRBrace);
      } else if (ch == '[') {
        single(Tok::kLBracket);
      } else if (ch == ']') {
        single(Tok::kRBracket);
      } else if (ch == ':') {
        single(Tok::kColon);
      } else if (ch == ',') {
        single(Tok::kComma);
      } else if (ch == ';') {
        single(Tok::kSemicolon);
      } else if (ch == '=') {
        single(Tok::kEquals);
      } else if (ch == '*') {
        single(Tok::kStar);
      } else {
        std::string shown = std::isprint(static_cast<unsigned char>(ch))
                                ? "'" + std::string(1, ch) + "'"
                                : "byte " + std::to_string(static_cast<unsigned char>(ch));
        errors_.push_back({line, col, "unexpected character " + shown,
                           SourceError::Kind::kLex});
        advance();
      }
    }
  }

 private:
  char peek(std::size_t ahead) const
  {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance()
  {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space_and_comments()
  {
    while (pos_ < src_.size()) {
      if (std::isspace(static_cast<unsigned char>(src_[pos_]))) {
        advance();
      } else if (src_[pos_] == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  void lex_string(std::vector<Token> & out, std::size_t line, std::size_t col)
  {
    advance();  // opening quote
    std::string text;
    while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
      if (src_[pos_] == '\\' && pos_ + 1 < src_.size() &&
          (src_[pos_ + 1] == '"' || src_[pos_ + 1] == '\\')) {
        advance();
      }
      text += src_[pos_];
      advance();
    }
    if (pos_ >= src_.size() || src_[pos_] != '"') {
      errors_.push_back({line, col, "unterminated string literal",
                         SourceError::Kind::kLex});
      return;
    }
    advance();
    out.push_back({Tok::kString, std::move(text), line, col});
  }

  std::string_view src_;
  std::vector<SourceError> & errors_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

// Thrown after an error has been recorded; caught at a recovery point.
struct Abort {};

class ParserBase {
 protected:
  ParserBase(std::string_view text) : tokens_(Lexer(text, errors_).run()) {}

  const Token & cur() const { return tokens_[pos_]; }
  const Token & ahead(std::size_t n) const
  {
    return tokens_[std::min(pos_ + n, tokens_.size() - 1)];
  }
  bool at(Tok t) const { return cur().kind == t; }
  bool at_word(std::string_view w) const
  {
    return cur().kind == Tok::kIdent && cur().text == w;
  }
  const Token & next()
  {
    const Token & t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool accept(Tok t)
  {
    if (!at(t)) return false;
    next();
    return true;
  }
  bool accept_word(std::string_view w)
  {
    if (!at_word(w)) return false;
    next();
    return true;
  }

  [[noreturn]] void error_here(const std::string & message)
  {
    error_at(cur(), message, SourceError::Kind::kParse);
    throw Abort{};
  }

  void error_at(const Token & t, const std::string & message, SourceError::Kind kind)
  {
    errors_.push_back({t.line, t.column, message, kind});
  }

  std::string found() const
  {
    if (at(Tok::kEof)) return "end of input";
    return std::string(tok_name(cur().kind)) + " '" + cur().text + "'";
  }

  const Token & expect(Tok t, std::string_view context)
  {
    if (!at(t)) {
      error_here("expected " + std::string(tok_name(t)) + " " +
                 std::string(context) + ", found " + found());
    }
    return next();
  }

  void expect_word(std::string_view w, std::string_view context)
  {
    if (!accept_word(w)) {
      error_here("expected '" + std::string(w) + "' " + std::string(context) +
                 ", found " + found());
    }
  }

  Name name(std::string_view context)
  {
    if (!at(Tok::kIdent)) {
      error_here("expected " + std::string(context) + ", found " + found());
    }
    if (!Name::is_valid(cur().text)) {
      error_here("'" + cur().text + "' is not a valid name (must start with a letter)");
    }
    return Name(next().text);
  }

  std::uint32_t natural()
  {
    const Token & t = expect(Tok::kInt, "in multiplicity");
    if (t.text.size() > 10 || std::stoull(t.text) > UINT32_MAX) {
      error_at(t, "integer " + t.text + " is too large", SourceError::Kind::kParse);
      throw Abort{};
    }
    return static_cast<std::uint32_t>(std::stoull(t.text));
  }

  Multiplicity multiplicity()
  {
    const Token & open = expect(Tok::kLBracket, "to start a multiplicity");
    std::vector<Multiplicity::Range> ranges;
    if (at(Tok::kRBracket)) {
      error_at(open, "empty multiplicity", SourceError::Kind::kParse);
      throw Abort{};
    }
    do {
      const Token & start = cur();
      Multiplicity::Range r;
      if (accept(Tok::kStar)) {
        r = {0, std::nullopt};
      } else {
        r.lo = natural();
        r.hi = r.lo;
        if (accept(Tok::kDotDot)) {
          if (accept(Tok::kStar)) {
            r.hi.reset();
          } else {
            r.hi = natural();
          }
        }
      }
      if (r.hi && *r.hi < r.lo) {
        error_at(start, "range " + std::to_string(r.lo) + ".." + std::to_string(*r.hi) +
                            " has lower bound above upper bound",
                 SourceError::Kind::kParse);
        throw Abort{};
      }
      ranges.push_back(r);
    } while (accept(Tok::kComma));
    expect(Tok::kRBracket, "to close the multiplicity");
    return Multiplicity(std::move(ranges));
  }

  // Skips to a token for which `stop` holds, or end of input.
  template <class Pred>
  void recover(Pred stop)
  {
    while (!at(Tok::kEof) && !stop()) next();
  }

  // errors_ precedes tokens_: the lexer reports into it during construction
  std::vector<SourceError> errors_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------- models

class ModelParser : ParserBase {
 public:
  explicit ModelParser(std::string_view text) : ParserBase(text) {}

  Parsed<StaticModel> run()
  {
    Parsed<StaticModel> out;
    try {
      parse();
    } catch (const Abort &) {
    }
    resolve();
    out.errors = std::move(errors_);
    if (out.errors.empty()) out.value = std::move(model_);
    return out;
  }

 private:
  struct Ref {
    Name name;
    Token token;
  };

  void parse()
  {
    expect_word("model", "at start of model");
    model_.name = name("model name");
    expect(Tok::kLBrace, "after model name");
    while (!at(Tok::kRBrace) && !at(Tok::kEof)) {
      const std::size_t start = pos_;
      try {
        item();
      } catch (const Abort &) {
        if (pos_ == start) next();
        recover([&] {
          return at_word("class") || at_word("abstract") || at_word("assoc") ||
                 at(Tok::kRBrace);
        });
      }
    }
    expect(Tok::kRBrace, "to close the model");
    if (!at(Tok::kEof)) error_here("unexpected " + found() + " after model");
  }

  void item()
  {
    if (at_word("abstract") || at_word("class")) {
      class_decl();
    } else if (at_word("assoc")) {
      assoc_decl();
    } else {
      error_here("expected 'class', 'abstract class' or 'assoc', found " + found());
    }
  }

  void class_decl()
  {
    const bool is_abstract = accept_word("abstract");
    expect_word("class", is_abstract ? "after 'abstract'" : "");
    const Token at_name = cur();
    const Name c = name("class name");
    if (!declared_.emplace(c, at_name).second) {
      error_at(at_name, "class '" + c.str() + "' is declared twice",
               SourceError::Kind::kResolve);
    }
    model_.add_classifier(c, is_abstract);
    if (accept_word("extends")) {
      do {
        const Token t = cur();
        supers_.push_back({name("superclass name"), t});
        model_.add_generalization(supers_.back().name, c);
      } while (accept(Tok::kComma));
    }
    if (accept(Tok::kLBrace)) {
      while (!at(Tok::kRBrace)) {
        expect_word("attr", "in class body");
        do {
          model_.attributes[c].insert(name("attribute name"));
        } while (accept(Tok::kComma));
      }
      next();
    }
  }

  void assoc_decl()
  {
    expect_word("assoc", "");
    Association a{name("association name"), {}};
    expect(Tok::kLBrace, "after association name");
    while (!at(Tok::kRBrace)) {
      expect_word("end", "in association body");
      AssociationEnd e{name("end name"), {}, Multiplicity::any()};
      expect(Tok::kColon, "after end name");
      const Token t = cur();
      e.classifier = name("end classifier");
      refs_.push_back({e.classifier, t});
      e.multi = multiplicity();
      a.ends.push_back(std::move(e));
    }
    next();
    model_.add_association(std::move(a));
  }

  void resolve()
  {
    for (const Ref & r : supers_) {
      if (!declared_.count(r.name)) {
        error_at(r.token, "superclass '" + r.name.str() + "' is not declared",
                 SourceError::Kind::kResolve);
      }
    }
    for (const Ref & r : refs_) {
      if (!declared_.count(r.name)) {
        error_at(r.token, "association end refers to undeclared class '" +
                              r.name.str() + "'",
                 SourceError::Kind::kResolve);
      }
    }
  }

  StaticModel model_;
  std::map<Name, Token> declared_;
  std::vector<Ref> supers_;
  std::vector<Ref> refs_;
};

// ------------------------------------------------------------- snapshots

class SnapshotParser : ParserBase {
 public:
  SnapshotParser(std::string_view text, const StaticModel & model)
      : ParserBase(text), model_(model)
  {
  }

  Parsed<Snapshot> run()
  {
    Parsed<Snapshot> out;
    try {
      parse();
    } catch (const Abort &) {
    }
    Snapshot s = build();
    out.errors = std::move(errors_);
    if (out.errors.empty()) out.value = std::move(s);
    return out;
  }

 private:
  struct Entry {
    Name attr;
    std::vector<Token> targets;  // object references
    std::optional<std::uint32_t> data;
  };
  struct Decl {
    Token id;
    Name classifier;
    std::vector<Entry> entries;
  };

  void parse()
  {
    expect_word("snapshot", "at start of snapshot");
    expect(Tok::kLBrace, "after 'snapshot'");
    while (!at(Tok::kRBrace) && !at(Tok::kEof)) {
      const std::size_t start = pos_;
      try {
        object_decl();
      } catch (const Abort &) {
        if (pos_ == start) next();
        recover([&] {
          return at(Tok::kRBrace) ||
                 (at(Tok::kIdent) && ahead(1).kind == Tok::kColon);
        });
        // a '}' closing an object body is not the end of the snapshot
        if (at(Tok::kRBrace) && ahead(1).kind != Tok::kEof) next();
      }
    }
    expect(Tok::kRBrace, "to close the snapshot");
    if (!at(Tok::kEof)) error_here("unexpected " + found() + " after snapshot");
  }

  void object_decl()
  {
    Decl d{cur(), Name(), {}};
    name("object name");
    expect(Tok::kColon, "after object name");
    const Token ct = cur();
    d.classifier = name("class name");
    if (!model_.has_classifier(d.classifier)) {
      error_at(ct, "unknown class '" + d.classifier.str() + "'",
               SourceError::Kind::kResolve);
    }
    if (accept(Tok::kLBrace)) {
      if (!at(Tok::kRBrace)) {
        do {
          d.entries.push_back(entry());
        } while (accept(Tok::kComma));
      }
      expect(Tok::kRBrace, "to close the object");
    }
    decls_.push_back(std::move(d));
  }

  Entry entry()
  {
    Entry e{name("attribute name"), {}, std::nullopt};
    if (accept(Tok::kEquals)) {
      const Token & lit = expect(Tok::kString, "after '='");
      auto [it, fresh] = literals_.emplace(lit.text, std::uint32_t(literals_.size()));
      e.data = it->second;
    } else if (accept(Tok::kArrow)) {
      if (accept(Tok::kLBrace)) {
        if (!at(Tok::kRBrace)) {
          do {
            e.targets.push_back(cur());
            name("object name");
          } while (accept(Tok::kComma));
        }
        expect(Tok::kRBrace, "to close the target set");
      } else {
        e.targets.push_back(cur());
        name("object name");
      }
    } else {
      error_here("expected '->' or '=' after attribute name, found " + found());
    }
    return e;
  }

  Snapshot build()
  {
    std::map<std::string, Value> ids;
    for (const Decl & d : decls_) {
      const Value v = Value::object(static_cast<std::uint32_t>(ids.size()));
      if (!ids.emplace(d.id.text, v).second) {
        error_at(d.id, "object '" + d.id.text + "' is declared twice",
                 SourceError::Kind::kResolve);
      }
    }
    Snapshot s;
    std::set<std::string> seen;
    for (const Decl & d : decls_) {
      if (!seen.insert(d.id.text).second) continue;
      ObjectState st{d.classifier, {}};
      for (const Entry & e : d.entries) {
        auto & slot = st.attributes[e.attr];
        if (e.data) slot.insert(Value::data(*e.data));
        for (const Token & t : e.targets) {
          auto it = ids.find(t.text);
          if (it == ids.end()) {
            error_at(t, "dangling reference to undeclared object '" + t.text + "'",
                     SourceError::Kind::kResolve);
          } else {
            slot.insert(it->second);
          }
        }
      }
      s.objects.emplace(ids.at(d.id.text), std::move(st));
    }
    return s;
  }

  const StaticModel & model_;
  std::vector<Decl> decls_;
  std::map<std::string, std::uint32_t> literals_;
};

// ---------------------------------------------------------------- proofs

class ProofParser : ParserBase {
 public:
  explicit ProofParser(std::string_view text) : ParserBase(text) {}

  Parsed<ProofScript> run()
  {
    Parsed<ProofScript> out;
    try {
      parse();
    } catch (const Abort &) {
    }
    out.errors = std::move(errors_);
    if (out.errors.empty()) out.value = std::move(script_);
    return out;
  }

 private:
  void parse()
  {
    expect_word("proof", "at start of proof");
    expect(Tok::kLBrace, "after 'proof'");
    while (!at(Tok::kRBrace) && !at(Tok::kEof)) {
      const std::size_t start = pos_;
      try {
        script_.steps.push_back(step());
        if (!at(Tok::kRBrace)) expect(Tok::kSemicolon, "between proof steps");
      } catch (const Abort &) {
        if (pos_ == start) next();
        recover([&] { return at(Tok::kSemicolon) || at(Tok::kRBrace); });
        accept(Tok::kSemicolon);
      }
    }
    const Token close = cur();
    expect(Tok::kRBrace, "to close the proof");
    if (script_.steps.empty() && errors_.empty()) {
      error_at(close, "proof script has no steps", SourceError::Kind::kParse);
    }
    if (!at(Tok::kEof)) error_here("unexpected " + found() + " after proof");
  }

  std::pair<Name, Name> end_ref()
  {
    Name assoc = name("association name");
    expect(Tok::kDot, "between association and end name");
    return {assoc, name("end name")};
  }

  std::set<Name> name_list(std::string_view what)
  {
    std::set<Name> out;
    do {
      out.insert(name(what));
    } while (accept(Tok::kComma));
    return out;
  }

  Rule step()
  {
    if (!at(Tok::kIdent)) error_here("expected a rule keyword, found " + found());
    const std::string word = cur().text;
    next();
    if (word == "add_class") {
      rule::AddClassifier r;
      // `abstract` is a modifier unless it is the class name itself
      if (at_word("abstract") && ahead(1).kind == Tok::kIdent) {
        next();
        r.is_abstract = true;
      }
      r.name = name("class name");
      if (accept_word("extends")) r.supers = name_list("superclass name");
      if (accept_word("attr")) r.attrs = name_list("attribute name");
      return r;
    }
    if (word == "erase") return rule::EraseAssociation{name("association name")};
    if (word == "rename") {
      Name from = name("association name");
      expect(Tok::kArrow, "in rename");
      return rule::RenameAssociation{from, name("new association name")};
    }
    if (word == "widen" || word == "narrow") {
      auto [assoc, end] = end_ref();
      expect_word("to", "before the multiplicity");
      Multiplicity m = multiplicity();
      if (word == "widen") return rule::WidenMultiplicity{assoc, end, m};
      return rule::NarrowMultiplicity{assoc, end, m};
    }
    if (word == "restrict") {
      auto [assoc, end] = end_ref();
      expect_word("to", "before the subtype");
      return rule::RestrictEndToSubtype{assoc, end, name("subtype name")};
    }
    if (word == "erase_attr") {
      Name c = name("class name");
      expect(Tok::kDot, "between class and attribute name");
      return rule::EraseAttribute{c, name("attribute name")};
    }
    if (word == "make_concrete") return rule::MakeConcrete{name("class name")};
    if (word == "introduce_weakened") {
      rule::IntroduceWeakenedAssociation r;
      r.source = name("source association name");
      expect_word("as", "after the source association");
      r.fresh = name("fresh association name");
      if (accept_word("retarget")) {
        do {
          Name end = name("end name");
          expect(Tok::kArrow, "in retarget");
          r.retargets.insert_or_assign(end, name("subtype name"));
        } while (accept(Tok::kComma));
      }
      if (accept_word("widen")) {
        do {
          Name end = name("end name");
          expect_word("to", "before the multiplicity");
          r.widenings.insert_or_assign(end, multiplicity());
        } while (accept(Tok::kComma));
      }
      return r;
    }
    const Token & kw = tokens_[pos_ - 1];
    error_at(kw, "unknown rule '" + word + "'", SourceError::Kind::kParse);
    throw Abort{};
  }

  ProofScript script_;
};

std::string join(const std::set<Name> & names)
{
  std::string out;
  for (const Name & n : names) {
    if (!out.empty()) out += ", ";
    out += n.str();
  }
  return out;
}

std::string quoted(const std::string & s)
{
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string_view source_error_kind_name(SourceError::Kind kind)
{
  switch (kind) {
    case SourceError::Kind::kLex: return "lex";
    case SourceError::Kind::kParse: return "parse";
    case SourceError::Kind::kResolve: return "resolve";
  }
  return "?";
}

std::string SourceError::to_string() const
{
  return std::to_string(line) + ":" + std::to_string(column) + ": " +
         std::string(source_error_kind_name(kind)) + " error: " + message;
}

Parsed<StaticModel> parse_model(std::string_view text)
{
  return ModelParser(text).run();
}

Parsed<Snapshot> parse_snapshot(std::string_view text, const StaticModel & model)
{
  return SnapshotParser(text, model).run();
}

Parsed<ProofScript> parse_proof(std::string_view text)
{
  return ProofParser(text).run();
}

std::string print_model(const StaticModel & m)
{
  std::string body;
  for (const ClassifierId & c : m.classifiers) {
    body += "  ";
    if (m.abstract.count(c)) body += "abstract ";
    body += "class " + c.str();
    std::set<Name> supers;
    for (const Generalization & g : m.supertype_of) {
      if (g.sub == c) supers.insert(g.super);
    }
    if (!supers.empty()) body += " extends " + join(supers);
    const auto & attrs = m.declared_attributes(c);
    if (!attrs.empty()) {
      body += " {\n";
      for (const Name & a : attrs) body += "    attr " + a.str() + "\n";
      body += "  }";
    }
    body += "\n";
  }
  for (const Association & a : m.associations) {
    body += "  assoc " + a.name.str() + " {\n";
    for (const AssociationEnd & e : a.ends) {
      body += "    end " + e.name.str() + " : " + e.classifier.str() + " [" +
              e.multi.to_string() + "]\n";
    }
    body += "  }\n";
  }
  if (body.empty()) return "model " + m.name.str() + " { }\n";
  return "model " + m.name.str() + " {\n" + body + "}\n";
}

std::string print_snapshot(const Snapshot & s)
{
  if (s.objects.empty()) return "snapshot { }\n";
  std::string out = "snapshot {\n";
  for (const auto & [id, st] : s.objects) {
    out += "  " + value_label(id) + " : " + st.classifier.str();
    std::vector<std::string> entries;
    for (const auto & [name, values] : st.attributes) {
      std::vector<std::string> objs;
      std::vector<std::string> data;
      for (const Value & v : values) {
        (v.is_object() ? objs : data).push_back(value_label(v));
      }
      if (objs.size() == 1) {
        entries.push_back(name.str() + " -> " + objs.front());
      } else if (!objs.empty() || data.empty()) {
        std::string set;
        for (const auto & o : objs) set += (set.empty() ? " " : ", ") + o;
        entries.push_back(name.str() + " -> {" + set + (set.empty() ? "}" : " }"));
      }
      for (const auto & d : data) entries.push_back(name.str() + " = " + quoted(d));
    }
    if (!entries.empty()) {
      out += " {";
      for (std::size_t i = 0; i < entries.size(); ++i) {
        out += (i ? ", " : " ") + entries[i];
      }
      out += " }";
    }
    out += "\n";
  }
  return out + "}\n";
}

std::string print_rule(const Rule & r)
{
  struct Printer {
    std::string operator()(const rule::AddClassifier & x) const
    {
      std::string out = "add_class ";
      if (x.is_abstract) out += "abstract ";
      out += x.name.str();
      if (!x.supers.empty()) out += " extends " + join(x.supers);
      if (!x.attrs.empty()) out += " attr " + join(x.attrs);
      return out;
    }
    std::string operator()(const rule::EraseAssociation & x) const
    {
      return "erase " + x.assoc.str();
    }
    std::string operator()(const rule::RenameAssociation & x) const
    {
      return "rename " + x.from.str() + " -> " + x.to.str();
    }
    std::string operator()(const rule::WidenMultiplicity & x) const
    {
      return "widen " + x.assoc.str() + "." + x.end.str() + " to [" +
             x.multi.to_string() + "]";
    }
    std::string operator()(const rule::NarrowMultiplicity & x) const
    {
      return "narrow " + x.assoc.str() + "." + x.end.str() + " to [" +
             x.multi.to_string() + "]";
    }
    std::string operator()(const rule::RestrictEndToSubtype & x) const
    {
      return "restrict " + x.assoc.str() + "." + x.end.str() + " to " + x.sub.str();
    }
    std::string operator()(const rule::EraseAttribute & x) const
    {
      return "erase_attr " + x.classifier.str() + "." + x.attr.str();
    }
    std::string operator()(const rule::MakeConcrete & x) const
    {
      return "make_concrete " + x.classifier.str();
    }
    std::string operator()(const rule::IntroduceWeakenedAssociation & x) const
    {
      std::string out = "introduce_weakened " + x.source.str() + " as " + x.fresh.str();
      std::string sep = " retarget ";
      for (const auto & [end, sub] : x.retargets) {
        out += sep + end.str() + " -> " + sub.str();
        sep = ", ";
      }
      sep = " widen ";
      for (const auto & [end, multi] : x.widenings) {
        out += sep + end.str() + " to [" + multi.to_string() + "]";
        sep = ", ";
      }
      return out;
    }
  };
  return std::visit(Printer{}, r);
}

std::string print_proof(const ProofScript & p)
{
  std::string out = "proof {\n";
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    out += "  " + print_rule(p.steps[i]) + (i + 1 < p.steps.size() ? ";\n" : "\n");
  }
  return out + "}\n";
}

}  // namespace umlsem
