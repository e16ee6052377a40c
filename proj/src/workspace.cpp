#include "powdom/workspace.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "powdom/catalog.hpp"
#include "powdom/error.hpp"

namespace powdom {

std::string valuationStr(const ValuationValue& v) {
  return std::visit([](const auto& x) { return x.str(); }, v);
}

// ------------------------------------------------------------------ lexer

namespace {

enum class Tok { Word, Punct, Newline, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

bool wordChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.' ||
         c == '/' || c == '*' || c == '^';
}

std::vector<Token> lex(std::string_view text, const std::string& file) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string t, std::size_t c) { out.push_back({k, std::move(t), line, c}); };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      push(Tok::Newline, "\n", col);
      ++line;
      col = 1;
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
    } else if (text.substr(i, 3) == "|->") {
      push(Tok::Punct, "|->", col);
      i += 3;
      col += 3;
    } else if (text.substr(i, 2) == "->") {
      push(Tok::Punct, "->", col);
      i += 2;
      col += 2;
    } else if (std::string_view("{}();,:=@<>").find(c) != std::string_view::npos) {
      push(Tok::Punct, std::string(1, c), col);
      ++i;
      ++col;
    } else if (wordChar(c)) {
      const std::size_t start = i, startCol = col;
      while (i < text.size() && wordChar(text[i])) {
        ++i;
        ++col;
      }
      push(Tok::Word, std::string(text.substr(start, i - start)), startCol);
    } else {
      throw ParseError(file, line, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

}  // namespace

// ----------------------------------------------------------------- parser

class DefinitionParser {
 public:
  DefinitionParser(Workspace& ws, std::string_view text, std::string file)
      : ws_(ws), file_(std::move(file)), toks_(lex(text, file_)) {}

  void run() {
    for (;;) {
      skipNewlines();
      const Token& t = peek();
      if (t.kind == Tok::End) return;
      if (t.kind != Tok::Word) error(t, "expected a definition, found '" + t.text + "'");
      if (t.text == "poset") {
        parsePoset();
      } else if (t.text == "algebra") {
        parseAlgebra();
      } else if (t.text == "map") {
        parseMap();
      } else if (t.text == "predicate") {
        parsePredicate();
      } else if (t.text == "valuation") {
        parseValuation();
      } else if (t.text == "transformer") {
        parseTransformer();
      } else if (t.text == "ptransformer") {
        parsePTransformer();
      } else {
        error(t, "unknown definition kind '" + t.text + "'");
      }
    }
  }

 private:
  [[noreturn]] void error(const Token& t, const std::string& msg) const {
    throw ParseError(file_, t.line, t.column, msg);
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::End) ++pos_;
    return t;
  }
  void skipNewlines() {
    while (peek().kind == Tok::Newline) ++pos_;
  }
  bool atPunct(std::string_view p) const {
    return peek().kind == Tok::Punct && peek().text == p;
  }
  bool atWord(std::string_view w) const { return peek().kind == Tok::Word && peek().text == w; }

  const Token& word(std::string_view what) {
    skipNewlines();
    const Token& t = next();
    if (t.kind != Tok::Word) error(t, "expected " + std::string(what) + ", found '" + t.text + "'");
    return t;
  }
  void keyword(std::string_view kw) {
    const Token& t = word(kw);
    if (t.text != kw) error(t, "expected '" + std::string(kw) + "', found '" + t.text + "'");
  }
  const Token& punct(std::string_view p) {
    skipNewlines();
    const Token& t = next();
    if (t.kind != Tok::Punct || t.text != p) {
      error(t, "expected '" + std::string(p) + "', found '" + printable(t) + "'");
    }
    return t;
  }
  void endOfLine() {
    const Token& t = next();
    if (t.kind != Tok::Newline && t.kind != Tok::End) {
      error(t, "unexpected '" + t.text + "' at end of line");
    }
  }
  /// Skips separators and reports whether the block continues.
  bool moreEntries(std::string_view close) {
    for (;;) {
      skipNewlines();
      if (atPunct(";")) {
        ++pos_;
        continue;
      }
      if (atPunct(close)) {
        ++pos_;
        return false;
      }
      if (peek().kind == Tok::End) error(peek(), "unterminated block, expected '" + std::string(close) + "'");
      return true;
    }
  }
  static std::string printable(const Token& t) {
    if (t.kind == Tok::Newline) return "end of line";
    if (t.kind == Tok::End) return "end of file";
    return t.text;
  }
  SourceLoc loc(const Token& t) const { return {file_, t.line, t.column}; }

  template <class Map>
  void unique(const Map& m, const Token& name, std::string_view kind) {
    if (m.count(name.text)) error(name, std::string(kind) + " '" + name.text + "' is already defined");
  }

  PosetPtr posetRef(const Token& t) {
    try {
      return ws_.poset(t.text);
    } catch (const Error& e) {
      error(t, e.what());
    }
  }
  const FinAlgebra& finiteRef(const Token& t) {
    if (!ws_.isFiniteAlgebra(t.text)) error(t, "no finite algebra named '" + t.text + "'");
    return ws_.finiteAlgebra(t.text);
  }
  Elem elemRef(const FinPoset& p, const Token& t) {
    auto e = p.find(t.text);
    if (!e) error(t, "no element '" + t.text + "' in " + p.name());
    return *e;
  }
  ExtNN number(const Token& t) {
    try {
      return ExtNN::parse(t.text);
    } catch (const Error& e) {
      error(t, e.what());
    }
  }

  // poset N / elems a b / le a b / end
  void parsePoset() {
    const Token& head = next();
    const Token& name = word("a poset name");
    unique(ws_.posets_, name, "poset");
    endOfLine();
    std::vector<std::string> labels;
    std::vector<FinPoset::CoverPair> covers;
    for (;;) {
      const Token& kw = word("'elems', 'le' or 'end'");
      if (kw.text == "end") break;
      if (kw.text == "elems") {
        while (peek().kind == Tok::Word) labels.push_back(next().text);
      } else if (kw.text == "le") {
        const std::string a = word("an element").text;
        const std::string b = word("an element").text;
        covers.emplace_back(a, b);
      } else {
        error(kw, "expected 'elems', 'le' or 'end', found '" + kw.text + "'");
      }
      endOfLine();
    }
    try {
      ws_.posets_.emplace(name.text, FinPoset::fromCover(name.text, labels, covers));
    } catch (const Error& e) {
      error(head, e.what());
    }
  }

  // algebra N on X|extnn / op s arity k tag T / table s {...} / builtin ... / end
  void parseAlgebra() {
    const Token& head = next();
    const Token& name = word("an algebra name");
    if (ws_.finite_.count(name.text) || ws_.rational_.count(name.text)) {
      error(name, "algebra '" + name.text + "' is already defined");
    }
    keyword("on");
    const Token& carrierTok = word("a carrier");
    const bool rational = carrierTok.text == "extnn";
    PosetPtr carrier = rational ? nullptr : posetRef(carrierTok);
    endOfLine();

    struct PendingOp {
      OpSpec spec;
      Token at;
      std::optional<std::vector<Elem>> table;
      std::optional<RatOp> builtin;
    };
    std::vector<PendingOp> ops;
    auto findOp = [&](const Token& sym) -> PendingOp& {
      for (auto& o : ops) {
        if (o.spec.symbol == sym.text) return o;
      }
      error(sym, "operation '" + sym.text + "' has not been declared");
    };

    for (;;) {
      const Token& kw = word("'op', 'table', 'builtin' or 'end'");
      if (kw.text == "end") break;
      if (kw.text == "op") {
        const Token& sym = word("an operation symbol");
        for (const auto& o : ops) {
          if (o.spec.symbol == sym.text) error(sym, "operation '" + sym.text + "' declared twice");
        }
        keyword("arity");
        const Token& ar = word("an arity");
        if (!std::all_of(ar.text.begin(), ar.text.end(), ::isdigit) || ar.text.size() > 2) {
          error(ar, "arity must be a small natural number");
        }
        Tag tag = Tag::EQ;
        if (atWord("tag")) {
          next();
          const Token& tt = word("a tag");
          try {
            tag = parseTag(tt.text);
          } catch (const Error& e) {
            error(tt, e.what());
          }
        }
        ops.push_back({OpSpec{sym.text, static_cast<unsigned>(std::stoul(ar.text)), tag, false},
                       kw, std::nullopt, std::nullopt});
      } else if (kw.text == "table") {
        if (rational) error(kw, "extnn algebras use 'builtin', not tables");
        PendingOp& op = findOp(word("an operation symbol"));
        if (op.table) error(kw, "table for '" + op.spec.symbol + "' given twice");
        op.table = parseTable(*carrier, op.spec);
      } else if (kw.text == "builtin") {
        if (!rational) error(kw, "builtins need an extnn carrier");
        if (ops.empty() || ops.back().builtin) error(kw, "'builtin' must follow its 'op' line");
        PendingOp& op = ops.back();
        const Token& kind = word("a builtin");
        RatOp r;
        r.symbol = op.spec.symbol;
        r.tag = op.spec.tag;
        try {
          r.kind = parseRatOpKind(kind.text);
        } catch (const Error& e) {
          error(kind, e.what());
        }
        if (peek().kind == Tok::Word) {
          const Token& p = next();
          if (r.kind == RatOpKind::ScaleFamily) r.kind = RatOpKind::Scale;
          if (r.kind != RatOpKind::Scale && r.kind != RatOpKind::Const) {
            error(p, "builtin '" + kind.text + "' takes no parameter");
          }
          r.param = number(p);
        } else if (r.kind == RatOpKind::Const) {
          error(kind, "'const' needs a value");
        }
        if (arityOf(r.kind) != op.spec.arity) {
          error(kind, "builtin '" + kind.text + "' has arity " + std::to_string(arityOf(r.kind)) +
                          ", but '" + op.spec.symbol + "' was declared with arity " +
                          std::to_string(op.spec.arity));
        }
        op.builtin = r;
      } else {
        error(kw, "expected 'op', 'table', 'builtin' or 'end', found '" + kw.text + "'");
      }
      endOfLine();
    }

    try {
      if (rational) {
        std::vector<RatOp> rops;
        for (auto& o : ops) {
          if (!o.builtin) error(o.at, "operation '" + o.spec.symbol + "' has no builtin");
          rops.push_back(*o.builtin);
        }
        ws_.rational_.emplace(name.text, RatAlgebra(name.text, std::move(rops)));
      } else {
        std::vector<OpSpec> specs;
        std::vector<std::vector<Elem>> tables;
        for (auto& o : ops) {
          if (!o.table) error(o.at, "operation '" + o.spec.symbol + "' has no table");
          specs.push_back(o.spec);
          tables.push_back(*o.table);
        }
        ws_.finite_.emplace(name.text,
                            FinAlgebra(name.text, carrier, Signature(std::move(specs)), tables));
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      error(head, e.what());
    }
  }

  // { (a,b) -> c; ... }, with `a -> c` allowed for unary operations.
  std::vector<Elem> parseTable(const FinPoset& carrier, const OpSpec& spec) {
    const Token& open = punct("{");
    std::size_t size = 1;
    for (unsigned i = 0; i < spec.arity; ++i) size *= carrier.size();
    constexpr Elem kUnset = static_cast<Elem>(-1);
    std::vector<Elem> table(size, kUnset);
    while (moreEntries("}")) {
      const Token& start = peek();
      std::vector<Elem> args;
      if (atPunct("(")) {
        next();
        if (!atPunct(")")) {
          args.push_back(elemRef(carrier, word("an element")));
          while (atPunct(",")) {
            next();
            args.push_back(elemRef(carrier, word("an element")));
          }
        }
        punct(")");
      } else {
        args.push_back(elemRef(carrier, word("an element")));
      }
      if (args.size() != spec.arity) {
        error(start, "'" + spec.symbol + "' takes " + std::to_string(spec.arity) +
                         " arguments, entry has " + std::to_string(args.size()));
      }
      punct("->");
      const Elem v = elemRef(carrier, word("an element"));
      const std::size_t idx = tupleIndex(args, carrier.size());
      if (table[idx] != kUnset) error(start, "duplicate table entry");
      table[idx] = v;
    }
    for (Elem v : table) {
      if (v == kUnset) error(open, "table for '" + spec.symbol + "' is incomplete");
    }
    return table;
  }

  // map f : X -> Y { a |-> b; ... }
  void parseMap() {
    next();
    const Token& name = word("a map name");
    unique(ws_.maps_, name, "map");
    punct(":");
    PosetPtr x = posetRef(word("a poset"));
    punct("->");
    PosetPtr y = posetRef(word("a poset"));
    const Token& open = punct("{");
    constexpr Elem kUnset = static_cast<Elem>(-1);
    std::vector<Elem> table(x->size(), kUnset);
    while (moreEntries("}")) {
      const Token& a = word("an element");
      const Elem from = elemRef(*x, a);
      punct("|->");
      const Elem to = elemRef(*y, word("an element"));
      if (table[from] != kUnset) error(a, "'" + a.text + "' is mapped twice");
      table[from] = to;
    }
    for (Elem p = 0; p < x->size(); ++p) {
      if (table[p] == kUnset) error(open, "no image for '" + x->label(p) + "'");
    }
    try {
      ws_.maps_.emplace(name.text, MonoMap(x, y, table));
    } catch (const Error& e) {
      error(name, e.what());
    }
  }

  // predicate f on X = pred{ a -> 1; ... }
  void parsePredicate() {
    next();
    const Token& name = word("a predicate name");
    unique(ws_.predicates_, name, "predicate");
    keyword("on");
    PosetPtr x = posetRef(word("a poset"));
    punct("=");
    keyword("pred");
    const Token& open = punct("{");
    std::vector<std::optional<ExtNN>> values(x->size());
    while (moreEntries("}")) {
      const Token& a = word("an element");
      const Elem e = elemRef(*x, a);
      punct("->");
      if (values[e]) error(a, "'" + a.text + "' is given twice");
      values[e] = number(word("a value"));
    }
    std::vector<ExtNN> vs;
    for (Elem p = 0; p < x->size(); ++p) {
      if (!values[p]) error(open, "no value for '" + x->label(p) + "'");
      vs.push_back(*values[p]);
    }
    try {
      ws_.predicates_.emplace(name.text, Predicate(x, std::move(vs)));
    } catch (const Error& e) {
      error(name, e.what());
    }
  }

  // val{ 1/2 @ a; ... }, the `val` keyword already consumed
  SimpleValuation parseVal(const PosetPtr& x) {
    punct("{");
    std::vector<Atom> atoms;
    while (moreEntries("}")) {
      const ExtNN w = number(word("a weight"));
      punct("@");
      atoms.push_back(Atom{w, elemRef(*x, word("an element"))});
    }
    return SimpleValuation(x, std::move(atoms));
  }

  // valuation m on X = val{...} | sup{ val{...}; ... } | inf{ ... }
  void parseValuation() {
    next();
    const Token& name = word("a valuation name");
    unique(ws_.valuations_, name, "valuation");
    keyword("on");
    PosetPtr x = posetRef(word("a poset"));
    punct("=");
    const Token& kind = word("'val', 'sup' or 'inf'");
    if (kind.text == "val") {
      ws_.valuations_.emplace(name.text, parseVal(x));
      return;
    }
    if (kind.text != "sup" && kind.text != "inf") {
      error(kind, "expected 'val', 'sup' or 'inf', found '" + kind.text + "'");
    }
    const Token& open = punct("{");
    std::vector<SimpleValuation> parts;
    while (moreEntries("}")) {
      keyword("val");
      parts.push_back(parseVal(x));
    }
    if (parts.empty()) error(open, "'" + kind.text + "' needs at least one valuation");
    if (kind.text == "sup") {
      ws_.valuations_.emplace(name.text, SubFn(std::move(parts)));
    } else {
      ws_.valuations_.emplace(name.text, SupFn(std::move(parts)));
    }
  }

  // <c1, ..., cn> over the carrier of r
  std::vector<Elem> parseTuple(const FinPoset& carrier, std::size_t n, std::string_view what) {
    const Token& open = punct("<");
    std::vector<Elem> out;
    if (!atPunct(">")) {
      out.push_back(elemRef(carrier, word("a value")));
      while (atPunct(",")) {
        next();
        out.push_back(elemRef(carrier, word("a value")));
      }
    }
    punct(">");
    if (out.size() != n) {
      error(open, std::string(what) + " needs " + std::to_string(n) + " values, got " +
                      std::to_string(out.size()));
    }
    return out;
  }

  FunctionalExpr::Node parseTerm(const FinAlgebra& r, const FinPoset& y) {
    const Token& head = word("'delta', 'table' or an operation");
    FunctionalExpr::Node node;
    node.head = head.text;
    if (head.text == "delta") {
      node.point = elemRef(y, word("an element"));
      return node;
    }
    auto op = r.signature().find(head.text);
    if (!op) error(head, "no operation '" + head.text + "' in " + r.name());
    const unsigned arity = r.signature().op(*op).arity;
    if (atPunct("(")) {
      next();
      if (!atPunct(")")) {
        node.args.push_back(parseTerm(r, y));
        while (atPunct(",")) {
          next();
          node.args.push_back(parseTerm(r, y));
        }
      }
      punct(")");
    }
    if (node.args.size() != arity) {
      error(head, "'" + head.text + "' takes " + std::to_string(arity) + " arguments, got " +
                      std::to_string(node.args.size()));
    }
    return node;
  }

  struct Header {
    Token name;
    PosetPtr x;
    PosetPtr y;
    std::string algebra;
    const FinAlgebra* r = nullptr;
  };

  // NAME : X -> Y over R
  Header transformerHeader() {
    Header h;
    h.name = word("a transformer name");
    punct(":");
    h.x = posetRef(word("a poset"));
    punct("->");
    h.y = posetRef(word("a poset"));
    keyword("over");
    const Token& rt = word("an algebra");
    h.r = &finiteRef(rt);
    h.algebra = rt.text;
    return h;
  }

  void parseTransformer() {
    const Token& head = next();
    Header h = transformerHeader();
    unique(ws_.transformers_, h.name, "transformer");
    const Token& open = punct("{");
    const std::size_t ny = h.y->size();
    std::vector<std::optional<FunctionalExpr>> values(h.x->size());
    while (moreEntries("}")) {
      const Token& a = word("an element");
      const Elem e = elemRef(*h.x, a);
      if (values[e]) error(a, "'" + a.text + "' is given twice");
      punct("|->");
      FunctionalExpr fx;
      if (atWord("table")) {
        next();
        punct("{");
        while (moreEntries("}")) {
          auto g = parseTuple(*h.r->carrier(), ny, "a predicate on " + h.y->name());
          punct("->");
          const Elem v = elemRef(*h.r->carrier(), word("a value"));
          fx.table.emplace_back(std::move(g), v);
        }
      } else {
        fx.term = parseTerm(*h.r, *h.y);
      }
      values[e] = std::move(fx);
    }
    TransformerDef def{h.name.text, h.x, h.y, h.algebra, {}, loc(head)};
    for (Elem p = 0; p < h.x->size(); ++p) {
      if (!values[p]) error(open, "no value for '" + h.x->label(p) + "'");
      def.values.push_back(std::move(*values[p]));
    }
    ws_.transformers_.emplace(def.name, std::move(def));
  }

  void parsePTransformer() {
    const Token& head = next();
    Header h = transformerHeader();
    unique(ws_.ptransformers_, h.name, "ptransformer");
    punct("{");
    PTransformerDef def{h.name.text, h.x, h.y, h.algebra, {}, loc(head)};
    std::set<std::vector<Elem>> seen;
    while (moreEntries("}")) {
      const Token& at = peek();
      auto g = parseTuple(*h.r->carrier(), h.y->size(), "a predicate on " + h.y->name());
      if (!seen.insert(g).second) error(at, "predicate given twice");
      punct("|->");
      auto f = parseTuple(*h.r->carrier(), h.x->size(), "a predicate on " + h.x->name());
      def.entries.emplace_back(std::move(g), std::move(f));
    }
    ws_.ptransformers_.emplace(def.name, std::move(def));
  }

  Workspace& ws_;
  std::string file_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void Workspace::load(std::string_view text, const std::string& file) {
  DefinitionParser(*this, text, file).run();
}

void Workspace::loadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, 0, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  load(ss.str(), path);
}

// -------------------------------------------------------------- lookups

namespace {

template <class Map>
const auto& lookup(const Map& m, std::string_view name, std::string_view kind) {
  auto it = m.find(name);
  if (it == m.end()) {
    fail(ErrorKind::UnknownName, "no " + std::string(kind) + " named '" + std::string(name) + "'");
  }
  return it->second;
}

}  // namespace

PosetPtr Workspace::poset(std::string_view name) const {
  if (auto it = posets_.find(name); it != posets_.end()) return it->second;
  // the carrier of the Boolean algebras is not a listed catalog poset
  if (name == catalog::two()->name()) return catalog::two();
  return catalog::poset(name);
}

bool Workspace::isFiniteAlgebra(std::string_view name) const {
  if (finite_.count(name)) return true;
  for (const auto& a : catalog::finiteAlgebras()) {
    if (a.name() == name) return true;
  }
  return false;
}

bool Workspace::isRatAlgebra(std::string_view name) const {
  if (rational_.count(name)) return true;
  for (const auto& a : catalog::ratAlgebras()) {
    if (a.name() == name) return true;
  }
  return false;
}

const FinAlgebra& Workspace::finiteAlgebra(std::string_view name) const {
  if (auto it = finite_.find(name); it != finite_.end()) return it->second;
  return catalog::finiteAlgebra(name);
}

const RatAlgebra& Workspace::ratAlgebra(std::string_view name) const {
  if (auto it = rational_.find(name); it != rational_.end()) return it->second;
  return catalog::ratAlgebra(name);
}

const MonoMap& Workspace::map(std::string_view name) const { return lookup(maps_, name, "map"); }

const Predicate& Workspace::predicate(std::string_view name) const {
  return lookup(predicates_, name, "predicate");
}

const ValuationValue& Workspace::valuation(std::string_view name) const {
  return lookup(valuations_, name, "valuation");
}

const TransformerDef& Workspace::transformer(std::string_view name) const {
  return lookup(transformers_, name, "transformer");
}

const PTransformerDef& Workspace::ptransformer(std::string_view name) const {
  return lookup(ptransformers_, name, "ptransformer");
}

// ------------------------------------------------------ materialization

namespace {

void sameAlgebra(const ContinuationMonad& m, const std::string& name) {
  if (m.algebra().name() != name) {
    fail(ErrorKind::TypeMismatch,
         "transformer over " + name + " used with a monad over " + m.algebra().name());
  }
}

std::string tupleStr(const FinPoset& carrier, std::span<const Elem> t) { return mapLabel(carrier, t); }

Elem evalNode(const ContinuationMonad& m, const PosetPtr& y, const FunctionalExpr::Node& n) {
  if (n.head == "delta") return m.delta(y, n.point).index;
  const auto& alg = m.functionalAlgebra(y);
  std::vector<Elem> args;
  for (const auto& a : n.args) args.push_back(evalNode(m, y, a));
  return alg.apply(alg.signature().index(n.head), args);
}

}  // namespace

StateTransformer buildTransformer(const ContinuationMonad& m, const TransformerDef& def) {
  sameAlgebra(m, def.algebra);
  const auto& ry = m.predicates(def.y);
  std::vector<Elem> values;
  for (const auto& fx : def.values) {
    if (fx.term) {
      values.push_back(evalNode(m, def.y, *fx.term));
      continue;
    }
    std::map<std::vector<Elem>, Elem> given(fx.table.begin(), fx.table.end());
    std::vector<Elem> table(ry->size());
    for (Elem g = 0; g < ry->size(); ++g) {
      const auto key = ry->table(g);
      auto it = given.find(std::vector<Elem>(key.begin(), key.end()));
      if (it == given.end()) {
        fail(ErrorKind::UnknownElement, def.name + ": table misses predicate " +
                                            tupleStr(*m.algebra().carrier(), key));
      }
      table[g] = it->second;
    }
    values.push_back(m.functional(def.y, table).index);
  }
  return m.stateTransformer(def.x, def.y, values);
}

PredicateTransformer buildPTransformer(const ContinuationMonad& m, const PTransformerDef& def) {
  sameAlgebra(m, def.algebra);
  const auto& ry = m.predicates(def.y);
  const auto& rx = m.predicates(def.x);
  std::map<std::vector<Elem>, std::vector<Elem>> given(def.entries.begin(), def.entries.end());
  std::vector<Elem> table(ry->size());
  for (Elem g = 0; g < ry->size(); ++g) {
    const auto key = ry->table(g);
    auto it = given.find(std::vector<Elem>(key.begin(), key.end()));
    if (it == given.end()) {
      fail(ErrorKind::UnknownElement,
           def.name + ": no image for predicate " + tupleStr(*m.algebra().carrier(), key));
    }
    table[g] = rx->indexOf(it->second);
  }
  return PredicateTransformer{def.x, def.y, MonoMap(ry->poset(), rx->poset(), table)};
}

}  // namespace powdom
