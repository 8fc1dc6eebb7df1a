#include "mflow/harness/instance.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <tuple>

namespace mflow::harness {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

const Value* Problem::find(std::string_view key) const {
  for (const auto& [k, v] : args) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string_view decl_keyword(DeclKind k) {
  switch (k) {
    case DeclKind::Measure1: return "measure1";
    case DeclKind::Potential: return "potential";
    case DeclKind::Measure2: return "measure2";
    case DeclKind::Cost: return "cost";
    case DeclKind::Metric: return "metric";
    case DeclKind::Pairs: return "pairs";
  }
  return "?";
}

bool Instance::operator==(const Instance& o) const {
  if (!space || !o.space) return space == o.space;
  return *space == *o.space && order == o.order && tables1 == o.tables1 && tables2 == o.tables2 &&
         pair_sets == o.pair_sets && problem == o.problem;
}

namespace {

struct Token {
  enum Kind { Word, Punct, End } kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool is_punct(char c) {
  return c == '{' || c == '}' || c == '[' || c == ']' || c == '(' || c == ')' || c == ',' || c == ':';
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (is_punct(c)) {
      out.push_back({Token::Punct, std::string(1, c), line, col});
      advance(1);
    } else if (c == '"') {
      const std::size_t l = line, cl = col;
      advance(1);
      std::string word;
      while (i < text.size() && text[i] != '"') {
        if (text[i] == '\n') throw ParseError(l, cl, "unterminated quoted label");
        word += text[i];
        advance(1);
      }
      if (i == text.size()) throw ParseError(l, cl, "unterminated quoted label");
      advance(1);
      out.push_back({Token::Word, std::move(word), l, cl});
    } else {
      const std::size_t l = line, cl = col;
      std::string word;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && !is_punct(text[i]) &&
             text[i] != '#' && text[i] != '"') {
        word += text[i];
        advance(1);
      }
      out.push_back({Token::Word, std::move(word), l, cl});
    }
  }
  out.push_back({Token::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  Instance run() {
    Instance inst;
    while (peek().kind != Token::End) {
      const Token& head = expect_word("stanza keyword");
      if (head.text == "space") {
        if (inst.space) throw ParseError(head.line, head.column, "duplicate space stanza");
        inst.space = parse_space(head);
      } else if (head.text == "problem") {
        if (inst.problem) throw ParseError(head.line, head.column, "duplicate problem stanza");
        inst.problem = parse_problem(head);
      } else {
        auto kind = keyword_kind(head);
        if (!inst.space) throw ParseError(head.line, head.column, "space stanza must come first");
        const Token& name = expect_word("declaration name");
        for (const auto& d : inst.order) {
          if (d.name == name.text) throw ParseError(name.line, name.column, "duplicate name '" + name.text + "'");
        }
        inst.order.push_back({kind, name.text});
        parse_body(inst, kind, name.text);
      }
    }
    if (!inst.space) {
      const Token& end = peek();
      throw ParseError(end.line, end.column, "missing space stanza");
    }
    return inst;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (t.kind != Token::End) ++pos_;
    return t;
  }
  bool at_punct(char c) const { return peek().kind == Token::Punct && peek().text[0] == c; }
  const Token& expect_punct(char c) {
    if (!at_punct(c)) fail(peek(), std::string("expected '") + c + "'");
    return next();
  }
  const Token& expect_word(const char* what) {
    if (peek().kind != Token::Word) fail(peek(), std::string("expected ") + what);
    return next();
  }
  void skip_comma() {
    if (at_punct(',')) next();
  }
  [[noreturn]] static void fail(const Token& t, const std::string& msg) {
    std::string found = t.kind == Token::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.column, msg + ", found " + found);
  }

  static DeclKind keyword_kind(const Token& t) {
    for (DeclKind k : {DeclKind::Measure1, DeclKind::Potential, DeclKind::Measure2, DeclKind::Cost, DeclKind::Metric,
                       DeclKind::Pairs}) {
      if (t.text == decl_keyword(k)) return k;
    }
    throw ParseError(t.line, t.column, "unknown stanza '" + t.text + "'");
  }

  Rational number(const Token& t) {
    try {
      return parse_rational(t.text);
    } catch (const std::exception&) {
      throw ParseError(t.line, t.column, "malformed number '" + t.text + "'");
    }
  }

  std::size_t atom(const Token& t) {
    if (auto i = space_->index_of(t.text)) return *i;
    throw ParseError(t.line, t.column, "unknown atom '" + t.text + "'");
  }

  std::vector<Token> word_list() {
    expect_punct('[');
    std::vector<Token> out;
    while (!at_punct(']')) {
      out.push_back(expect_word("list item"));
      if (!at_punct(']')) expect_punct(',');
    }
    next();
    return out;
  }

  SpacePtr parse_space(const Token& head) {
    expect_punct('{');
    std::vector<std::string> labels;
    std::optional<std::vector<Interval>> intervals;
    bool have_atoms = false;
    while (!at_punct('}')) {
      const Token& key = expect_word("'atoms' or 'intervals'");
      expect_punct(':');
      if (key.text == "atoms") {
        std::set<std::string> seen;
        for (const auto& t : word_list()) {
          if (!seen.insert(t.text).second) throw ParseError(t.line, t.column, "duplicate atom '" + t.text + "'");
          labels.push_back(t.text);
        }
        have_atoms = true;
      } else if (key.text == "intervals") {
        intervals.emplace();
        expect_punct('[');
        while (!at_punct(']')) {
          expect_punct('(');
          Rational lo = number(expect_word("interval start"));
          expect_punct(',');
          Rational hi = number(expect_word("interval end"));
          expect_punct(')');
          intervals->push_back({lo, hi});
          if (!at_punct(']')) expect_punct(',');
        }
        next();
      } else {
        throw ParseError(key.line, key.column, "unknown space key '" + key.text + "'");
      }
      skip_comma();
    }
    next();
    if (!have_atoms) throw ParseError(head.line, head.column, "space stanza needs an atoms list");
    try {
      space_ = make_space(std::move(labels), std::move(intervals));
    } catch (const Error& e) {
      throw ParseError(head.line, head.column, e.what());
    }
    return space_;
  }

  void parse_body(Instance& inst, DeclKind kind, const std::string& name) {
    expect_punct('{');
    const std::size_t n = space_->size();
    if (kind == DeclKind::Measure1 || kind == DeclKind::Potential) {
      Measure1<Rational> m(space_);
      std::vector<bool> set(n, false);
      while (!at_punct('}')) {
        const Token& a = expect_word("atom");
        const std::size_t i = atom(a);
        if (set[i]) throw ParseError(a.line, a.column, "duplicate entry for '" + a.text + "'");
        set[i] = true;
        expect_punct(':');
        m(i) = number(expect_word("weight"));
        skip_comma();
      }
      inst.tables1.emplace(name, std::move(m));
    } else if (kind == DeclKind::Pairs) {
      PairSet e(n);
      while (!at_punct('}')) {
        auto [x, y, where] = pair();
        (void)where;
        e.insert(x, y);
        skip_comma();
      }
      inst.pair_sets.emplace(name, std::move(e));
    } else {
      Measure2<Rational> m(space_);
      std::vector<bool> set(n * n, false);
      while (!at_punct('}')) {
        auto [x, y, where] = pair();
        if (set[x * n + y]) throw ParseError(where.line, where.column, "duplicate pair entry");
        set[x * n + y] = true;
        expect_punct(':');
        m(x, y) = number(expect_word("weight"));
        skip_comma();
      }
      inst.tables2.emplace(name, std::move(m));
    }
    next();
  }

  std::tuple<std::size_t, std::size_t, Token> pair() {
    const Token open = expect_punct('(');
    const std::size_t x = atom(expect_word("atom"));
    expect_punct(',');
    const std::size_t y = atom(expect_word("atom"));
    expect_punct(')');
    return {x, y, open};
  }

  Problem parse_problem(const Token& head) {
    Problem p;
    p.line = head.line;
    p.column = head.column;
    p.op = expect_word("operation name").text;
    expect_punct('{');
    while (!at_punct('}')) {
      const Token& key = expect_word("argument name");
      if (p.find(key.text)) throw ParseError(key.line, key.column, "duplicate argument '" + key.text + "'");
      expect_punct(':');
      Value v;
      v.line = peek().line;
      v.column = peek().column;
      if (at_punct('[')) {
        v.is_list = true;
        for (const auto& t : word_list()) v.list.push_back(t.text);
      } else {
        v.word = expect_word("argument value").text;
      }
      p.args.emplace_back(key.text, std::move(v));
      skip_comma();
    }
    next();
    return p;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  SpacePtr space_;
};

std::string quote(const std::string& label) {
  bool plain = !label.empty();
  for (char c : label) {
    if (std::isspace(static_cast<unsigned char>(c)) || is_punct(c) || c == '#' || c == '"') plain = false;
  }
  return plain ? label : "\"" + label + "\"";
}

}  // namespace

Instance parse_instance(std::string_view text) { return Parser(text).run(); }

std::string emit_instance(const Instance& inst) {
  std::ostringstream os;
  const auto& sp = *inst.space;
  const std::size_t n = sp.size();
  os << "space {\n  atoms: [";
  for (std::size_t i = 0; i < n; ++i) os << (i ? ", " : "") << quote(sp.label(i));
  os << "]\n";
  if (sp.intervals()) {
    os << "  intervals: [";
    for (std::size_t i = 0; i < n; ++i) {
      const auto& iv = (*sp.intervals())[i];
      os << (i ? ", " : "") << "(" << format_number(iv.lo) << ", " << format_number(iv.hi) << ")";
    }
    os << "]\n";
  }
  os << "}\n";
  for (const auto& d : inst.order) {
    os << "\n" << decl_keyword(d.kind) << " " << quote(d.name) << " {\n";
    if (d.kind == DeclKind::Measure1 || d.kind == DeclKind::Potential) {
      const auto& m = inst.tables1.at(d.name);
      for (std::size_t i = 0; i < n; ++i) {
        if (m(i) != 0) os << "  " << quote(sp.label(i)) << ": " << format_number(m(i)) << "\n";
      }
    } else if (d.kind == DeclKind::Pairs) {
      const auto& e = inst.pair_sets.at(d.name);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (e.contains(x, y)) os << "  (" << quote(sp.label(x)) << ", " << quote(sp.label(y)) << ")\n";
    } else {
      const auto& m = inst.tables2.at(d.name);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (m(x, y) != 0) {
            os << "  (" << quote(sp.label(x)) << ", " << quote(sp.label(y)) << "): " << format_number(m(x, y)) << "\n";
          }
    }
    os << "}\n";
  }
  if (inst.problem) {
    os << "\nproblem " << inst.problem->op << " {\n";
    for (const auto& [k, v] : inst.problem->args) {
      os << "  " << k << ": ";
      if (v.is_list) {
        os << "[";
        for (std::size_t i = 0; i < v.list.size(); ++i) os << (i ? ", " : "") << quote(v.list[i]);
        os << "]";
      } else {
        os << quote(v.word);
      }
      os << "\n";
    }
    os << "}\n";
  }
  return os.str();
}

}  // namespace mflow::harness
