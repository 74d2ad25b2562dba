#include "invsem/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace invsem {

AlgebraPtr Document::algebra(const std::string& name) const {
  for (const auto& a : algebras)
    if (a->name == name) return a;
  return nullptr;
}

SemimodulePtr Document::semimodule(const std::string& name) const {
  for (const auto& m : semimodules)
    if (m->name == name) return m;
  return nullptr;
}

namespace {

struct Token {
  std::string text;
  int line;
};

struct Lexer {
  std::vector<Token> tokens;
  size_t pos = 0;

  explicit Lexer(const std::string& text) {
    int line = 1;
    std::string cur;
    bool comment = false;
    const auto flush = [&] {
      if (!cur.empty()) tokens.push_back({cur, line});
      cur.clear();
    };
    for (char c : text) {
      if (c == '\n') {
        flush();
        comment = false;
        ++line;
        continue;
      }
      if (comment) continue;
      if (c == '#') {
        flush();
        comment = true;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c)))
        flush();
      else
        cur.push_back(c);
    }
    flush();
  }

  bool done() const { return pos >= tokens.size(); }
  const Token& peek() const {
    if (done()) throw input_error("unexpected end of input");
    return tokens[pos];
  }
  Token next() {
    Token t = peek();
    ++pos;
    return t;
  }
  int next_int(const char* what) {
    Token t = next();
    int value = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || p != t.text.data() + t.text.size())
      throw input_error("line " + std::to_string(t.line) + ": expected " + what +
                        ", got '" + t.text + "'");
    return value;
  }
};

[[noreturn]] void fail_at(const Token& t, const std::string& msg) {
  throw input_error("line " + std::to_string(t.line) + ": " + msg);
}

BinaryTable read_square(Lexer& lex, int n, const char* what) {
  BinaryTable t(static_cast<size_t>(n) * n);
  for (int i = 0; i < n * n; ++i) t[i] = lex.next_int(what);
  return t;
}

AlgebraPtr parse_algebra_block(Lexer& lex) {
  Token name_tok = lex.next();
  auto a = std::make_shared<AlgebraTable>();
  a->name = name_tok.text;
  bool have_size = false, have_join = false, have_mult = false, have_one = false;
  while (true) {
    Token kw = lex.next();
    if (kw.text == "end") break;
    if (kw.text == "size") {
      a->size = lex.next_int("size");
      if (a->size <= 0) fail_at(kw, "size must be positive");
      have_size = true;
    } else if (kw.text == "elements") {
      if (!have_size) fail_at(kw, "elements before size");
      a->display.clear();
      for (int i = 0; i < a->size; ++i) a->display.push_back(lex.next().text);
    } else if (kw.text == "join") {
      if (!have_size) fail_at(kw, "join before size");
      a->join = read_square(lex, a->size, "join entry");
      have_join = true;
    } else if (kw.text == "mult") {
      if (!have_size) fail_at(kw, "mult before size");
      a->mult = read_square(lex, a->size, "mult entry");
      have_mult = true;
    } else if (kw.text == "one") {
      a->one = lex.next_int("one");
      have_one = true;
    } else if (kw.text == "zero") {
      a->zero = lex.next_int("zero");
    } else if (kw.text == "lneg" || kw.text == "rneg") {
      if (!have_size) fail_at(kw, kw.text + " before size");
      UnaryTable t(a->size);
      for (int i = 0; i < a->size; ++i) t[i] = lex.next_int("negation entry");
      if (kw.text == "lneg")
        a->lneg = std::move(t);
      else
        a->rneg = std::move(t);
    } else {
      fail_at(kw, "unknown keyword '" + kw.text + "' in algebra block");
    }
  }
  if (!have_size) fail_at(name_tok, "algebra '" + a->name + "' has no size");
  if (!have_join) fail_at(name_tok, "algebra '" + a->name + "' has no join table");
  if (!have_mult) fail_at(name_tok, "algebra '" + a->name + "' has no mult table");
  if (!have_one) fail_at(name_tok, "algebra '" + a->name + "' has no one");
  const auto in_range = [&](Idx v) { return v >= 0 && v < a->size; };
  for (Idx v : a->join)
    if (!in_range(v)) fail_at(name_tok, "join entry out of range in '" + a->name + "'");
  for (Idx v : a->mult)
    if (!in_range(v)) fail_at(name_tok, "mult entry out of range in '" + a->name + "'");
  if (!in_range(a->one)) fail_at(name_tok, "one out of range in '" + a->name + "'");
  if (a->zero && !in_range(*a->zero))
    fail_at(name_tok, "zero out of range in '" + a->name + "'");
  for (const auto* t : {&a->lneg, &a->rneg})
    if (t->has_value())
      for (Idx v : **t)
        if (!in_range(v))
          fail_at(name_tok, "negation entry out of range in '" + a->name + "'");
  return a;
}

SemimodulePtr parse_semimodule_block(Lexer& lex, const Document& doc) {
  Token name_tok = lex.next();
  auto m = std::make_shared<SemimoduleTable>();
  m->name = name_tok.text;
  Token over_kw = lex.next();
  if (over_kw.text != "over") fail_at(over_kw, "expected 'over' after semimodule name");
  Token over_name = lex.next();
  m->over = doc.algebra(over_name.text);
  if (!m->over)
    fail_at(over_name, "semimodule '" + m->name + "' references unknown algebra '" +
                           over_name.text + "'");
  bool have_size = false, have_join = false, have_zero = false, have_action = false;
  while (true) {
    Token kw = lex.next();
    if (kw.text == "end") break;
    if (kw.text == "size") {
      m->size = lex.next_int("size");
      if (m->size <= 0) fail_at(kw, "size must be positive");
      have_size = true;
    } else if (kw.text == "elements") {
      if (!have_size) fail_at(kw, "elements before size");
      m->display.clear();
      for (int i = 0; i < m->size; ++i) m->display.push_back(lex.next().text);
    } else if (kw.text == "join") {
      if (!have_size) fail_at(kw, "join before size");
      m->join = read_square(lex, m->size, "join entry");
      have_join = true;
    } else if (kw.text == "zero") {
      m->zero = lex.next_int("zero");
      have_zero = true;
    } else if (kw.text == "action") {
      if (!have_size) fail_at(kw, "action before size");
      m->action.resize(static_cast<size_t>(m->over->size) * m->size);
      for (int i = 0; i < m->over->size * m->size; ++i)
        m->action[i] = lex.next_int("action entry");
      have_action = true;
    } else {
      fail_at(kw, "unknown keyword '" + kw.text + "' in semimodule block");
    }
  }
  if (!have_size) fail_at(name_tok, "semimodule '" + m->name + "' has no size");
  if (!have_join) fail_at(name_tok, "semimodule '" + m->name + "' has no join table");
  if (!have_zero) fail_at(name_tok, "semimodule '" + m->name + "' has no zero");
  if (!have_action) fail_at(name_tok, "semimodule '" + m->name + "' has no action table");
  const auto in_range = [&](Idx v) { return v >= 0 && v < m->size; };
  for (Idx v : m->join)
    if (!in_range(v)) fail_at(name_tok, "join entry out of range in '" + m->name + "'");
  for (Idx v : m->action)
    if (!in_range(v)) fail_at(name_tok, "action entry out of range in '" + m->name + "'");
  if (!in_range(m->zero)) fail_at(name_tok, "zero out of range in '" + m->name + "'");
  return m;
}

}  // namespace

Document parse_document(const std::string& text) {
  Lexer lex(text);
  Document doc;
  while (!lex.done()) {
    Token kw = lex.next();
    if (kw.text == "algebra") {
      doc.algebras.push_back(parse_algebra_block(lex));
    } else if (kw.text == "semimodule") {
      doc.semimodules.push_back(parse_semimodule_block(lex, doc));
    } else {
      fail_at(kw, "expected 'algebra' or 'semimodule', got '" + kw.text + "'");
    }
  }
  if (doc.algebras.empty() && doc.semimodules.empty())
    throw input_error("no algebra in input");
  return doc;
}

AlgebraPtr parse_algebra(const std::string& text) {
  Document doc = parse_document(text);
  if (doc.algebras.empty()) throw input_error("no algebra in input");
  return doc.algebras.front();
}

namespace {

void emit_rows(std::ostringstream& out, const BinaryTable& t, int rows, int cols) {
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c) out << ' ';
      out << t[r * cols + c];
    }
    out << '\n';
  }
}

// Display names survive a round-trip only when they tokenize cleanly.
bool emittable_names(const std::vector<std::string>& names) {
  for (const auto& s : names) {
    if (s.empty()) return false;
    for (char c : s)
      if (std::isspace(static_cast<unsigned char>(c)) || c == '#') return false;
  }
  return true;
}

}  // namespace

std::string emit(const AlgebraTable& a) {
  std::ostringstream out;
  out << "algebra " << (a.name.empty() ? "unnamed" : a.name) << '\n';
  out << "size " << a.size << '\n';
  if (!a.display.empty() && emittable_names(a.display)) {
    out << "elements";
    for (const auto& s : a.display) out << ' ' << s;
    out << '\n';
  }
  out << "join\n";
  emit_rows(out, a.join, a.size, a.size);
  out << "mult\n";
  emit_rows(out, a.mult, a.size, a.size);
  out << "one " << a.one << '\n';
  if (a.zero) out << "zero " << *a.zero << '\n';
  for (const auto* t : {&a.lneg, &a.rneg}) {
    if (!t->has_value()) continue;
    out << (t == &a.lneg ? "lneg" : "rneg");
    for (Idx v : **t) out << ' ' << v;
    out << '\n';
  }
  out << "end\n";
  return out.str();
}

std::string emit(const SemimoduleTable& m) {
  std::ostringstream out;
  out << "semimodule " << (m.name.empty() ? "unnamed" : m.name) << " over "
      << m.over->name << '\n';
  out << "size " << m.size << '\n';
  if (!m.display.empty() && emittable_names(m.display)) {
    out << "elements";
    for (const auto& s : m.display) out << ' ' << s;
    out << '\n';
  }
  out << "join\n";
  emit_rows(out, m.join, m.size, m.size);
  out << "zero " << m.zero << '\n';
  out << "action\n";
  emit_rows(out, m.action, m.over->size, m.size);
  out << "end\n";
  return out.str();
}

std::string emit(const Document& d) {
  std::string out;
  for (const auto& a : d.algebras) out += emit(*a) + "\n";
  for (const auto& m : d.semimodules) out += emit(*m) + "\n";
  return out;
}

}  // namespace invsem
