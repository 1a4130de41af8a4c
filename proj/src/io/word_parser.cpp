#include "nilmult/io/word_parser.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "nilmult/errors.hpp"

namespace nilmult {

bool operator==(const WordExpr& a, const WordExpr& b) { return a.terms == b.terms; }

bool operator==(const WordTerm& a, const WordTerm& b) {
  return a.kind == b.kind && a.generator == b.generator && a.exponent == b.exponent && a.parts == b.parts;
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(std::string_view text, GeneratorNames& names) : s_(text), names_(names) {}

  WordExpr parse() {
    WordExpr e = word();
    skip();
    if (pos_ != s_.size()) fail({"end of input", "term"});
    return e;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string msg = "offset " + std::to_string(pos_) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += " or ";
      msg += expected[i];
    }
    if (pos_ < s_.size()) msg += ", found '" + std::string(1, s_[pos_]) + "'";
    else msg += ", found end of input";
    throw ParseError(pos_, std::move(expected), msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at_term_start() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '[' || c == '(' || c == '1' || is_ident_start(c);
  }

  WordExpr word() {
    WordExpr e;
    if (!at_term_start()) fail({"term"});
    while (at_term_start()) e.terms.push_back(term());
    return e;
  }

  WordTerm term() {
    WordTerm t = atom();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      t.exponent = integer();
    }
    return t;
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    if (pos_ >= s_.size() || !is_digit(s_[pos_])) fail({"integer"});
    while (pos_ < s_.size() && is_digit(s_[pos_])) ++pos_;
    long v = 0;
    auto [p, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (ec != std::errc() || p != s_.data() + pos_) {
      pos_ = start;
      fail({"integer within range"});
    }
    return v;
  }

  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail({std::string("'") + c + "'"});
    ++pos_;
  }

  WordTerm atom() {
    skip();
    WordTerm t;
    const char c = s_[pos_];
    if (c == '[') {
      ++pos_;
      t.kind = WordTerm::Kind::Commutator;
      t.parts.push_back(word());
      expect(',');
      t.parts.push_back(word());
      expect(']');
    } else if (c == '(') {
      ++pos_;
      t.kind = WordTerm::Kind::Group;
      t.parts.push_back(word());
      expect(')');
    } else if (c == '1') {
      ++pos_;
      if (pos_ < s_.size() && is_ident_char(s_[pos_])) fail({"'^'", "term"});
      t.kind = WordTerm::Kind::Identity;
    } else {
      t.kind = WordTerm::Kind::Generator;
      t.generator = generator();
    }
    return t;
  }

  std::size_t generator() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
    std::string_view id = s_.substr(start, pos_ - start);
    if (id.size() > 1 && id[0] == 'x' && is_digit(id[1])) {
      std::size_t k = 1;
      while (k < id.size() && is_digit(id[k])) ++k;
      if (k == id.size()) {
        std::size_t g = 0;
        auto [p, ec] = std::from_chars(id.data() + 1, id.data() + id.size(), g);
        if (ec != std::errc() || g == 0 || id[1] == '0') {
          pos_ = start + 1;
          fail({"generator index >= 1 without leading zeros"});
        }
        return g;
      }
    }
    for (std::size_t i = 0; i < names_.names.size(); ++i)
      if (names_.names[i] == id) return i + 1;
    if (names_.frozen) {
      pos_ = start;
      fail({"known generator"});
    }
    names_.names.emplace_back(id);
    return names_.names.size();
  }

  std::string_view s_;
  GeneratorNames& names_;
  std::size_t pos_ = 0;
};

void print_into(std::string& out, const WordExpr& e, const GeneratorNames* names) {
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    if (i) out += ' ';
    const WordTerm& t = e.terms[i];
    switch (t.kind) {
      case WordTerm::Kind::Identity: out += '1'; break;
      case WordTerm::Kind::Generator:
        if (names && t.generator <= names->names.size()) out += names->names[t.generator - 1];
        else out += 'x' + std::to_string(t.generator);
        break;
      case WordTerm::Kind::Commutator:
        out += '[';
        print_into(out, t.parts[0], names);
        out += ',';
        print_into(out, t.parts[1], names);
        out += ']';
        break;
      case WordTerm::Kind::Group:
        out += '(';
        print_into(out, t.parts[0], names);
        out += ')';
        break;
    }
    if (t.exponent != 1) out += '^' + std::to_string(t.exponent);
  }
}

}  // namespace

WordExpr parse_word_expr(std::string_view text, GeneratorNames& names) {
  return Parser(text, names).parse();
}

WordExpr parse_word_expr(std::string_view text) {
  GeneratorNames names;
  return parse_word_expr(text, names);
}

std::string print_word(const WordExpr& e, const GeneratorNames* names) {
  std::string out;
  print_into(out, e, names);
  return out;
}

FreeGroupWord evaluate(const WordExpr& e) {
  FreeGroupWord w;
  for (const WordTerm& t : e.terms) {
    FreeGroupWord base;
    switch (t.kind) {
      case WordTerm::Kind::Identity: break;
      case WordTerm::Kind::Generator: base = FreeGroupWord::generator(t.generator); break;
      case WordTerm::Kind::Commutator: base = commutator(evaluate(t.parts[0]), evaluate(t.parts[1])); break;
      case WordTerm::Kind::Group: base = evaluate(t.parts[0]); break;
    }
    w = w * base.power(t.exponent);
  }
  return w;
}

FreeGroupWord parse_word(std::string_view text) { return evaluate(parse_word_expr(text)); }

FreeGroupWord parse_word(std::string_view text, GeneratorNames& names) {
  return evaluate(parse_word_expr(text, names));
}

}  // namespace nilmult
