#include "qlmc/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace qlmc {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out += (i + 1 == expected.size()) ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

std::string format_message(std::size_t offset, const std::vector<std::string>& expected,
                           const std::string& found) {
  std::ostringstream os;
  os << "syntax error at offset " << offset << ": expected " << join_expected(expected)
     << ", found " << found;
  return os.str();
}

enum class Tok {
  Ident,
  Zero,
  One,
  Bang,
  Star,
  LParen,
  RParen,
  Eq,
  Le,
  Perp,
  If,
  And,
  Then,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blanks();
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) return {Tok::End, "", start};
    const char c = text_[pos_];
    switch (c) {
      case '0':
        ++pos_;
        return {Tok::Zero, "0", start};
      case '1':
        ++pos_;
        return {Tok::One, "1", start};
      case '!':
        ++pos_;
        return {Tok::Bang, "!", start};
      case '*':
        ++pos_;
        return {Tok::Star, "*", start};
      case '(':
        ++pos_;
        return {Tok::LParen, "(", start};
      case ')':
        ++pos_;
        return {Tok::RParen, ")", start};
      case '=':
        ++pos_;
        return {Tok::Eq, "=", start};
      case '<':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
          pos_ += 2;
          return {Tok::Le, "<=", start};
        }
        break;
      case '_':
        if (pos_ + 2 < text_.size() && text_[pos_ + 1] == '|' && text_[pos_ + 2] == '_') {
          pos_ += 3;
          return {Tok::Perp, "_|_", start};
        }
        break;
      default:
        break;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t end = pos_ + 1;
      while (end < text_.size() &&
             ((text_[end] >= 'a' && text_[end] <= 'z') ||
              (text_[end] >= '0' && text_[end] <= '9') || text_[end] == '_'))
        ++end;
      std::string word(text_.substr(pos_, end - pos_));
      pos_ = end;
      if (word == "if") return {Tok::If, word, start};
      if (word == "and") return {Tok::And, word, start};
      if (word == "then") return {Tok::Then, word, start};
      return {Tok::Ident, std::move(word), start};
    }
    throw SyntaxError(start, {"a token"}, "'" + std::string(1, c) + "'");
  }

 private:
  void skip_blanks() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text), current_(lexer_.next()) {}

  Term term_only() {
    Term t = term();
    expect_end();
    return t;
  }

  Prop prop_only() {
    Prop p = prop();
    expect_end();
    return p;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected) {
    throw SyntaxError(current_.offset, std::move(expected), describe(current_));
  }

  void advance() { current_ = lexer_.next(); }

  void expect(Tok kind, const char* what) {
    if (current_.kind != kind) fail({what});
    advance();
  }

  void expect_end() {
    if (current_.kind != Tok::End) fail({"end of input"});
  }

  Term primary() {
    switch (current_.kind) {
      case Tok::Zero:
        advance();
        return Term::zero();
      case Tok::One:
        advance();
        return Term::one();
      case Tok::Ident: {
        Term t = Term::atom(current_.text);
        advance();
        return t;
      }
      case Tok::Bang:
        advance();
        return Term::neg(primary());
      case Tok::LParen: {
        advance();
        Term t = term();
        expect(Tok::RParen, "')'");
        return t;
      }
      default:
        fail({"'('", "'0'", "'1'", "'!'", "an identifier"});
    }
  }

  Term term() {
    Term t = primary();
    while (current_.kind == Tok::Star) {
      advance();
      t = Term::star(std::move(t), primary());
    }
    return t;
  }

  Equation equation() {
    Term lhs = term();
    switch (current_.kind) {
      case Tok::Eq:
        advance();
        return Equation{std::move(lhs), term()};
      case Tok::Le: {
        advance();
        Term rhs = term();
        // a <= b  ==>  a * b = a
        return Equation{Term::star(lhs, std::move(rhs)), lhs};
      }
      case Tok::Perp: {
        advance();
        Term rhs = term();
        // a _|_ b  ==>  a * b = 0
        return Equation{Term::star(std::move(lhs), std::move(rhs)), Term::zero()};
      }
      default:
        fail({"'='", "'<='", "'_|_'"});
    }
  }

  Prop prop() {
    std::vector<Equation> antecedents;
    while (current_.kind == Tok::If) {
      advance();
      antecedents.push_back(equation());
      while (current_.kind == Tok::And) {
        advance();
        antecedents.push_back(equation());
      }
      expect(Tok::Then, "'then'");
    }
    Equation conclusion = equation();
    return Prop{std::move(antecedents), std::move(conclusion)};
  }

  Lexer lexer_;
  Token current_;
};

// A `name:` label may use upper case and dashes; the proposition body never
// contains a colon, so the first colon decides.
bool split_label(std::string_view line, std::string& label, std::string_view& rest) {
  const std::size_t colon = line.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  std::size_t begin = 0;
  while (begin < colon && std::isspace(static_cast<unsigned char>(line[begin]))) ++begin;
  std::size_t end = colon;
  while (end > begin && std::isspace(static_cast<unsigned char>(line[end - 1]))) --end;
  if (begin >= end) return false;
  if (!std::isalpha(static_cast<unsigned char>(line[begin])) && line[begin] != '_') return false;
  for (std::size_t i = begin; i < end; ++i) {
    const char c = line[i];
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
  }
  label.assign(line.substr(begin, end - begin));
  rest = line.substr(colon + 1);
  return true;
}

bool blank_or_comment(std::string_view line) {
  for (const char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected, std::string found)
    : std::runtime_error(format_message(offset, expected, found)),
      offset_(offset),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

Term parse_term(std::string_view text) { return Parser(text).term_only(); }

Prop parse_prop(std::string_view text) { return Parser(text).prop_only(); }

std::vector<NamedProp> parse_qlp(std::string_view text) {
  std::vector<NamedProp> out;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (!blank_or_comment(line)) {
      std::string label;
      std::string_view body = line;
      const bool labeled = split_label(line, label, body);
      try {
        Prop p = parse_prop(body);
        out.push_back(NamedProp{labeled ? label : print_prop(p), std::move(p)});
      } catch (const SyntaxError& e) {
        const std::size_t body_offset = static_cast<std::size_t>(body.data() - text.data());
        throw SyntaxError(body_offset + e.offset(), e.expected(), e.found());
      }
    }
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }
  return out;
}

std::vector<NamedProp> parse_qlp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open proposition file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_qlp(buf.str());
}

}  // namespace qlmc
