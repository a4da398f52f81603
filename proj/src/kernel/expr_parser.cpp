#include "thv/expr_parser.hpp"

#include <cctype>

#include "thv/errors.hpp"

namespace thv::text {

namespace {

enum class Tok { Number, Param, Gen, Ket, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (i_ >= s_.size()) {
        out.push_back({Tok::End, "", i_});
        return out;
      }
      const std::size_t start = i_;
      const char c = s_[i_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        out.push_back({Tok::Number, std::string(s_.substr(start, i_ - start)), start});
      } else if (c == '|') {
        if (s_.substr(i_, 3) != "|0>") fail(start, "expected '|0>'");
        i_ += 3;
        out.push_back({Tok::Ket, "|0>", start});
      } else if ((c == 'L' || c == 'I') && i_ + 1 < s_.size() && s_[i_ + 1] == '[') {
        const auto close = s_.find(']', i_);
        if (close == std::string_view::npos) fail(start, "unterminated generator index");
        i_ = close + 1;
        out.push_back({Tok::Gen, std::string(s_.substr(start, i_ - start)), start});
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
        std::string word(s_.substr(start, i_ - start));
        if (word == "c1" || word == "c2" || word == "c3" || word == "k1" || word == "k3")
          out.push_back({Tok::Gen, word, start});
        else if (param_from_name(word))
          out.push_back({Tok::Param, word, start});
        else
          fail(start, "unknown symbol '" + word + "'");
      } else {
        Tok k;
        switch (c) {
          case '+': k = Tok::Plus; break;
          case '-': k = Tok::Minus; break;
          case '*': k = Tok::Star; break;
          case '/': k = Tok::Slash; break;
          case '^': k = Tok::Caret; break;
          case '(': k = Tok::LParen; break;
          case ')': k = Tok::RParen; break;
          default: fail(start, std::string("unexpected character '") + c + "'");
        }
        ++i_;
        out.push_back({k, std::string(1, c), start});
      }
    }
  }

  [[noreturn]] void fail(std::size_t pos, const std::string& msg) const {
    throw ParseError("parse error at column " + std::to_string(pos + 1) + " of '" + std::string(s_) +
                     "': " + msg);
  }

 private:
  void skip_space() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  Parser(std::string_view src, std::vector<Token> toks) : src_(src), toks_(std::move(toks)) {}

  std::vector<ParsedTerm> parse_all() {
    auto terms = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return terms;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("parse error at column " + std::to_string(peek().pos + 1) + " of '" +
                     std::string(src_) + "': " + msg);
  }

  std::vector<ParsedTerm> expr() {
    std::vector<ParsedTerm> out;
    bool negate = false;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) negate = next().kind == Tok::Minus;
    while (true) {
      ParsedTerm t = term();
      if (negate) t.coeff = -t.coeff;
      out.push_back(std::move(t));
      if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
        negate = next().kind == Tok::Minus;
      } else {
        return out;
      }
    }
  }

  static bool starts_factor(Tok k) {
    return k == Tok::Number || k == Tok::Param || k == Tok::Gen || k == Tok::Ket || k == Tok::LParen;
  }

  ParsedTerm term() {
    ParsedTerm t{ParamPoly(1), {}, false};
    factor_into(t, false);
    while (true) {
      const Tok k = peek().kind;
      if (k == Tok::Star) {
        next();
        factor_into(t, false);
      } else if (k == Tok::Slash) {
        next();
        factor_into(t, true);
      } else if (k == Tok::Gen || k == Tok::Ket) {
        factor_into(t, false);
      } else if (starts_factor(k) && !t.word.empty()) {
        fail("scalar factors must precede generators");
      } else {
        return t;
      }
    }
  }

  void factor_into(ParsedTerm& t, bool divide) {
    if (t.ket) fail("nothing may follow '|0>'");
    const Token& tok = peek();
    if (tok.kind == Tok::Gen || tok.kind == Tok::Ket) {
      if (divide) fail("cannot divide by a generator");
      next();
      if (peek().kind == Tok::Caret) fail("powers of generators are not supported");
      if (tok.kind == Tok::Ket)
        t.ket = true;
      else
        t.word.push_back(tok.text);
      return;
    }
    if (!t.word.empty()) fail("scalar factors must precede generators");
    ParamPoly value = scalar_primary();
    if (peek().kind == Tok::Caret) {
      next();
      if (peek().kind != Tok::Number) fail("expected integer exponent");
      value = value.pow(static_cast<unsigned>(std::stoul(next().text)));
    }
    if (divide) {
      const auto c = value.constant_value();
      if (!c) fail("can only divide by a constant");
      if (c->is_zero()) fail("division by zero");
      t.coeff *= Rational(1) / *c;
    } else {
      t.coeff *= value;
    }
  }

  ParamPoly scalar_primary() {
    const Token tok = next();
    switch (tok.kind) {
      case Tok::Number: return ParamPoly(Rational::parse(tok.text));
      case Tok::Param: return ParamPoly::var(*param_from_name(tok.text));
      case Tok::LParen: {
        auto inner = expr();
        if (peek().kind != Tok::RParen) fail("expected ')'");
        next();
        ParamPoly sum;
        for (auto& it : inner) {
          if (!it.word.empty() || it.ket) fail("parentheses may only enclose scalars");
          sum += it.coeff;
        }
        return sum;
      }
      default: --i_; fail("expected a number, parameter, or '('");
    }
  }

  std::string_view src_;
  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

std::vector<ParsedTerm> parse_linear(std::string_view text) {
  Lexer lex(text);
  Parser p(text, lex.run());
  return p.parse_all();
}

}  // namespace thv::text
