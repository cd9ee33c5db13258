#include "qdpi/expr.hpp"

#include <cctype>
#include <charconv>
#include <string_view>

#include "qdpi/channel_io.hpp"

namespace qdpi {
namespace {

const std::vector<std::string> kConstructors{"id", "twopauli", "erase",
                                             "mix", "compose", "kraus"};

std::string describe(SourcePos pos) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.column);
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out;
}

bool token_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == ')' ||
         c == ',' || c == '"' || c == '.' || c == '-' || c == '+' || c == '_';
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  ChannelExpr parse() {
    ChannelExpr e = parse_expr();
    skip_ws();
    if (!at_end()) fail_unexpected({"end of input"});
    return e;
  }

 private:
  std::string_view src_;
  std::size_t i_ = 0;
  SourcePos pos_;

  bool at_end() const { return i_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[i_]; }

  void advance() {
    if (src_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  [[noreturn]] void fail_unexpected(std::vector<std::string> expected) {
    const std::string tail = " at " + describe(pos_) + ", expected " + join(expected);
    if (at_end()) {
      throw ParseError(ParseError::Kind::Syntax, "unexpected end of input" + tail, pos_,
                       std::move(expected));
    }
    const char c = peek();
    const bool lexical = !token_char(c);
    const std::string head =
        lexical ? std::string("unexpected character '") + c + "'"
                : std::string("unexpected '") + c + "'";
    throw ParseError(lexical ? ParseError::Kind::Lexical : ParseError::Kind::Syntax,
                     head + tail, pos_, std::move(expected));
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail_unexpected({std::string("'") + c + "'"});
    advance();
  }

  std::string identifier() {
    std::string out;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) {
      out += peek();
      advance();
    }
    return out;
  }

  /// Optional sign, digits, optional fraction. Returns the lexeme.
  std::string number_lexeme(const std::string& what) {
    skip_ws();
    const std::size_t start = i_;
    const SourcePos start_pos = pos_;
    if (peek() == '-' || peek() == '+') advance();
    const std::size_t digits_start = i_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
    if (i_ == digits_start) {
      i_ = start;  // report at the start of the number
      pos_ = start_pos;
      fail_unexpected({what});
    }
    if (peek() == '.') {
      advance();
      const std::size_t frac_start = i_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
      if (i_ == frac_start) fail_unexpected({"digit"});
    }
    return std::string(src_.substr(start, i_ - start));
  }

  std::size_t parse_int() {
    skip_ws();
    const SourcePos at = pos_;
    const std::string lex = number_lexeme("INT");
    if (lex.find('.') != std::string::npos) {
      throw ParseError(ParseError::Kind::Syntax,
                       "expected an integer at " + describe(at) + ", got " + lex, at,
                       {"INT"});
    }
    const std::string_view digits =
        lex[0] == '+' || lex[0] == '-' ? std::string_view(lex).substr(1) : lex;
    std::size_t value = 0;
    const auto res = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (res.ec != std::errc{} || lex[0] == '-' || value == 0) {
      throw ParseError(ParseError::Kind::Range,
                       "dimension at " + describe(at) + " must be a positive integer, got " +
                           lex,
                       at);
    }
    return value;
  }

  double parse_unit_float(const char* what) {
    skip_ws();
    const SourcePos at = pos_;
    const std::string lex = number_lexeme("FLOAT");
    const std::string_view body =
        lex[0] == '+' ? std::string_view(lex).substr(1) : std::string_view(lex);
    double value = 0.0;
    std::from_chars(body.data(), body.data() + body.size(), value);
    if (!(value >= 0.0 && value <= 1.0)) {
      throw ParseError(ParseError::Kind::Range,
                       std::string(what) + " at " + describe(at) + " must lie in [0, 1], got " +
                           lex,
                       at);
    }
    return value;
  }

  std::string parse_path() {
    skip_ws();
    std::string out;
    if (peek() == '"') {
      advance();
      while (!at_end() && peek() != '"') {
        if (peek() == '\\') {
          advance();
          if (at_end()) break;
        }
        if (peek() == '\n') break;
        out += peek();
        advance();
      }
      if (peek() != '"') fail_unexpected({"'\"'"});
      advance();
      return out;
    }
    while (!at_end() && peek() != ')' && peek() != '\n') {
      out += peek();
      advance();
    }
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) {
      out.pop_back();
    }
    if (out.empty()) fail_unexpected({"PATH"});
    return out;
  }

  ExprPtr sub() { return std::make_shared<const ChannelExpr>(parse_expr()); }

  ChannelExpr parse_expr() {
    skip_ws();
    const SourcePos at = pos_;
    const std::size_t start = i_;
    const std::string name = identifier();
    bool known = false;
    for (const auto& k : kConstructors) known = known || k == name;
    if (!known) {
      i_ = start;
      pos_ = at;
      fail_unexpected(kConstructors);
    }
    expect('(');
    ChannelExpr e{IdExpr{0}, at};
    if (name == "id") {
      e.node = IdExpr{parse_int()};
    } else if (name == "erase") {
      e.node = EraseExpr{parse_int()};
    } else if (name == "twopauli") {
      e.node = TwoPauliExpr{parse_unit_float("twopauli parameter")};
    } else if (name == "kraus") {
      e.node = KrausExpr{parse_path()};
    } else if (name == "mix") {
      const double c = parse_unit_float("mix weight");
      expect(',');
      ExprPtr first = sub();
      expect(',');
      ExprPtr second = sub();
      e.node = MixExpr{c, std::move(first), std::move(second)};
    } else {
      ExprPtr outer = sub();
      expect(',');
      ExprPtr inner = sub();
      e.node = ComposeExpr{std::move(outer), std::move(inner)};
    }
    expect(')');
    return e;
  }
};

bool dims_clash(const std::optional<std::size_t>& a, const std::optional<std::size_t>& b) {
  return a && b && *a != *b;
}

std::string dim_text(const std::optional<std::size_t>& d) {
  return d ? std::to_string(*d) : "?";
}

std::string format_float(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed);
  std::string s(buf, res.ptr);
  if (s.find('.') == std::string::npos) s += ".0";
  return s;
}

std::string quote_path(const std::string& path) {
  std::string out = "\"";
  for (const char c : path) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

ParseError::ParseError(Kind kind, const std::string& message, SourcePos pos,
                       std::vector<std::string> expected)
    : ValidationError(message), kind_(kind), pos_(pos), expected_(std::move(expected)) {}

bool operator==(const ChannelExpr& a, const ChannelExpr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      Overloaded{
          [&](const IdExpr& x) { return x.dim == std::get<IdExpr>(b.node).dim; },
          [&](const TwoPauliExpr& x) { return x.x == std::get<TwoPauliExpr>(b.node).x; },
          [&](const EraseExpr& x) { return x.dim == std::get<EraseExpr>(b.node).dim; },
          [&](const MixExpr& x) {
            const auto& y = std::get<MixExpr>(b.node);
            return x.c == y.c && *x.first == *y.first && *x.second == *y.second;
          },
          [&](const ComposeExpr& x) {
            const auto& y = std::get<ComposeExpr>(b.node);
            return *x.outer == *y.outer && *x.inner == *y.inner;
          },
          [&](const KrausExpr& x) { return x.path == std::get<KrausExpr>(b.node).path; },
      },
      a.node);
}

ChannelType infer_type(const ChannelExpr& expr) {
  return std::visit(
      Overloaded{
          [](const IdExpr& x) { return ChannelType{x.dim, x.dim}; },
          [](const TwoPauliExpr&) { return ChannelType{2, 2}; },
          [](const EraseExpr& x) { return ChannelType{x.dim, x.dim}; },
          [](const KrausExpr&) { return ChannelType{}; },
          [&](const MixExpr& x) {
            const ChannelType a = infer_type(*x.first);
            const ChannelType b = infer_type(*x.second);
            if (dims_clash(a.dimIn, b.dimIn) || dims_clash(a.dimOut, b.dimOut)) {
              throw ParseError(ParseError::Kind::Dimension,
                               "mix at " + describe(expr.pos) + ": operands have shapes " +
                                   dim_text(a.dimIn) + "->" + dim_text(a.dimOut) + " and " +
                                   dim_text(b.dimIn) + "->" + dim_text(b.dimOut),
                               expr.pos);
            }
            return ChannelType{a.dimIn ? a.dimIn : b.dimIn, a.dimOut ? a.dimOut : b.dimOut};
          },
          [&](const ComposeExpr& x) {
            const ChannelType outer = infer_type(*x.outer);
            const ChannelType inner = infer_type(*x.inner);
            if (dims_clash(inner.dimOut, outer.dimIn)) {
              throw ParseError(ParseError::Kind::Dimension,
                               "compose at " + describe(expr.pos) +
                                   ": inner channel outputs dimension " +
                                   dim_text(inner.dimOut) + " but outer expects " +
                                   dim_text(outer.dimIn),
                               expr.pos);
            }
            return ChannelType{inner.dimIn, outer.dimOut};
          },
      },
      expr.node);
}

ChannelExpr parse_channel(const std::string& text) {
  ChannelExpr e = Parser(text).parse();
  infer_type(e);
  return e;
}

std::string to_string(const ChannelExpr& expr) {
  return std::visit(
      Overloaded{
          [](const IdExpr& x) { return "id(" + std::to_string(x.dim) + ")"; },
          [](const TwoPauliExpr& x) { return "twopauli(" + format_float(x.x) + ")"; },
          [](const EraseExpr& x) { return "erase(" + std::to_string(x.dim) + ")"; },
          [](const MixExpr& x) {
            return "mix(" + format_float(x.c) + ", " + to_string(*x.first) + ", " +
                   to_string(*x.second) + ")";
          },
          [](const ComposeExpr& x) {
            return "compose(" + to_string(*x.outer) + ", " + to_string(*x.inner) + ")";
          },
          [](const KrausExpr& x) { return "kraus(" + quote_path(x.path) + ")"; },
      },
      expr.node);
}

KrausChannel eval_channel(const ChannelExpr& expr, const std::filesystem::path& base_dir) {
  return std::visit(
      Overloaded{
          [](const IdExpr& x) { return identity_channel(x.dim); },
          [](const TwoPauliExpr& x) { return two_pauli(x.x); },
          [](const EraseExpr& x) { return erasure_channel(x.dim); },
          [&](const KrausExpr& x) {
            const std::filesystem::path p(x.path);
            return load_kraus_file(p.is_absolute() || base_dir.empty() ? p : base_dir / p);
          },
          [&](const MixExpr& x) {
            const KrausChannel a = eval_channel(*x.first, base_dir);
            const KrausChannel b = eval_channel(*x.second, base_dir);
            try {
              return mix(x.c, a, b);
            } catch (const DimensionError& e) {
              throw DimensionError("mix at " + describe(expr.pos) + ": " + e.what());
            }
          },
          [&](const ComposeExpr& x) {
            const KrausChannel outer = eval_channel(*x.outer, base_dir);
            const KrausChannel inner = eval_channel(*x.inner, base_dir);
            try {
              return compose(outer, inner);
            } catch (const DimensionError& e) {
              throw DimensionError("compose at " + describe(expr.pos) + ": " + e.what());
            }
          },
      },
      expr.node);
}

}  // namespace qdpi
