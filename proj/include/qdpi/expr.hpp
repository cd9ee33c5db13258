#pragma once

// Channel expressions.
//
//   expr := "id(" INT ")" | "twopauli(" FLOAT ")" | "erase(" INT ")"
//         | "mix(" FLOAT "," expr "," expr ")" | "compose(" expr "," expr ")"
//         | "kraus(" PATH ")"
//
// Whitespace is allowed between tokens. FLOAT is decimal (no exponent).
// PATH is either a double-quoted string (with \" and \\ escapes) or a bare
// run of characters up to the closing parenthesis.

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qdpi/channel.hpp"
#include "qdpi/errors.hpp"

namespace qdpi {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public ValidationError {
 public:
  enum class Kind { Lexical, Syntax, Dimension, Range };

  ParseError(Kind kind, const std::string& message, SourcePos pos,
             std::vector<std::string> expected = {});

  Kind kind() const { return kind_; }
  SourcePos pos() const { return pos_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  Kind kind_;
  SourcePos pos_;
  std::vector<std::string> expected_;
};

struct ChannelExpr;
using ExprPtr = std::shared_ptr<const ChannelExpr>;

struct IdExpr {
  std::size_t dim;
};
struct TwoPauliExpr {
  double x;
};
struct EraseExpr {
  std::size_t dim;
};
struct MixExpr {
  double c;
  ExprPtr first;
  ExprPtr second;
};
struct ComposeExpr {
  ExprPtr outer;
  ExprPtr inner;
};
struct KrausExpr {
  std::string path;
};

struct ChannelExpr {
  std::variant<IdExpr, TwoPauliExpr, EraseExpr, MixExpr, ComposeExpr, KrausExpr> node;
  SourcePos pos;  // not part of equality
};

/// Structural equality; source positions are ignored.
bool operator==(const ChannelExpr& a, const ChannelExpr& b);

/// Input/output dimensions; unknown for kraus(...) leaves until loaded.
struct ChannelType {
  std::optional<std::size_t> dimIn;
  std::optional<std::size_t> dimOut;
};

/// Parses and type-checks. Throws ParseError.
ChannelExpr parse_channel(const std::string& text);
ChannelType infer_type(const ChannelExpr& expr);

/// Canonical text; parse_channel(to_string(e)) == e.
std::string to_string(const ChannelExpr& expr);

/// Builds the channel; kraus paths are resolved against `base_dir`.
/// Throws IoError, ValidationError or DimensionError with node positions.
KrausChannel eval_channel(const ChannelExpr& expr,
                          const std::filesystem::path& base_dir = {});

}  // namespace qdpi
