#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algent/numbers.hpp"

namespace algent {

// Expression tree shared by the rational-function, tropical and
// piecewise-linear front ends.
struct ParseNode {
  enum class Kind { kNumber, kVariable, kNeg, kAdd, kSub, kMul, kDiv, kPow, kCall };
  Kind kind = Kind::kNumber;
  Int number;            // kNumber
  std::string name;      // kVariable, kCall
  long exponent = 0;     // kPow
  std::size_t pos = 0;   // source offset, for diagnostics
  std::vector<ParseNode> children;
};

struct ParseOptions {
  // Accept max(...) and min(...) calls.
  bool allow_calls = false;
  // Accept "2b" as 2*b (tropical tables are written this way).
  bool implicit_coefficients = false;
};

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view src, ParseOptions opt) : src_(src), opt_(opt) {}

  ParseNode parse() {
    ParseNode root = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected character '" + std::string(1, src_[pos_]) + "'");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static ParseNode binary(ParseNode::Kind k, ParseNode lhs, ParseNode rhs, std::size_t pos) {
    ParseNode n;
    n.kind = k;
    n.pos = pos;
    n.children.push_back(std::move(lhs));
    n.children.push_back(std::move(rhs));
    return n;
  }

  ParseNode expr() {
    ParseNode lhs = term();
    while (true) {
      std::size_t at = (skip_ws(), pos_);
      if (accept('+')) lhs = binary(ParseNode::Kind::kAdd, std::move(lhs), term(), at);
      else if (accept('-')) lhs = binary(ParseNode::Kind::kSub, std::move(lhs), term(), at);
      else return lhs;
    }
  }

  ParseNode term() {
    ParseNode lhs = factor();
    while (true) {
      std::size_t at = (skip_ws(), pos_);
      if (accept('*')) lhs = binary(ParseNode::Kind::kMul, std::move(lhs), factor(), at);
      else if (accept('/')) lhs = binary(ParseNode::Kind::kDiv, std::move(lhs), factor(), at);
      else return lhs;
    }
  }

  // Unary minus binds looser than '^': -x^2 is -(x^2).
  ParseNode factor() {
    std::size_t at = (skip_ws(), pos_);
    if (accept('-')) {
      ParseNode n;
      n.kind = ParseNode::Kind::kNeg;
      n.pos = at;
      n.children.push_back(factor());
      return n;
    }
    ParseNode b = base();
    at = (skip_ws(), pos_);
    if (accept('^')) {
      bool paren = accept('(');
      bool neg = accept('-');
      skip_ws();
      if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) fail("exponent must be an integer literal");
      Int e = integer();
      if (paren) expect(')');
      if (!e.fits_slong_p()) fail("exponent too large");
      ParseNode p;
      p.kind = ParseNode::Kind::kPow;
      p.pos = at;
      p.exponent = neg ? -e.get_si() : e.get_si();
      p.children.push_back(std::move(b));
      return p;
    }
    return b;
  }

  Int integer() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return Int(std::string(src_.substr(start, pos_ - start)));
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

  ParseNode base() {
    skip_ws();
    std::size_t at = pos_;
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      ParseNode inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      ParseNode n;
      n.kind = ParseNode::Kind::kNumber;
      n.pos = at;
      n.number = integer();
      if (opt_.implicit_coefficients && pos_ < src_.size() && ident_start(src_[pos_])) {
        ParseNode v = base();
        return binary(ParseNode::Kind::kMul, std::move(n), std::move(v), at);
      }
      return n;
    }
    if (ident_start(c)) {
      std::string name = identifier();
      if (peek('(')) {
        if (!opt_.allow_calls || (name != "max" && name != "min")) fail("unknown function '" + name + "'");
        ++pos_;
        ParseNode call;
        call.kind = ParseNode::Kind::kCall;
        call.name = name;
        call.pos = at;
        call.children.push_back(expr());
        while (accept(',')) call.children.push_back(expr());
        expect(')');
        return call;
      }
      ParseNode v;
      v.kind = ParseNode::Kind::kVariable;
      v.name = std::move(name);
      v.pos = at;
      return v;
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  ParseOptions opt_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ParseNode parse_expression(std::string_view src, ParseOptions opt = {}) {
  return detail::ExprParser(src, opt).parse();
}

}  // namespace algent
