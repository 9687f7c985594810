#include "ropen/expr.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "ropen/errors.hpp"

namespace ropen::expr {

namespace {

struct Keyword {
  std::string_view text;
  Op op;
  std::size_t arity;  // expression arguments
};

constexpr Keyword kKeywords[] = {
    {"I", Op::Interval, 0},  {"pt", Op::Point, 0},    {"cl", Op::Cl, 1},       {"int", Op::Int, 1},
    {"reg", Op::Reg, 1},     {"perp", Op::Perp, 1},   {"neg", Op::Neg, 1},     {"join", Op::Join, 2},
    {"meet", Op::Meet, 2},   {"union", Op::Union, 2}, {"inter", Op::Inter, 2}, {"diff", Op::Diff, 2},
};

const Keyword* keyword(std::string_view word) {
  for (const auto& k : kKeywords) {
    if (k.text == word) return &k;
  }
  return nullptr;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    Expr e = expr();
    skip_ws();
    if (pos_ < text_.size()) fail({"end of input"});
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  std::string found() const {
    if (pos_ >= text_.size()) return "end of input";
    std::size_t end = pos_ + 1;
    if (std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
      while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) ++end;
    }
    return "'" + std::string(text_.substr(pos_, end - pos_)) + "'";
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw SyntaxError(line_, col_, std::move(expected), found());
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail({std::string("'") + c + "'"});
    advance();
  }

  std::optional<std::string> ident() {
    skip_ws();
    if (pos_ >= text_.size()) return std::nullopt;
    const char c = text_[pos_];
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') return std::nullopt;
    std::string out;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      out += text_[pos_];
      advance();
    }
    return out;
  }

  std::string digits(const char* what) {
    std::string out;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      out += text_[pos_];
      advance();
    }
    if (out.empty()) fail({what});
    return out;
  }

  Rational rat() {
    skip_ws();
    std::string text;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      text += '-';
      advance();
    }
    text += digits("integer");
    if (pos_ < text_.size() && text_[pos_] == '/') {
      advance();
      const std::size_t line = line_;
      const std::size_t col = col_;
      const std::string den = digits("positive integer");
      if (std::all_of(den.begin(), den.end(), [](char c) { return c == '0'; })) {
        throw SyntaxError(line, col, {"positive integer"}, "'" + den + "'");
      }
      text += "/" + den;
    }
    return Rational::parse(text);
  }

  Expr expr() {
    auto word = ident();
    if (!word) fail({"identifier", "I", "pt", "cl", "int", "reg", "perp", "neg", "join", "meet", "union", "inter", "diff"});
    const Keyword* k = keyword(*word);
    Expr e;
    if (!k) {
      e.op = Op::Var;
      e.name = std::move(*word);
      return e;
    }
    e.op = k->op;
    expect('(');
    if (k->op == Op::Interval) {
      e.bounds.push_back(rat());
      expect(',');
      e.bounds.push_back(rat());
    } else if (k->op == Op::Point) {
      e.bounds.push_back(rat());
    } else {
      e.args.push_back(expr());
      if (k->arity == 2) {
        expect(',');
        e.args.push_back(expr());
      }
    }
    expect(')');
    return e;
  }
};

Region require_space(const Region& r, const SpaceRef& space, const std::string& name) {
  if (!same_space(r.space(), space)) {
    throw Error(ErrorCode::SpaceMismatch, "'" + name + "' is bound over " + r.space()->str() + ", not " + space->str());
  }
  return r;
}

Region eval_region(const Expr& e, const SpaceRef& space, const Bindings& bindings) {
  auto arg = [&](std::size_t i) { return eval_region(e.args.at(i), space, bindings); };
  switch (e.op) {
    case Op::Var: {
      auto it = bindings.find(e.name);
      if (it == bindings.end()) throw Error(ErrorCode::UnboundName, "'" + e.name + "' is not bound");
      return require_space(it->second, space, e.name);
    }
    case Op::Interval:
      if (e.bounds.at(1) < e.bounds.at(0)) {
        throw Error(ErrorCode::InvalidInput, "I(" + e.bounds[0].str() + "," + e.bounds[1].str() + ") is reversed");
      }
      return make_region(space, {Span::open(e.bounds[0], e.bounds[1])});
    case Op::Point: return make_region(space, {Span::point(e.bounds.at(0))});
    case Op::Cl: return closure(arg(0));
    case Op::Int: return interior(arg(0));
    case Op::Reg: return regularize(arg(0)).region();
    case Op::Perp:
    case Op::Neg: return perp(arg(0));
    case Op::Join: return regularize(unite(arg(0), arg(1))).region();
    case Op::Meet:
    case Op::Inter: return intersect(arg(0), arg(1));
    case Op::Union: return unite(arg(0), arg(1));
    case Op::Diff: return difference(arg(0), arg(1));
  }
  throw std::logic_error("unhandled expression operator");
}

}  // namespace

std::string_view to_string(Op op) {
  if (op == Op::Var) return "var";
  for (const auto& k : kKeywords) {
    if (k.op == op) return k.text;
  }
  return "var";
}

std::size_t Expr::depth() const {
  std::size_t d = 0;
  for (const auto& a : args) d = std::max(d, a.depth());
  return d + 1;
}

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const Expr& e) {
  if (e.op == Op::Var) return e.name;
  std::string out = std::string(to_string(e.op)) + "(";
  if (e.op == Op::Interval || e.op == Op::Point) {
    for (std::size_t i = 0; i < e.bounds.size(); ++i) out += (i ? "," : "") + e.bounds[i].str();
  } else {
    for (std::size_t i = 0; i < e.args.size(); ++i) out += (i ? "," : "") + print(e.args[i]);
  }
  return out + ")";
}

EvalResult eval(const Expr& e, const SpaceRef& space, const Bindings& bindings) {
  Region r = eval_region(e, space, bindings);
  const bool open = is_open(r);
  const bool closed = is_closed(r);
  const bool regular = is_regular_open(r);
  return {std::move(r), open, closed, regular};
}

}  // namespace ropen::expr
