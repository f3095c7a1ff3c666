#include "ringlab/expr.hpp"

#include <cctype>
#include <limits>

#include "ringlab/ideal.hpp"

namespace ringlab {

RingExpr RingExpr::zmod(std::size_t n) {
  RingExpr e;
  e.kind = Kind::Zmod;
  e.modulus = n;
  return e;
}

RingExpr RingExpr::product(RingExpr a, RingExpr b) {
  RingExpr e;
  e.kind = Kind::Product;
  e.left = std::make_shared<const RingExpr>(std::move(a));
  e.right = std::make_shared<const RingExpr>(std::move(b));
  return e;
}

RingExpr RingExpr::quotient(RingExpr base, std::vector<std::size_t> gens) {
  RingExpr e;
  e.kind = Kind::Quotient;
  e.left = std::make_shared<const RingExpr>(std::move(base));
  e.generators = std::move(gens);
  return e;
}

RingExpr RingExpr::group_ring(RingExpr base, GroupExpr group) {
  RingExpr e;
  e.kind = Kind::GroupRing;
  e.left = std::make_shared<const RingExpr>(std::move(base));
  e.group = std::move(group);
  return e;
}

bool operator==(const RingExpr& a, const RingExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case RingExpr::Kind::Zmod:
      return a.modulus == b.modulus;
    case RingExpr::Kind::Product:
      return *a.left == *b.left && *a.right == *b.right;
    case RingExpr::Kind::Quotient:
      return *a.left == *b.left && a.generators == b.generators;
    case RingExpr::Kind::GroupRing:
      return *a.left == *b.left && a.group == b.group;
  }
  return false;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RingExpr parse_ring_only() {
    if (at_end()) throw ParseError("empty expression", pos_);
    auto e = ring();
    expect_end();
    return e;
  }

  GroupExpr parse_group_only() {
    auto g = group();
    expect_end();
    return g;
  }

 private:
  RingExpr ring() {
    RingExpr lhs = term();
    while (peek() == 'x') {
      ++pos_;
      lhs = RingExpr::product(std::move(lhs), term());
    }
    return lhs;
  }

  RingExpr term() {
    RingExpr base = atom();
    while (peek() == '/') {
      ++pos_;
      expect('(');
      std::vector<std::size_t> gens{integer()};
      while (peek() == ',') {
        ++pos_;
        gens.push_back(integer());
      }
      expect(')');
      base = RingExpr::quotient(std::move(base), std::move(gens));
    }
    return base;
  }

  RingExpr atom() {
    const char c = peek();
    if (c == 'Z') {
      ++pos_;
      return RingExpr::zmod(integer());
    }
    if (c == 'G') {
      ++pos_;
      expect('R');
      expect('(');
      RingExpr base = ring();
      expect(',');
      GroupExpr g = group();
      expect(')');
      return RingExpr::group_ring(std::move(base), std::move(g));
    }
    if (c == '(') {
      ++pos_;
      RingExpr inner = ring();
      expect(')');
      return inner;
    }
    throw ParseError(c == '\0' ? "unexpected end of input, expected a ring"
                               : std::string("unexpected '") + c + "', expected a ring",
                     pos_);
  }

  GroupExpr group() {
    GroupExpr g;
    if (peek() == '1') {
      ++pos_;
      return g;
    }
    expect('C');
    g.orders.push_back(integer());
    while (peek() == 'x') {
      ++pos_;
      expect('C');
      g.orders.push_back(integer());
    }
    return g;
  }

  std::size_t integer() {
    skip_space();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto digit = static_cast<std::size_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::size_t>::max() - digit) / 10) {
        throw ParseError("integer too large", start);
      }
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected an integer", start);
    return value;
  }

  void expect(char c) {
    if (peek() != c) {
      const char got = peek();
      throw ParseError(std::string("expected '") + c + "'" +
                           (got == '\0' ? std::string(" before end of input")
                                        : std::string(", found '") + got + "'"),
                       pos_);
    }
    ++pos_;
  }

  void expect_end() {
    if (!at_end()) throw ParseError(std::string("unexpected '") + peek() + "'", pos_);
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool at_end() { return peek() == '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RingExpr parse_ring_expr(std::string_view text) { return Parser(text).parse_ring_only(); }

GroupExpr parse_group_expr(std::string_view text) { return Parser(text).parse_group_only(); }

std::string to_string(const GroupExpr& group) {
  if (group.orders.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < group.orders.size(); ++i) {
    if (i > 0) out += " x ";
    out += "C" + std::to_string(group.orders[i]);
  }
  return out;
}

std::string to_string(const RingExpr& expr) {
  switch (expr.kind) {
    case RingExpr::Kind::Zmod:
      return "Z" + std::to_string(expr.modulus);
    case RingExpr::Kind::Product: {
      std::string rhs = to_string(*expr.right);
      if (expr.right->kind == RingExpr::Kind::Product) rhs = "(" + rhs + ")";
      return to_string(*expr.left) + " x " + rhs;
    }
    case RingExpr::Kind::Quotient: {
      std::string base = to_string(*expr.left);
      if (expr.left->kind == RingExpr::Kind::Product) base = "(" + base + ")";
      base += "/(";
      for (std::size_t i = 0; i < expr.generators.size(); ++i) {
        if (i > 0) base += ",";
        base += std::to_string(expr.generators[i]);
      }
      return base + ")";
    }
    case RingExpr::Kind::GroupRing:
      return "GR(" + to_string(*expr.left) + ", " + to_string(expr.group) + ")";
  }
  return {};
}

AbelianGroup evaluate(const GroupExpr& group) {
  for (std::size_t d : group.orders) {
    if (d == 0) throw std::invalid_argument("cyclic group of order 0");
  }
  return make_group(group.orders);
}

Ring evaluate(const RingExpr& expr, const Limits& limits) {
  switch (expr.kind) {
    case RingExpr::Kind::Zmod:
      return make_zmod(expr.modulus, limits);
    case RingExpr::Kind::Product:
      return direct_product(evaluate(*expr.left, limits), evaluate(*expr.right, limits), limits);
    case RingExpr::Kind::Quotient: {
      const Ring base = evaluate(*expr.left, limits);
      std::vector<Index> gens;
      for (std::size_t g : expr.generators) {
        if (g >= base.order()) {
          throw std::invalid_argument("quotient generator " + std::to_string(g) +
                                      " is not an element of " + base.label());
        }
        gens.push_back(static_cast<Index>(g));
      }
      const auto ideal = ideal_generated(base, gens);
      if (ideal.is_whole()) {
        throw std::invalid_argument("quotient of " + base.label() + " by the whole ring");
      }
      return quotient_ring(base, ideal).ring.relabeled(to_string(expr));
    }
    case RingExpr::Kind::GroupRing:
      return std::move(evaluate_group_ring(expr, limits)->ring);
  }
  throw std::logic_error("unknown expression kind");
}

std::optional<GroupRingView> evaluate_group_ring(const RingExpr& expr, const Limits& limits) {
  if (expr.kind != RingExpr::Kind::GroupRing) return std::nullopt;
  const Ring base = evaluate(*expr.left, limits);
  auto view = group_ring(base, evaluate(expr.group), limits);
  view.ring = std::move(view.ring).relabeled(to_string(expr));
  return view;
}

}  // namespace ringlab
