#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/group.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// Cyclic orders as written; an empty list is the trivial group "1".
struct GroupExpr {
  std::vector<std::size_t> orders;
  bool operator==(const GroupExpr&) const = default;
};

/// Abstract syntax of the ring-expression language:
///
///   ring  := term ('x' term)*                 left-associative
///   term  := atom ('/' '(' INT (',' INT)* ')')*
///   atom  := 'Z' INT | 'GR(' ring ',' group ')' | '(' ring ')'
///   group := '1' | 'C' INT ('x' 'C' INT)*
///
/// Whitespace is ignored. Quotient generators are element indices of the
/// evaluated parent ring.
struct RingExpr {
  enum class Kind { Zmod, Product, Quotient, GroupRing };

  Kind kind = Kind::Zmod;
  std::size_t modulus = 0;                       // Zmod
  std::shared_ptr<const RingExpr> left;          // Product lhs, Quotient/GroupRing operand
  std::shared_ptr<const RingExpr> right;         // Product rhs
  std::vector<std::size_t> generators;           // Quotient
  GroupExpr group;                               // GroupRing

  static RingExpr zmod(std::size_t n);
  static RingExpr product(RingExpr a, RingExpr b);
  static RingExpr quotient(RingExpr base, std::vector<std::size_t> gens);
  static RingExpr group_ring(RingExpr base, GroupExpr group);

  friend bool operator==(const RingExpr& a, const RingExpr& b);
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

RingExpr parse_ring_expr(std::string_view text);
GroupExpr parse_group_expr(std::string_view text);

/// Canonical text; also the cache key. parse_ring_expr(to_string(e)) == e.
std::string to_string(const RingExpr& expr);
std::string to_string(const GroupExpr& group);

AbelianGroup evaluate(const GroupExpr& group);

/// Builds the tables. Throws CapExceeded, or std::invalid_argument for
/// out-of-range generators and quotients by the whole ring.
Ring evaluate(const RingExpr& expr, const Limits& limits = {});

/// The group-ring view when the expression is a group ring at the top level.
std::optional<GroupRingView> evaluate_group_ring(const RingExpr& expr, const Limits& limits = {});

}  // namespace ringlab
