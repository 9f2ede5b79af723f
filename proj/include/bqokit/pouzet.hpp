#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bqokit/seq.hpp"

namespace bqokit {

// Dense boolean relation on a finite carrier {q_0, ..., q_{n-1}}.  Plain data:
// reflexivity is a precondition of pouzet_order, not of the type (the shift
// relation materialized as a matrix is legitimately irreflexive).
class RelationMatrix {
 public:
  RelationMatrix() = default;
  explicit RelationMatrix(std::size_t n) : n_(n), bits_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool at(std::size_t i, std::size_t j) const { return bits_[i * n_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v) { bits_[i * n_ + j] = v ? 1 : 0; }

  bool reflexive() const noexcept;
  static RelationMatrix identity(std::size_t n);
  static RelationMatrix all_true(std::size_t n);

  friend bool operator==(const RelationMatrix&, const RelationMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

using OrderMatrix = RelationMatrix;

// Pouzet's partial order refined from a reflexive R along the carrier
// enumeration: for m <= n, q_m <= q_n iff q_m R q_n and every i < m with
// q_i <= q_m also has q_i <= q_n; pairs with m > n are unrelated.  Rows are
// filled in increasing m, so the recursion only consults finished rows.
// Throws InvalidRelation when R is not reflexive.
OrderMatrix pouzet_order(const RelationMatrix& r);

struct OrderAxiomViolation {
  enum class Kind { Reflexivity, Antisymmetry, Transitivity };
  Kind kind;
  std::size_t i = 0, j = 0, k = 0;  // k meaningful for transitivity only
  friend bool operator==(const OrderAxiomViolation&, const OrderAxiomViolation&) = default;
};

// First axiom violation in scan order, or nullopt for a genuine partial order.
std::optional<OrderAxiomViolation> order_axiom_violation(const OrderMatrix& m);

// Entrywise containment m ⊆ r.  Throws std::invalid_argument on size mismatch.
bool contained_in(const RelationMatrix& m, const RelationMatrix& r);

// Every related pair respects the carrier enumeration (m related to n only
// when m <= n).
bool enumeration_compatible(const OrderMatrix& m);

}  // namespace bqokit
