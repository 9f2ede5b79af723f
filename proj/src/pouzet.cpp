#include "bqokit/pouzet.hpp"

#include <stdexcept>
#include <string>

#include "bqokit/errors.hpp"

namespace bqokit {

bool RelationMatrix::reflexive() const noexcept {
  for (std::size_t i = 0; i < n_; ++i)
    if (!at(i, i)) return false;
  return true;
}

RelationMatrix RelationMatrix::identity(std::size_t n) {
  RelationMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

RelationMatrix RelationMatrix::all_true(std::size_t n) {
  RelationMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, true);
  return m;
}

OrderMatrix pouzet_order(const RelationMatrix& r) {
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!r.at(i, i))
      throw InvalidRelation("pouzet_order requires a reflexive relation; carrier " +
                            std::to_string(i) + " is unrelated to itself");
  OrderMatrix m(n);
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t col = row; col < n; ++col) {
      if (!r.at(row, col)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < row; ++i)
        if (m.at(i, row) && !m.at(i, col)) {
          ok = false;
          break;
        }
      m.set(row, col, ok);
    }
  }
  return m;
}

std::optional<OrderAxiomViolation> order_axiom_violation(const OrderMatrix& m) {
  using Kind = OrderAxiomViolation::Kind;
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!m.at(i, i)) return OrderAxiomViolation{Kind::Reflexivity, i, i, 0};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && m.at(i, j) && m.at(j, i))
        return OrderAxiomViolation{Kind::Antisymmetry, i, j, 0};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!m.at(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (m.at(j, k) && !m.at(i, k))
          return OrderAxiomViolation{Kind::Transitivity, i, j, k};
    }
  return std::nullopt;
}

bool contained_in(const RelationMatrix& m, const RelationMatrix& r) {
  if (m.size() != r.size())
    throw std::invalid_argument("contained_in: size mismatch " + std::to_string(m.size()) +
                                " vs " + std::to_string(r.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m.at(i, j) && !r.at(i, j)) return false;
  return true;
}

bool enumeration_compatible(const OrderMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m.at(i, j)) return false;
  return true;
}

}  // namespace bqokit
