#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bqokit {

using Nat = std::uint32_t;

// Strictly increasing finite sequence of naturals, the enumeration of a finite
// set.  Immutable after construction; construction validates monotonicity.
class FinSeq {
 public:
  FinSeq() = default;
  explicit FinSeq(std::vector<Nat> entries);  // throws std::invalid_argument
  FinSeq(std::initializer_list<Nat> entries);
  static std::optional<FinSeq> try_make(std::vector<Nat> entries);

  std::size_t lh() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  Nat operator[](std::size_t i) const { return entries_[i]; }
  Nat last() const { return entries_.back(); }  // pre: nonempty
  const std::vector<Nat>& entries() const noexcept { return entries_; }
  std::string str() const;

  friend bool operator==(const FinSeq&, const FinSeq&) = default;
  // Entrywise lexicographic; canonical enumeration order is length_lex_less.
  friend auto operator<=>(const FinSeq&, const FinSeq&) = default;

 private:
  std::vector<Nat> entries_;
};

// Finite sequence of naturals with no monotonicity constraint (used for the
// x / y prefixes of the reduction, where repeats are legal).
class FreeSeq {
 public:
  FreeSeq() = default;
  explicit FreeSeq(std::vector<Nat> entries) : entries_(std::move(entries)) {}
  FreeSeq(std::initializer_list<Nat> entries) : entries_(entries) {}

  std::size_t lh() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  Nat operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Nat>& entries() const noexcept { return entries_; }
  bool is_binary() const noexcept;  // every entry 0 or 1
  std::string str() const;

  friend bool operator==(const FreeSeq&, const FreeSeq&) = default;
  friend auto operator<=>(const FreeSeq&, const FreeSeq&) = default;

 private:
  std::vector<Nat> entries_;
};

// Canonical order everywhere: shorter first, then entrywise lexicographic.
bool length_lex_less(const FinSeq& a, const FinSeq& b) noexcept;
bool length_lex_less(const FreeSeq& a, const FreeSeq& b) noexcept;

// s is an initial segment of t (s ⊑ t / strictly s ⊏ t).
bool is_prefix(const FinSeq& s, const FinSeq& t) noexcept;
bool is_prefix(const FreeSeq& s, const FreeSeq& t) noexcept;
bool is_strict_prefix(const FinSeq& s, const FinSeq& t) noexcept;
bool is_strict_prefix(const FreeSeq& s, const FreeSeq& t) noexcept;

// First i entries of s.  Throws std::out_of_range when i > lh(s).
FinSeq prefix(const FinSeq& s, std::size_t i);
FreeSeq prefix(const FreeSeq& s, std::size_t i);

// Concatenation; requires last(s) < first(t) unless one side is empty, so the
// result is again strictly increasing.  Throws std::invalid_argument.
FinSeq concat(const FinSeq& s, const FinSeq& t);

// All strictly increasing t with lh(t) = lh(s) and t(i) <= s(i) for every i,
// in lexicographic order.  Always contains s itself.
std::vector<FinSeq> dominated_below(const FinSeq& s);

// The shift relation: s ◁ t iff some strictly increasing u has s as an initial
// segment and t as an initial segment of u-without-its-least-element.  Decided
// directly: the pinned positions of u must agree (s(j) = t(j-1) on the overlap)
// and increase across the junction; empty cases fall out of the same u-picture.
bool shift_rel(const FinSeq& s, const FinSeq& t) noexcept;

}  // namespace bqokit
