#pragma once

#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "bqokit/seq.hpp"

namespace bqokit {

// Finite truncation window: entries range over [0, base_bound), lengths over
// [0, length_bound].
struct Window {
  Nat base_bound = 0;
  Nat length_bound = 0;
  friend bool operator==(const Window&, const Window&) = default;
};

// Extensional finite family of FinSeq inside a window.  Members are stored in
// canonical length-lex order without duplicates; construction rejects members
// that escape the window.
class SeqFamily {
 public:
  SeqFamily() = default;
  SeqFamily(Window w, std::vector<FinSeq> members);  // throws std::invalid_argument

  const Window& window() const noexcept { return window_; }
  const std::vector<FinSeq>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  std::size_t max_length() const noexcept;  // 0 for the empty family

  bool contains(const FinSeq& s) const noexcept;
  bool contains(std::span<const Nat> entries) const noexcept;

  friend bool operator==(const SeqFamily&, const SeqFamily&) = default;

 private:
  Window window_;
  std::vector<FinSeq> members_;  // length-lex sorted, unique
};

// Set of naturals appearing in any member, sorted ascending.
std::vector<Nat> base(const SeqFamily& c);

// A family is smooth when no longer member, cut to a shorter member's length,
// is entrywise <= that shorter member.  Returns the first violating pair
// (s shorter, t longer) in length-lex order, or nullopt when smooth.
struct SmoothViolation {
  FinSeq s;  // shorter member
  FinSeq t;  // longer member with prefix(t, lh(s)) entrywise <= s
  friend bool operator==(const SmoothViolation&, const SmoothViolation&) = default;
};
std::optional<SmoothViolation> smooth_check(const SeqFamily& c);

// The avoidance tree T(C): sequences none of whose initial segments lies in C.
// Exact finite test; s may use any entries.
bool avoid_tree_contains(const SeqFamily& c, const FinSeq& s);

// T*(C): sequences entrywise dominating some member of the avoidance tree of
// equal length.  Exact finite test over dominated_below(s).
bool star_tree_contains(const SeqFamily& c, const FinSeq& s);

// C*: sequences outside T*(C) all of whose proper initial segments are inside.
bool star_contains(const SeqFamily& c, const FinSeq& s);

// The smoothing of C: enumerates C* breadth-first by length inside C's window.
// A branch still inside T*(C) when the length bound is hit means the window is
// too small to finish; that raises WindowExhaustion.  The result is verified
// smooth before being returned.
SeqFamily star(const SeqFamily& c);

enum class BlockStatus { BlockInWindow, NotBlock, IndeterminateAtBoundary };

// not-block carries either a comparable pair of members or an uncovered
// sequence; indeterminate-at-boundary may carry the uncovered sequence whose
// extensions leave the window.
struct BlockVerdict {
  BlockStatus status = BlockStatus::BlockInWindow;
  std::optional<std::variant<std::pair<FinSeq, FinSeq>, FinSeq>> witness;
};

// Checks (a) pairwise strict-prefix incomparability of members (exact) and
// (b) coverage: every increasing sequence over base(C) ∩ [0,N) of length
// maxlen(C) has an initial segment in C.  An uncovered sequence refutes
// blockness when maxlen(C) < L; at maxlen(C) = L its extensions would leave
// the length window, so the verdict is indeterminate-at-boundary.  The empty
// family shows nothing and is likewise indeterminate.
BlockVerdict block_check(const SeqFamily& c);

// Least (length-lex) member of star(C) extending the member t.  Throws
// std::invalid_argument when t is not a member, WindowExhaustion when star
// does, or when no member of star(C) extends t inside the window.
FinSeq extend_into_star(const SeqFamily& c, const FinSeq& t);

}  // namespace bqokit
