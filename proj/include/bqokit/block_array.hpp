#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "bqokit/family.hpp"
#include "bqokit/pouzet.hpp"
#include "bqokit/seq.hpp"

namespace bqokit {

// Total assignment of values to the members of a family.  Values are either
// all carrier indices (for matrix relations) or all FinSeq (for sequence
// families as codomain); mixing the two in one array is rejected.
class BlockArray {
 public:
  static BlockArray with_indices(SeqFamily family,
                                 std::vector<std::pair<FinSeq, std::size_t>> assignments);
  static BlockArray with_seqs(SeqFamily family,
                              std::vector<std::pair<FinSeq, FinSeq>> assignments);

  const SeqFamily& family() const noexcept { return family_; }
  bool index_valued() const noexcept { return std::holds_alternative<std::vector<std::size_t>>(values_); }

  // Value at the family's i-th member (canonical order).
  std::size_t index_at(std::size_t member) const { return std::get<std::vector<std::size_t>>(values_)[member]; }
  const FinSeq& seq_at(std::size_t member) const { return std::get<std::vector<FinSeq>>(values_)[member]; }

 private:
  BlockArray(SeqFamily f, std::variant<std::vector<std::size_t>, std::vector<FinSeq>> v)
      : family_(std::move(f)), values_(std::move(v)) {}
  SeqFamily family_;
  std::variant<std::vector<std::size_t>, std::vector<FinSeq>> values_;  // parallel to members
};

// First pair (s, t) of members, in length-lex order on (s, t), with s ◁ t and
// the values related under r.  Requires an index-valued array whose values lie
// inside r's carrier (std::out_of_range otherwise).
std::optional<std::pair<FinSeq, FinSeq>> find_good_pair(const BlockArray& arr,
                                                        const RelationMatrix& r);

// An array is perfect when every member pair with s ◁ t has related values.
// Returns the first violating pair, or nullopt when perfect.
std::optional<std::pair<FinSeq, FinSeq>> perfect_check(const BlockArray& arr,
                                                       const RelationMatrix& r);
// Sequence-valued variant: values must themselves be in the shift relation.
std::optional<std::pair<FinSeq, FinSeq>> perfect_check(const BlockArray& arr);

// For a smooth family C and a perfect C-valued array over a window block, the
// value at s can be no longer than s and must entrywise dominate the matching
// initial segment of s.  Preconditions are reported distinctly from
// conclusion failures.
struct ValueBoundsReport {
  enum class Status {
    Ok,
    FamilyNotSmooth,     // precondition: C is not smooth
    ArrayNotPerfect,     // precondition: some shift pair has unrelated values
    LengthBoundFailed,   // lh(value) > lh(s) at some member
    DominationFailed,    // prefix(s, lh(value)) not entrywise <= value
  };
  Status status = Status::Ok;
  std::optional<std::pair<FinSeq, FinSeq>> pair_witness;  // for the precondition statuses
  std::optional<FinSeq> member;                           // for the conclusion statuses
};
ValueBoundsReport value_bounds_check(const SeqFamily& c, const BlockArray& arr);

// The two conclusions alone, without the precondition gates; first failing
// member in canonical order.  Exposed so tests can probe the contrapositive.
ValueBoundsReport value_bounds_conclusions(const BlockArray& arr);

}  // namespace bqokit
