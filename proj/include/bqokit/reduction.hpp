#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bqokit/block_array.hpp"
#include "bqokit/family.hpp"
#include "bqokit/seq.hpp"

namespace bqokit {

// One code entry: an x-prefix, a binary y-prefix, and an increasing sequence,
// all of the same length.
struct SigmaTriple {
  FreeSeq xs;
  FreeSeq ys;
  FinSeq s;
  friend bool operator==(const SigmaTriple&, const SigmaTriple&) = default;
};

// Finite code inside a window.  Invariants, enforced at construction: every
// triple has equal component lengths within the window bounds, the y component
// is binary, the empty triple is absent, and no two triples are componentwise
// strict initial segments of one another.
class SigmaCode {
 public:
  SigmaCode() = default;
  SigmaCode(Window w, std::vector<SigmaTriple> triples);  // throws std::invalid_argument

  const Window& window() const noexcept { return window_; }
  const std::vector<SigmaTriple>& triples() const noexcept { return triples_; }
  std::size_t size() const noexcept { return triples_.size(); }
  std::size_t max_triple_length() const noexcept;

  friend bool operator==(const SigmaCode&, const SigmaCode&) = default;

 private:
  Window window_;
  std::vector<SigmaTriple> triples_;  // canonical order: (length, xs, ys, s), unique
};

// Carrier element of the reduced relation: a binary prefix paired with an
// increasing sequence of equal length.
struct QPair {
  FreeSeq sigma;
  FinSeq s;
  friend bool operator==(const QPair&, const QPair&) = default;
};
bool qpair_less(const QPair& a, const QPair& b) noexcept;  // (length, sigma, s)

// The induced relation: p related to q unless p's binary prefix is an initial
// segment of q's and p's sequence is shift-below q's.
bool rx(const QPair& p, const QPair& q) noexcept;

// The code sliced along a fixed x: the (y-prefix, sequence) pairs of triples
// whose x component matches the corresponding initial segment of x, with
// membership queries memoized.  Construction requires lh(x) >= the longest
// triple (InsufficientPrefix otherwise).
class CodeSlice {
 public:
  CodeSlice(const SigmaCode& code, const FreeSeq& x);

  const std::vector<QPair>& pairs() const noexcept { return pairs_; }
  bool contains(const FreeSeq& sigma, const FinSeq& s) const noexcept;

  // (sigma, s) is covered when every t entrywise below s meets the slice on
  // some aligned initial segment.  False unless lh(sigma) = lh(s) and sigma
  // is binary.
  bool covered(const FreeSeq& sigma, const FinSeq& s) const;
  // Covered with no properly shorter covered initial-segment pair.
  bool minimally_covered(const FreeSeq& sigma, const FinSeq& s) const;

 private:
  std::vector<QPair> pairs_;  // sorted by qpair_less
};

// Convenience wrappers building a transient slice per call.
std::vector<QPair> code_slice(const SigmaCode& code, const FreeSeq& x);
bool covered(const SigmaCode& code, const FreeSeq& x, const FreeSeq& sigma, const FinSeq& s);
bool minimally_covered(const SigmaCode& code, const FreeSeq& x, const FreeSeq& sigma,
                       const FinSeq& s);

// The reduced relation: the minimally covered pairs inside the window as an
// explicit carrier, related through rx.  Reflexivity of rx on the carrier is
// verified at construction rather than assumed.
class ReducedRelation {
 public:
  explicit ReducedRelation(std::vector<QPair> carrier);  // throws std::logic_error

  const std::vector<QPair>& carrier() const noexcept { return carrier_; }
  std::size_t size() const noexcept { return carrier_.size(); }
  bool relates(std::size_t i, std::size_t j) const { return rx(carrier_[i], carrier_[j]); }

 private:
  std::vector<QPair> carrier_;  // canonical qpair_less order
};

// All minimally covered pairs with entries inside the code's window, in
// canonical order.
ReducedRelation enumerate_carrier(const SigmaCode& code, const FreeSeq& x);

// The family sliced further along a fixed binary y: sequences s inside the
// window with (y cut to lh(s), s) in the code's x-slice.  Requires lh(y) >= L
// and binary y.  Members are pairwise prefix-incomparable by the code
// invariant; a violation would be a construction bug and throws.
SeqFamily family_slice(const SigmaCode& code, const FreeSeq& x, const FreeSeq& y);

// Window-exact correspondence between the reduced carrier along y and the
// smoothing of the y-slice: for every windowed s, (y cut to lh(s), s) is
// minimally covered iff s lies in star(family_slice).  Reports the first
// mismatch in length-lex order.
struct CarrierStarReport {
  bool ok = true;
  std::optional<FinSeq> witness;  // first mismatching s
  bool carrier_side = false;      // minimally covered?
  bool star_side = false;         // member of the smoothing?
};
CarrierStarReport carrier_star_check(const SigmaCode& code, const FreeSeq& x, const FreeSeq& y);

// The canonical bad array for the reduced relation: over the block
// star(family_slice), map s to the carrier pair (y cut to lh(s), s) and search
// for a good pair under rx.  Precondition: block_check of that smoothing is
// block-in-window (PreconditionError otherwise; WindowExhaustion propagates
// from star).  A good pair here would refute the construction.
struct BadArrayReport {
  SeqFamily family;                                        // the smoothing the array lives on
  std::size_t pairs_checked = 0;                           // ordered member pairs scanned
  std::size_t shift_pairs = 0;                             // pairs with s ◁ t
  std::optional<std::pair<FinSeq, FinSeq>> good_pair;      // expected empty
};
BadArrayReport bad_array_witness(const SigmaCode& code, const FreeSeq& x, const FreeSeq& y);

}  // namespace bqokit
