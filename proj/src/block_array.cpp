#include "bqokit/block_array.hpp"

#include <algorithm>
#include <stdexcept>

namespace bqokit {

namespace {

// Reorder assignment values to sit parallel to the family's canonical member
// order, insisting on exactly one value per member.
template <typename V>
std::vector<V> align_values(const SeqFamily& family,
                            std::vector<std::pair<FinSeq, V>> assignments) {
  if (assignments.size() != family.size())
    throw std::invalid_argument("array must assign exactly one value per member (" +
                                std::to_string(family.size()) + " members, " +
                                std::to_string(assignments.size()) + " assignments)");
  std::vector<V> values(family.size());
  std::vector<bool> seen(family.size(), false);
  const auto& ms = family.members();
  for (auto& [s, v] : assignments) {
    auto it = std::find(ms.begin(), ms.end(), s);
    if (it == ms.end())
      throw std::invalid_argument("array assigns a value to " + s.str() +
                                  ", which is not a member");
    const auto idx = static_cast<std::size_t>(it - ms.begin());
    if (seen[idx])
      throw std::invalid_argument("array assigns two values to " + s.str());
    seen[idx] = true;
    values[idx] = std::move(v);
  }
  return values;
}

}  // namespace

BlockArray BlockArray::with_indices(SeqFamily family,
                                    std::vector<std::pair<FinSeq, std::size_t>> assignments) {
  auto values = align_values(family, std::move(assignments));
  return BlockArray(std::move(family), std::move(values));
}

BlockArray BlockArray::with_seqs(SeqFamily family,
                                 std::vector<std::pair<FinSeq, FinSeq>> assignments) {
  auto values = align_values(family, std::move(assignments));
  return BlockArray(std::move(family), std::move(values));
}

namespace {

// Shared scan over member pairs (s, t) with s ◁ t, in length-lex order on the
// pair; pred decides whether the pair is reported.
template <typename Pred>
std::optional<std::pair<FinSeq, FinSeq>> scan_shift_pairs(const SeqFamily& family, Pred pred) {
  const auto& ms = family.members();
  for (std::size_t a = 0; a < ms.size(); ++a)
    for (std::size_t b = 0; b < ms.size(); ++b)
      if (shift_rel(ms[a], ms[b]) && pred(a, b))
        return std::make_pair(ms[a], ms[b]);
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<FinSeq, FinSeq>> find_good_pair(const BlockArray& arr,
                                                        const RelationMatrix& r) {
  if (!arr.index_valued())
    throw std::invalid_argument("find_good_pair requires an index-valued array");
  for (std::size_t i = 0; i < arr.family().size(); ++i)
    if (arr.index_at(i) >= r.size())
      throw std::out_of_range("array value " + std::to_string(arr.index_at(i)) +
                              " outside relation carrier of size " + std::to_string(r.size()));
  return scan_shift_pairs(arr.family(),
                          [&](std::size_t a, std::size_t b) { return r.at(arr.index_at(a), arr.index_at(b)); });
}

std::optional<std::pair<FinSeq, FinSeq>> perfect_check(const BlockArray& arr,
                                                       const RelationMatrix& r) {
  if (!arr.index_valued())
    throw std::invalid_argument("perfect_check with a matrix requires an index-valued array");
  for (std::size_t i = 0; i < arr.family().size(); ++i)
    if (arr.index_at(i) >= r.size())
      throw std::out_of_range("array value " + std::to_string(arr.index_at(i)) +
                              " outside relation carrier of size " + std::to_string(r.size()));
  return scan_shift_pairs(arr.family(),
                          [&](std::size_t a, std::size_t b) { return !r.at(arr.index_at(a), arr.index_at(b)); });
}

std::optional<std::pair<FinSeq, FinSeq>> perfect_check(const BlockArray& arr) {
  if (arr.index_valued())
    throw std::invalid_argument("sequence-valued perfect_check requires a sequence-valued array");
  return scan_shift_pairs(arr.family(),
                          [&](std::size_t a, std::size_t b) { return !shift_rel(arr.seq_at(a), arr.seq_at(b)); });
}

ValueBoundsReport value_bounds_conclusions(const BlockArray& arr) {
  if (arr.index_valued())
    throw std::invalid_argument("value bounds apply to sequence-valued arrays");
  const auto& ms = arr.family().members();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const FinSeq& s = ms[i];
    const FinSeq& v = arr.seq_at(i);
    if (v.lh() > s.lh())
      return {ValueBoundsReport::Status::LengthBoundFailed, std::nullopt, s};
    for (std::size_t k = 0; k < v.lh(); ++k)
      if (s[k] > v[k])
        return {ValueBoundsReport::Status::DominationFailed, std::nullopt, s};
  }
  return {};
}

ValueBoundsReport value_bounds_check(const SeqFamily& c, const BlockArray& arr) {
  if (arr.index_valued())
    throw std::invalid_argument("value bounds apply to sequence-valued arrays");
  for (std::size_t i = 0; i < arr.family().size(); ++i)
    if (!c.contains(arr.seq_at(i)))
      throw std::invalid_argument("array value " + arr.seq_at(i).str() +
                                  " lies outside the codomain family");
  if (auto bad = smooth_check(c))
    return {ValueBoundsReport::Status::FamilyNotSmooth, std::make_pair(bad->s, bad->t), std::nullopt};
  if (auto bad = perfect_check(arr))
    return {ValueBoundsReport::Status::ArrayNotPerfect, *bad, std::nullopt};
  return value_bounds_conclusions(arr);
}

}  // namespace bqokit
