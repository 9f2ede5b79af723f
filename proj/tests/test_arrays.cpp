#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <doctest.h>

#include "bqokit/block_array.hpp"
#include "bqokit/family.hpp"
#include "bqokit/generate.hpp"
#include "bqokit/pouzet.hpp"
#include "bqokit/seq.hpp"

using namespace bqokit;

namespace {

const Window W8{8, 3};

// arr(s) = s cut to its first k entries, over [w]^m.
BlockArray projection_array(Window w, std::size_t m, std::size_t k) {
  const SeqFamily f = uniform_family(w, m);
  std::vector<std::pair<FinSeq, FinSeq>> assign;
  for (const FinSeq& s : f.members()) assign.emplace_back(s, prefix(s, k));
  return BlockArray::with_seqs(f, std::move(assign));
}

// arr(<k>) = k over [w]^1.
BlockArray identity_index_array(Window w) {
  const SeqFamily f = uniform_family(w, 1);
  std::vector<std::pair<FinSeq, std::size_t>> assign;
  for (const FinSeq& s : f.members()) assign.emplace_back(s, s[0]);
  return BlockArray::with_indices(f, std::move(assign));
}

RelationMatrix shift_matrix(Nat n) {
  RelationMatrix r(n);
  for (Nat i = 0; i < n; ++i)
    for (Nat j = 0; j < n; ++j) r.set(i, j, shift_rel(FinSeq{i}, FinSeq{j}));
  return r;
}

}  // namespace

TEST_CASE("arrays demand exactly one value per member") {
  const SeqFamily f = uniform_family(Window{3, 2}, 1);  // members <0>, <1>, <2>
  CHECK_THROWS_AS(BlockArray::with_indices(f, {{FinSeq{0}, 0}, {FinSeq{1}, 1}}),
                  std::invalid_argument);  // <2> unassigned
  CHECK_THROWS_AS(BlockArray::with_indices(
                      f, {{FinSeq{0}, 0}, {FinSeq{1}, 1}, {FinSeq{0, 1}, 2}}),
                  std::invalid_argument);  // <0,1> is not a member
  CHECK_THROWS_AS(
      BlockArray::with_indices(f, {{FinSeq{0}, 0}, {FinSeq{1}, 1}, {FinSeq{1}, 2}}),
      std::invalid_argument);  // <1> assigned twice

  // Assignment order is immaterial; values align with the canonical order.
  const BlockArray arr =
      BlockArray::with_indices(f, {{FinSeq{2}, 7}, {FinSeq{0}, 5}, {FinSeq{1}, 6}});
  CHECK(arr.index_valued());
  CHECK(arr.index_at(0) == 5);
  CHECK(arr.index_at(1) == 6);
  CHECK(arr.index_at(2) == 7);

  const BlockArray sarr = BlockArray::with_seqs(f, {{FinSeq{1}, FinSeq{0, 3}},
                                                    {FinSeq{0}, FinSeq{}},
                                                    {FinSeq{2}, FinSeq{2}}});
  CHECK_FALSE(sarr.index_valued());
  CHECK(sarr.seq_at(0) == FinSeq{});
  CHECK(sarr.seq_at(1) == FinSeq{0, 3});
  CHECK(sarr.seq_at(2) == FinSeq{2});
}

TEST_CASE("good pairs under a relation") {
  const BlockArray arr = identity_index_array(W8);

  // Against the full relation the very first shift pair is good.
  const auto good = find_good_pair(arr, RelationMatrix::all_true(8));
  REQUIRE(good.has_value());
  CHECK(good->first == FinSeq{0});
  CHECK(good->second == FinSeq{1});

  // Against the identity no pair can be good: shift pairs have distinct values.
  CHECK_FALSE(find_good_pair(arr, RelationMatrix::identity(8)).has_value());

  // Against the shift relation itself the array is perfect, so every shift
  // pair is good and the first one is reported.
  const RelationMatrix sm = shift_matrix(8);
  CHECK_FALSE(sm.reflexive());  // legitimately irreflexive input relation
  const auto g2 = find_good_pair(arr, sm);
  REQUIRE(g2.has_value());
  CHECK(*g2 == std::make_pair(FinSeq{0}, FinSeq{1}));

  CHECK_THROWS_AS(find_good_pair(projection_array(W8, 2, 1), RelationMatrix::all_true(8)),
                  std::invalid_argument);  // sequence-valued
  CHECK_THROWS_AS(find_good_pair(arr, RelationMatrix::all_true(3)), std::out_of_range);
}

TEST_CASE("perfection") {
  // Cutting to the first entry respects the shift relation.
  CHECK_FALSE(perfect_check(projection_array(W8, 2, 1)).has_value());
  CHECK_FALSE(perfect_check(projection_array(Window{7, 3}, 3, 2)).has_value());
  CHECK_FALSE(perfect_check(projection_array(W8, 2, 2)).has_value());  // the identity

  // Index flavor: values into the singleton carrier related by shift.
  const BlockArray idx = identity_index_array(W8);
  CHECK_FALSE(perfect_check(idx, shift_matrix(8)).has_value());
  const auto viol = perfect_check(idx, RelationMatrix::identity(8));
  REQUIRE(viol.has_value());  // <0> shift-below <1>, but 0 and 1 unrelated
  CHECK(*viol == std::make_pair(FinSeq{0}, FinSeq{1}));

  // arr(<a>) = <a+1, a+2> breaks at the first non-adjacent pair.
  const SeqFamily f = uniform_family(Window{7, 3}, 1);
  std::vector<std::pair<FinSeq, FinSeq>> assign;
  for (const FinSeq& s : f.members()) assign.emplace_back(s, FinSeq{s[0] + 1, s[0] + 2});
  const auto bad = perfect_check(BlockArray::with_seqs(f, std::move(assign)));
  REQUIRE(bad.has_value());
  CHECK(*bad == std::make_pair(FinSeq{0}, FinSeq{2}));
}

TEST_CASE("value bounds for perfect arrays over a smooth codomain") {
  // Projections satisfy both conclusions.
  CHECK(value_bounds_check(uniform_family(W8, 1), projection_array(W8, 2, 1)).status ==
        ValueBoundsReport::Status::Ok);
  CHECK(value_bounds_check(uniform_family(W8, 2), projection_array(W8, 2, 2)).status ==
        ValueBoundsReport::Status::Ok);
  CHECK(value_bounds_check(uniform_family(Window{7, 3}, 2), projection_array(Window{7, 3}, 3, 2))
            .status == ValueBoundsReport::Status::Ok);

  // Values outside the codomain are a usage error, not a verdict.
  CHECK_THROWS_AS(value_bounds_check(uniform_family(W8, 2), projection_array(W8, 2, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(value_bounds_check(uniform_family(W8, 1), identity_index_array(W8)),
                  std::invalid_argument);

  // A rough codomain is reported before anything else, with the pair.
  const SeqFamily rough(W8, {FinSeq{1}, FinSeq{0, 4}});
  const SeqFamily ones = uniform_family(W8, 1);
  std::vector<std::pair<FinSeq, FinSeq>> assign;
  for (const FinSeq& s : ones.members()) assign.emplace_back(s, FinSeq{1});
  const auto report = value_bounds_check(rough, BlockArray::with_seqs(ones, std::move(assign)));
  CHECK(report.status == ValueBoundsReport::Status::FamilyNotSmooth);
  REQUIRE(report.pair_witness.has_value());
  CHECK(*report.pair_witness == std::make_pair(FinSeq{1}, FinSeq{0, 4}));

  // An imperfect array is reported next.
  const SeqFamily f = uniform_family(Window{7, 3}, 1);
  std::vector<std::pair<FinSeq, FinSeq>> succ;
  for (const FinSeq& s : f.members()) succ.emplace_back(s, FinSeq{s[0] + 1, s[0] + 2});
  const auto rep2 =
      value_bounds_check(uniform_family(Window{9, 3}, 2), BlockArray::with_seqs(f, std::move(succ)));
  CHECK(rep2.status == ValueBoundsReport::Status::ArrayNotPerfect);
  REQUIRE(rep2.pair_witness.has_value());
  CHECK(*rep2.pair_witness == std::make_pair(FinSeq{0}, FinSeq{2}));
}

TEST_CASE("conclusion failures name the first bad member") {
  // Values longer than their member.
  const SeqFamily ones = uniform_family(Window{7, 3}, 1);
  std::vector<std::pair<FinSeq, FinSeq>> assign;
  for (const FinSeq& s : ones.members()) assign.emplace_back(s, FinSeq{s[0], s[0] + 1});
  const auto lrep = value_bounds_conclusions(BlockArray::with_seqs(ones, std::move(assign)));
  CHECK(lrep.status == ValueBoundsReport::Status::LengthBoundFailed);
  REQUIRE(lrep.member.has_value());
  CHECK(*lrep.member == FinSeq{0});

  // A value sinking below its member's initial segment.
  const SeqFamily single(W8, {FinSeq{1, 2}});
  const BlockArray sunk = BlockArray::with_seqs(single, {{FinSeq{1, 2}, FinSeq{0, 1}}});
  const auto drep = value_bounds_conclusions(sunk);
  CHECK(drep.status == ValueBoundsReport::Status::DominationFailed);
  REQUIRE(drep.member.has_value());
  CHECK(*drep.member == FinSeq{1, 2});

  // The gated check reaches the same verdict when the gates pass.
  const auto full = value_bounds_check(SeqFamily(W8, {FinSeq{0, 1}}), sunk);
  CHECK(full.status == ValueBoundsReport::Status::DominationFailed);

  CHECK_THROWS_AS(value_bounds_conclusions(identity_index_array(W8)), std::invalid_argument);
}

TEST_CASE("corrupting one value is always caught at that member") {
  Rng rng(31);
  const Window w{7, 3};
  for (int round = 0; round < 50; ++round) {
    if (round % 2 == 0) {
      // Sink a projection value below its member: domination breaks at it.
      BlockArray arr = projection_array(w, 2, 1);
      const auto& ms = arr.family().members();
      std::vector<std::pair<FinSeq, FinSeq>> assign;
      std::size_t pick = draw(rng, static_cast<Nat>(ms.size()));
      while (ms[pick][0] == 0) pick = draw(rng, static_cast<Nat>(ms.size()));
      for (std::size_t i = 0; i < ms.size(); ++i)
        assign.emplace_back(ms[i], i == pick ? FinSeq{ms[i][0] - 1} : prefix(ms[i], 1));
      const auto rep =
          value_bounds_conclusions(BlockArray::with_seqs(arr.family(), std::move(assign)));
      CHECK(rep.status == ValueBoundsReport::Status::DominationFailed);
      REQUIRE(rep.member.has_value());
      CHECK(*rep.member == ms[pick]);
    } else {
      // Stretch an identity value past its member: the length bound breaks.
      const SeqFamily ones = uniform_family(w, 1);
      const auto& ms = ones.members();
      const std::size_t pick = draw(rng, static_cast<Nat>(ms.size() - 1));  // room for +1
      std::vector<std::pair<FinSeq, FinSeq>> assign;
      for (std::size_t i = 0; i < ms.size(); ++i)
        assign.emplace_back(ms[i], i == pick ? FinSeq{ms[i][0], ms[i][0] + 1} : ms[i]);
      const auto rep = value_bounds_conclusions(BlockArray::with_seqs(ones, std::move(assign)));
      CHECK(rep.status == ValueBoundsReport::Status::LengthBoundFailed);
      REQUIRE(rep.member.has_value());
      CHECK(*rep.member == ms[pick]);
    }
  }
}
