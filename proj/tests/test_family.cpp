#include <algorithm>
#include <stdexcept>
#include <variant>
#include <vector>

#include <doctest.h>

#include "bqokit/errors.hpp"
#include "bqokit/family.hpp"
#include "bqokit/generate.hpp"
#include "bqokit/seq.hpp"

using namespace bqokit;

namespace {
const Window W8{8, 3};

SeqFamily fam(std::vector<FinSeq> ms, Window w = W8) { return SeqFamily(w, std::move(ms)); }
}  // namespace

TEST_CASE("families canonicalize and police their window") {
  const SeqFamily c = fam({FinSeq{3}, FinSeq{1}, FinSeq{3}, FinSeq{0, 4}});
  CHECK(c.members() == std::vector<FinSeq>{FinSeq{1}, FinSeq{3}, FinSeq{0, 4}});
  CHECK(c.size() == 3);
  CHECK(c.max_length() == 2);
  CHECK(c.contains(FinSeq{3}));
  CHECK_FALSE(c.contains(FinSeq{4}));
  const std::vector<Nat> probe{0, 4};
  CHECK(c.contains(std::span<const Nat>(probe)));

  CHECK_THROWS_AS(fam({FinSeq{8}}), std::invalid_argument);           // entry outside base
  CHECK_THROWS_AS(fam({FinSeq{0, 1, 2, 3}}), std::invalid_argument);  // too long
  CHECK(fam({}).empty());
  CHECK(fam({}).max_length() == 0);
}

TEST_CASE("base collects every entry in use") {
  CHECK(base(fam({FinSeq{1}, FinSeq{0, 4}})) == std::vector<Nat>{0, 1, 4});
  CHECK(base(fam({})).empty());
  CHECK(base(uniform_family(Window{5, 2}, 2)) == std::vector<Nat>{0, 1, 2, 3, 4});
}

TEST_CASE("smoothness: no longer member may sink below a shorter one") {
  CHECK_FALSE(smooth_check(uniform_family(W8, 1)).has_value());
  CHECK_FALSE(smooth_check(uniform_family(W8, 2)).has_value());
  CHECK_FALSE(smooth_check(fam({})).has_value());

  const auto v = smooth_check(fam({FinSeq{1}, FinSeq{0, 4}}));
  REQUIRE(v.has_value());
  CHECK(v->s == FinSeq{1});
  CHECK(v->t == FinSeq{0, 4});

  // The split cover is deliberately not smooth; first pair in length-lex order.
  const auto tv = smooth_check(two_level_family(W8));
  REQUIRE(tv.has_value());
  CHECK(tv->s == FinSeq{1});
  CHECK(tv->t == FinSeq{0, 1});
}

TEST_CASE("avoidance tree and its domination closure") {
  const SeqFamily c = two_level_family(W8);
  CHECK(avoid_tree_contains(c, FinSeq{}));
  CHECK(avoid_tree_contains(c, FinSeq{0}));        // <0> itself is not a member
  CHECK_FALSE(avoid_tree_contains(c, FinSeq{1}));  // <1> is
  CHECK_FALSE(avoid_tree_contains(c, FinSeq{1, 5}));  // passes through <1>

  // The avoidance tree is closed under initial segments.
  for (const FinSeq& s : all_window_seqs(W8))
    if (avoid_tree_contains(c, s))
      for (std::size_t i = 0; i <= s.lh(); ++i) CHECK(avoid_tree_contains(c, prefix(s, i)));

  CHECK(star_tree_contains(c, FinSeq{1}));  // <0> sits below it in the avoidance tree
  CHECK_FALSE(star_tree_contains(c, FinSeq{1, 2}));
  CHECK(star_contains(c, FinSeq{1, 2}));
  CHECK_FALSE(star_contains(c, FinSeq{1}));

  // Avoiders dominate themselves, so the closure contains the tree.
  for (const FinSeq& s : all_window_seqs(W8))
    if (avoid_tree_contains(c, s)) CHECK(star_tree_contains(c, s));
}

TEST_CASE("smoothing pinned outputs") {
  const SeqFamily u2 = uniform_family(W8, 2);
  CHECK(star(u2) == u2);  // already smooth and maximally spread
  CHECK(star(uniform_family(W8, 1)) == uniform_family(W8, 1));

  const SeqFamily sm = star(two_level_family(W8));
  CHECK(sm == u2);
  REQUIRE(sm.size() == 28);

  CHECK_THROWS_AS(star(fam({})), WindowExhaustion);
  CHECK_THROWS_AS(star(fam({FinSeq{0}})), WindowExhaustion);
  try {
    star(fam({}));
  } catch (const WindowExhaustion& e) {
    CHECK(std::string(e.what()).find("length bound") != std::string::npos);
  }
}

TEST_CASE("smoothing agrees with its pointwise definition") {
  Rng rng(7);
  const auto universe = all_window_seqs(W8);
  std::vector<SeqFamily> cases = {two_level_family(W8), uniform_family(W8, 2),
                                  uniform_family(W8, 3)};
  int completed = 0;
  for (int i = 0; i < 12; ++i) cases.push_back(random_family(rng, W8));
  for (const SeqFamily& c : cases) {
    SeqFamily sm;
    try {
      sm = star(c);
    } catch (const WindowExhaustion&) {
      continue;
    }
    ++completed;
    std::vector<FinSeq> expect;
    for (const FinSeq& s : universe)
      if (star_contains(c, s)) expect.push_back(s);
    CHECK(sm.members() == expect);
    CHECK_FALSE(smooth_check(sm).has_value());
  }
  CHECK(completed >= 5);
}

TEST_CASE("in a smooth family, shift-related members cannot shrink") {
  Rng rng(11);
  std::vector<SeqFamily> cases = {uniform_family(W8, 2), star(two_level_family(W8))};
  for (int i = 0; i < 10; ++i) {
    try {
      cases.push_back(star(random_family(rng, W8)));
    } catch (const WindowExhaustion&) {
    }
  }
  for (const SeqFamily& c : cases) {
    REQUIRE_FALSE(smooth_check(c).has_value());
    for (const FinSeq& s : c.members())
      for (const FinSeq& t : c.members())
        if (shift_rel(s, t)) CHECK(s.lh() <= t.lh());
  }
}

TEST_CASE("block verdicts") {
  CHECK(block_check(two_level_family(W8)).status == BlockStatus::BlockInWindow);
  CHECK(block_check(uniform_family(W8, 2)).status == BlockStatus::BlockInWindow);
  CHECK(block_check(fam({FinSeq{0}})).status == BlockStatus::BlockInWindow);  // base is {0}

  // A member extending another refutes blockness outright.
  const BlockVerdict comparable = block_check(fam({FinSeq{1}, FinSeq{1, 2}, FinSeq{3}}));
  CHECK(comparable.status == BlockStatus::NotBlock);
  REQUIRE(comparable.witness.has_value());
  const auto& pair = std::get<std::pair<FinSeq, FinSeq>>(*comparable.witness);
  CHECK(pair.first == FinSeq{1});
  CHECK(pair.second == FinSeq{1, 2});

  // An uncovered branch refutes blockness while lengths can still grow ...
  const BlockVerdict uncov = block_check(fam({FinSeq{1, 2}, FinSeq{3}}));
  CHECK(uncov.status == BlockStatus::NotBlock);
  REQUIRE(uncov.witness.has_value());
  CHECK(std::get<FinSeq>(*uncov.witness) == FinSeq{1, 3});

  // ... but at the length bound the window cannot rule.
  const BlockVerdict edge = block_check(SeqFamily(Window{8, 2}, {FinSeq{1, 2}, FinSeq{3}}));
  CHECK(edge.status == BlockStatus::IndeterminateAtBoundary);
  REQUIRE(edge.witness.has_value());
  CHECK(std::get<FinSeq>(*edge.witness) == FinSeq{1, 3});

  const BlockVerdict empty = block_check(fam({}));
  CHECK(empty.status == BlockStatus::IndeterminateAtBoundary);
  CHECK_FALSE(empty.witness.has_value());
}

TEST_CASE("smoothing a family yields a window block when it completes") {
  Rng rng(23);
  int completed = 0;
  for (int i = 0; i < 40; ++i) {
    SeqFamily sm;
    try {
      sm = star(random_family(rng, W8));
    } catch (const WindowExhaustion&) {
      continue;
    }
    ++completed;
    CHECK(block_check(sm).status == BlockStatus::BlockInWindow);
  }
  CHECK(completed >= 10);
}

TEST_CASE("extending members into the smoothing") {
  const SeqFamily c = two_level_family(W8);
  CHECK(extend_into_star(c, FinSeq{1}) == FinSeq{1, 2});  // least extension in [8]^2
  CHECK(extend_into_star(c, FinSeq{0, 3}) == FinSeq{0, 3});
  CHECK_THROWS_AS(extend_into_star(c, FinSeq{0}), std::invalid_argument);  // not a member

  // <7> can only extend through entries above 7, and the window has none.
  CHECK_THROWS_AS(extend_into_star(c, FinSeq{7}), WindowExhaustion);

  const SeqFamily u2 = uniform_family(W8, 2);
  for (const FinSeq& t : u2.members()) CHECK(extend_into_star(u2, t) == t);
}
