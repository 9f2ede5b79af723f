#include <sstream>
#include <utility>
#include <vector>

#include <doctest.h>

#include "bqokit/errors.hpp"
#include "bqokit/generate.hpp"
#include "bqokit/json_io.hpp"

using namespace bqokit;

namespace {
const Window W8{8, 3};
const Window W6{6, 3};
}  // namespace

TEST_CASE("parsing failures surface as schema errors") {
  std::istringstream bad("{not json");
  CHECK_THROWS_AS(read_json(bad, "input"), SchemaError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/path.json"), SchemaError);
  std::istringstream ok("[0,1]");
  CHECK(read_json(ok, "input") == Json::parse("[0,1]"));
}

TEST_CASE("sequences round-trip and reject malformed entries") {
  const FinSeq s{0, 2, 5};
  CHECK(load_fin_seq(dump(s)) == s);
  CHECK(dump(s) == Json::parse("[0,2,5]"));
  CHECK_THROWS_AS(load_fin_seq(Json::parse("[3,1]")), SchemaError);   // not increasing
  CHECK_THROWS_AS(load_fin_seq(Json::parse("[\"a\"]")), SchemaError); // wrong type
  CHECK_THROWS_AS(load_fin_seq(Json::parse("{}")), SchemaError);
  CHECK_THROWS_AS(load_fin_seq(Json::parse("[-1]")), SchemaError);

  const FreeSeq y{1, 1, 0};
  CHECK(load_free_seq(dump(y)) == y);
  CHECK(load_free_seq(Json::parse("[3,1]")) == FreeSeq{3, 1});  // repeats are fine here
}

TEST_CASE("windows and families") {
  CHECK(load_window(Json::parse("{\"N\":8,\"L\":3}")) == W8);
  CHECK_THROWS_AS(load_window(Json::parse("{\"N\":8}")), SchemaError);
  CHECK_THROWS_AS(load_window(Json::parse("[8,3]")), SchemaError);

  const SeqFamily c = two_level_family(W8);
  CHECK(load_family(dump(c)) == c);

  // Members canonicalize on load and must respect the window.
  const Json shuffled = Json::parse(
      "{\"window\":{\"N\":8,\"L\":3},\"members\":[[3],[1],[3],[0,4]]}");
  CHECK(load_family(shuffled) ==
        SeqFamily(W8, {FinSeq{1}, FinSeq{3}, FinSeq{0, 4}}));
  CHECK_THROWS_AS(
      load_family(Json::parse("{\"window\":{\"N\":8,\"L\":3},\"members\":[[9]]}")),
      SchemaError);
  CHECK_THROWS_AS(
      load_family(Json::parse("{\"window\":{\"N\":8,\"L\":1},\"members\":[[0,4]]}")),
      SchemaError);
}

TEST_CASE("relation matrices") {
  Rng rng(3);
  const RelationMatrix r = random_reflexive(rng, 4, 0.5);
  CHECK(load_matrix(dump(r)) == r);
  CHECK_THROWS_AS(load_matrix(Json::parse("{\"n\":2,\"bits\":[[true,false]]}")),
                  SchemaError);  // missing row
  CHECK_THROWS_AS(load_matrix(Json::parse("{\"n\":2,\"bits\":[[true],[false,true]]}")),
                  SchemaError);  // ragged row
  CHECK_THROWS_AS(load_matrix(Json::parse("{\"n\":1,\"bits\":[[1]]}")), SchemaError);
}

TEST_CASE("codes and carriers") {
  const SigmaCode code = pair_cover_code(W6, 0, 1);
  CHECK(load_code(dump(code)) == code);

  CHECK_THROWS_AS(
      load_code(Json::parse("{\"window\":{\"N\":6,\"L\":3},\"triples\":"
                            "[{\"x\":[0],\"y\":[0,0],\"s\":[1]}]}")),
      SchemaError);  // ragged triple
  CHECK_THROWS_AS(
      load_code(Json::parse("{\"window\":{\"N\":6,\"L\":3},\"triples\":"
                            "[{\"x\":[0],\"y\":[0]}]}")),
      SchemaError);  // missing component

  const ReducedRelation rel = enumerate_carrier(singleton_cover_code(W6), FreeSeq{0, 1, 2});
  const ReducedRelation back = load_reduced(dump(rel));
  CHECK(back.carrier() == rel.carrier());
  CHECK_THROWS_AS(load_reduced(Json::parse("{\"carrier\":[{\"y\":[],\"s\":[]}]}")),
                  SchemaError);  // the empty pair breaks reflexivity
}

TEST_CASE("block arrays in both flavors") {
  const SeqFamily ones = uniform_family(W8, 1);
  std::vector<std::pair<FinSeq, std::size_t>> ia;
  for (const FinSeq& s : ones.members()) ia.emplace_back(s, s[0]);
  const BlockArray idx = BlockArray::with_indices(ones, std::move(ia));
  const BlockArray idx2 = load_array(dump(idx));
  CHECK(idx2.family() == ones);
  REQUIRE(idx2.index_valued());
  for (std::size_t i = 0; i < ones.size(); ++i) CHECK(idx2.index_at(i) == idx.index_at(i));

  const SeqFamily twos = uniform_family(W8, 2);
  std::vector<std::pair<FinSeq, FinSeq>> sa;
  for (const FinSeq& s : twos.members()) sa.emplace_back(s, prefix(s, 1));
  const BlockArray seq = BlockArray::with_seqs(twos, std::move(sa));
  const BlockArray seq2 = load_array(dump(seq));
  REQUIRE_FALSE(seq2.index_valued());
  for (std::size_t i = 0; i < twos.size(); ++i) CHECK(seq2.seq_at(i) == seq.seq_at(i));

  const char* mixed =
      "{\"family\":{\"window\":{\"N\":3,\"L\":1},\"members\":[[0],[1]]},"
      "\"values\":[{\"s\":[0],\"q\":0},{\"s\":[1],\"q\":[1]}]}";
  CHECK_THROWS_AS(load_array(Json::parse(mixed)), SchemaError);

  const char* partial =
      "{\"family\":{\"window\":{\"N\":3,\"L\":1},\"members\":[[0],[1]]},"
      "\"values\":[{\"s\":[0],\"q\":0}]}";
  CHECK_THROWS_AS(load_array(Json::parse(partial)), SchemaError);
}

TEST_CASE("block verdict serialization") {
  CHECK(block_status_name(BlockStatus::BlockInWindow) == "block-in-window");
  CHECK(block_status_name(BlockStatus::NotBlock) == "not-block");
  CHECK(block_status_name(BlockStatus::IndeterminateAtBoundary) == "indeterminate-at-boundary");

  const Json blocked = dump(block_check(two_level_family(W8)));
  CHECK(blocked["status"] == "block-in-window");
  CHECK(blocked["witness"].is_null());

  const Json pairj = dump(block_check(SeqFamily(W8, {FinSeq{1}, FinSeq{1, 2}, FinSeq{3}})));
  CHECK(pairj["status"] == "not-block");
  CHECK(pairj["witness"]["pair"] == Json::parse("[[1],[1,2]]"));

  const Json uncov = dump(block_check(SeqFamily(W8, {FinSeq{1, 2}, FinSeq{3}})));
  CHECK(uncov["status"] == "not-block");
  CHECK(uncov["witness"]["uncovered"] == Json::parse("[1,3]"));
}

TEST_CASE("serialization is deterministic") {
  const SeqFamily c = two_level_family(W8);
  CHECK(dump(c).dump(2) == dump(c).dump(2));
  CHECK(dump(load_family(dump(c))) == dump(c));
  const SigmaCode code = singleton_cover_code(W6);
  CHECK(dump(load_code(dump(code))) == dump(code));
}
