#include "bqokit/json_io.hpp"

#include <fstream>
#include <limits>
#include <utility>

namespace bqokit {

namespace {

[[noreturn]] void fail(const std::string& what, const std::string& why) {
  throw SchemaError(what + ": " + why);
}

Nat load_nat(const Json& j, const std::string& what) {
  if (!j.is_number_unsigned()) fail(what, "expected a natural number");
  const auto v = j.get<std::uint64_t>();
  if (v > std::numeric_limits<Nat>::max()) fail(what, "number out of range");
  return static_cast<Nat>(v);
}

std::vector<Nat> load_nat_array(const Json& j, const std::string& what) {
  if (!j.is_array()) fail(what, "expected an array of naturals");
  std::vector<Nat> out;
  out.reserve(j.size());
  for (const Json& e : j) out.push_back(load_nat(e, what));
  return out;
}

const Json& field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object()) fail(what, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(what, std::string("missing key \"") + key + "\"");
  return *it;
}

}  // namespace

Json read_json(std::istream& in, const std::string& what) {
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) fail(what, "not valid JSON");
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(path, "cannot open file");
  return read_json(in, path);
}

FinSeq load_fin_seq(const Json& j) {
  auto entries = load_nat_array(j, "sequence");
  auto s = FinSeq::try_make(std::move(entries));
  if (!s) fail("sequence", "entries must be strictly increasing");
  return *std::move(s);
}

FreeSeq load_free_seq(const Json& j) { return FreeSeq(load_nat_array(j, "prefix")); }

Window load_window(const Json& j) {
  return Window{load_nat(field(j, "N", "window"), "window.N"),
                load_nat(field(j, "L", "window"), "window.L")};
}

SeqFamily load_family(const Json& j) {
  const Window w = load_window(field(j, "window", "family"));
  const Json& ms = field(j, "members", "family");
  if (!ms.is_array()) fail("family.members", "expected an array");
  std::vector<FinSeq> members;
  members.reserve(ms.size());
  for (const Json& m : ms) members.push_back(load_fin_seq(m));
  try {
    return SeqFamily(w, std::move(members));
  } catch (const std::invalid_argument& e) {
    fail("family", e.what());
  }
}

RelationMatrix load_matrix(const Json& j) {
  const std::size_t n = load_nat(field(j, "n", "relation"), "relation.n");
  const Json& bits = field(j, "bits", "relation");
  if (!bits.is_array() || bits.size() != n) fail("relation.bits", "expected n rows");
  RelationMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Json& row = bits[i];
    if (!row.is_array() || row.size() != n) fail("relation.bits", "expected n booleans per row");
    for (std::size_t k = 0; k < n; ++k) {
      if (!row[k].is_boolean()) fail("relation.bits", "expected n booleans per row");
      m.set(i, k, row[k].get<bool>());
    }
  }
  return m;
}

SigmaCode load_code(const Json& j) {
  const Window w = load_window(field(j, "window", "code"));
  const Json& ts = field(j, "triples", "code");
  if (!ts.is_array()) fail("code.triples", "expected an array");
  std::vector<SigmaTriple> triples;
  triples.reserve(ts.size());
  for (const Json& t : ts)
    triples.push_back({load_free_seq(field(t, "x", "code.triple")),
                       load_free_seq(field(t, "y", "code.triple")),
                       load_fin_seq(field(t, "s", "code.triple"))});
  try {
    return SigmaCode(w, std::move(triples));
  } catch (const std::invalid_argument& e) {
    fail("code", e.what());
  }
}

ReducedRelation load_reduced(const Json& j) {
  const Json& ps = field(j, "carrier", "relation");
  if (!ps.is_array()) fail("relation.carrier", "expected an array");
  std::vector<QPair> carrier;
  carrier.reserve(ps.size());
  for (const Json& p : ps)
    carrier.push_back({load_free_seq(field(p, "y", "carrier pair")),
                       load_fin_seq(field(p, "s", "carrier pair"))});
  try {
    return ReducedRelation(std::move(carrier));
  } catch (const std::logic_error& e) {
    fail("relation.carrier", e.what());
  }
}

BlockArray load_array(const Json& j) {
  SeqFamily family = load_family(field(j, "family", "array"));
  const Json& vs = field(j, "values", "array");
  if (!vs.is_array()) fail("array.values", "expected an array");
  std::vector<std::pair<FinSeq, std::size_t>> by_index;
  std::vector<std::pair<FinSeq, FinSeq>> by_seq;
  for (const Json& v : vs) {
    FinSeq s = load_fin_seq(field(v, "s", "array value"));
    const Json& q = field(v, "q", "array value");
    if (q.is_array())
      by_seq.emplace_back(std::move(s), load_fin_seq(q));
    else
      by_index.emplace_back(std::move(s), load_nat(q, "array value q"));
  }
  if (!by_index.empty() && !by_seq.empty())
    fail("array.values", "index values and sequence values cannot be mixed");
  try {
    if (by_seq.empty()) return BlockArray::with_indices(std::move(family), std::move(by_index));
    return BlockArray::with_seqs(std::move(family), std::move(by_seq));
  } catch (const std::invalid_argument& e) {
    fail("array.values", e.what());
  }
}

Json dump(const FinSeq& s) { return Json(s.entries()); }
Json dump(const FreeSeq& s) { return Json(s.entries()); }

Json dump(const Window& w) { return Json{{"N", w.base_bound}, {"L", w.length_bound}}; }

Json dump(const SeqFamily& c) {
  Json members = Json::array();
  for (const FinSeq& s : c.members()) members.push_back(dump(s));
  return Json{{"window", dump(c.window())}, {"members", std::move(members)}};
}

Json dump(const RelationMatrix& m) {
  Json bits = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m.at(i, j));
    bits.push_back(std::move(row));
  }
  return Json{{"n", m.size()}, {"bits", std::move(bits)}};
}

Json dump(const SigmaCode& code) {
  Json triples = Json::array();
  for (const SigmaTriple& t : code.triples())
    triples.push_back(Json{{"x", dump(t.xs)}, {"y", dump(t.ys)}, {"s", dump(t.s)}});
  return Json{{"window", dump(code.window())}, {"triples", std::move(triples)}};
}

Json dump(const ReducedRelation& rel) {
  Json carrier = Json::array();
  for (const QPair& p : rel.carrier())
    carrier.push_back(Json{{"y", dump(p.sigma)}, {"s", dump(p.s)}});
  return Json{{"carrier", std::move(carrier)}};
}

Json dump(const BlockArray& arr) {
  Json values = Json::array();
  const auto& members = arr.family().members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    Json q = arr.index_valued() ? Json(arr.index_at(i)) : dump(arr.seq_at(i));
    values.push_back(Json{{"s", dump(members[i])}, {"q", std::move(q)}});
  }
  return Json{{"family", dump(arr.family())}, {"values", std::move(values)}};
}

std::string block_status_name(BlockStatus s) {
  switch (s) {
    case BlockStatus::BlockInWindow: return "block-in-window";
    case BlockStatus::NotBlock: return "not-block";
    case BlockStatus::IndeterminateAtBoundary: return "indeterminate-at-boundary";
  }
  return "?";
}

Json dump(const BlockVerdict& v) {
  Json witness;  // null
  if (v.witness) {
    if (const auto* pair = std::get_if<std::pair<FinSeq, FinSeq>>(&*v.witness))
      witness = Json{{"pair", Json::array({dump(pair->first), dump(pair->second)})}};
    else
      witness = Json{{"uncovered", dump(std::get<FinSeq>(*v.witness))}};
  }
  return Json{{"status", block_status_name(v.status)}, {"witness", std::move(witness)}};
}

}  // namespace bqokit
