// Batch front end: every construction and verification as a subcommand over
// the JSON wire formats.  Reports go to stdout as JSON (stable key order,
// 2-space indent) so golden files can compare bytes; human summaries go to
// stderr.  Exit codes: 0 ok, 1 usage/internal, 2 schema, 3 insufficient
// prefix, 4 window exhaustion, 5 verification counterexample, 6 precondition.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bqokit/errors.hpp"
#include "bqokit/generate.hpp"
#include "bqokit/json_io.hpp"

namespace {

using namespace bqokit;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSchema = 2;
constexpr int kExitInsufficientPrefix = 3;
constexpr int kExitWindowExhaustion = 4;
constexpr int kExitCounterexample = 5;
constexpr int kExitPrecondition = 6;

int emit(const Json& report, const std::string& out_path) {
  const std::string body = report.dump(2) + "\n";
  std::cout << body;
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << out_path << "\n";
      return kExitUsage;
    }
    f << body;
  }
  return kExitOk;
}

Json pair_json(const std::pair<FinSeq, FinSeq>& p) {
  return Json{{"s", dump(p.first)}, {"t", dump(p.second)}};
}

int cmd_smooth(const std::string& in, const std::string& out) {
  const SeqFamily c = load_family(read_json_file(in));
  const auto input_violation = smooth_check(c);
  const SeqFamily st = star(c);
  const auto star_violation = smooth_check(st);
  const Json report{
      {"star", dump(st)},
      {"input_smooth", !input_violation.has_value()},
      {"input_violation",
       input_violation ? Json{{"s", dump(input_violation->s)}, {"t", dump(input_violation->t)}}
                       : Json()},
      {"star_smooth", !star_violation.has_value()},
  };
  std::cerr << "smooth: " << c.size() << " members in, " << st.size() << " out; input "
            << (input_violation ? "not smooth" : "smooth") << "; result "
            << (star_violation ? "NOT SMOOTH" : "smooth") << "\n";
  return emit(report, out);
}

const char* kind_name(OrderAxiomViolation::Kind k) {
  switch (k) {
    case OrderAxiomViolation::Kind::Reflexivity: return "reflexivity";
    case OrderAxiomViolation::Kind::Antisymmetry: return "antisymmetry";
    case OrderAxiomViolation::Kind::Transitivity: return "transitivity";
  }
  return "?";
}

int cmd_pouzet(const std::string& in, const std::string& out) {
  const RelationMatrix r = load_matrix(read_json_file(in));
  const OrderMatrix m = pouzet_order(r);
  const auto violation = order_axiom_violation(m);
  const bool contained = contained_in(m, r);
  const bool enum_ok = enumeration_compatible(m);
  const Json report{
      {"order", dump(m)},
      {"axioms_ok", !violation.has_value()},
      {"violation",
       violation ? Json{{"kind", kind_name(violation->kind)},
                        {"i", violation->i},
                        {"j", violation->j},
                        {"k", violation->k}}
                 : Json()},
      {"contained_in_input", contained},
      {"enumeration_compatible", enum_ok},
  };
  std::cerr << "pouzet: n = " << m.size() << "; axioms " << (violation ? "VIOLATED" : "ok")
            << "; contained " << (contained ? "yes" : "NO") << "; enumeration "
            << (enum_ok ? "ok" : "BROKEN") << "\n";
  const int rc = emit(report, out);
  if (rc != kExitOk) return rc;
  return (!violation && contained && enum_ok) ? kExitOk : kExitCounterexample;
}

int cmd_reduce(const std::string& code_path, const std::string& x_path, const std::string& y_path,
               const std::string& policy, const std::string& out) {
  const SigmaCode code = load_code(read_json_file(code_path));
  const FreeSeq x = load_free_seq(read_json_file(x_path));
  const ReducedRelation rel = enumerate_carrier(code, x);

  Json report{
      {"carrier", dump(rel)["carrier"]},
      {"sublemma", Json()},
      {"bad_array", Json()},
  };
  std::cerr << "reduce: " << code.size() << " triples, carrier size " << rel.size() << "\n";
  int rc = kExitOk;
  if (!y_path.empty()) {
    const FreeSeq y = load_free_seq(read_json_file(y_path));
    const CarrierStarReport sub = carrier_star_check(code, x, y);
    report["sublemma"] = Json{
        {"ok", sub.ok},
        {"witness", sub.witness ? dump(*sub.witness) : Json()},
        {"carrier_side", sub.carrier_side},
        {"star_side", sub.star_side},
    };
    std::cerr << "reduce: carrier/star correspondence "
              << (sub.ok ? "holds" : "FAILS") << "\n";
    if (!sub.ok) rc = kExitCounterexample;

    const SeqFamily sliced = family_slice(code, x, y);
    if (sliced.empty())
      throw PreconditionError("the y-slice is empty; an empty family cannot smooth to a block");
    bool run_bad_array = false;
    try {
      const BlockVerdict verdict = block_check(star(sliced));
      if (verdict.status == BlockStatus::BlockInWindow) {
        run_bad_array = true;
      } else if (verdict.status == BlockStatus::NotBlock) {
        throw PreconditionError("sliced family does not smooth to a window block");
      } else if (policy == "strict") {
        throw WindowExhaustion("block verdict indeterminate at the window boundary");
      } else {
        std::cerr << "warning: block verdict indeterminate; skipping the array stage\n";
      }
    } catch (const WindowExhaustion&) {
      if (policy == "strict") throw;
      std::cerr << "warning: window exhausted while smoothing; skipping the array stage\n";
    }
    if (run_bad_array) {
      const BadArrayReport bar = bad_array_witness(code, x, y);
      report["bad_array"] = Json{
          {"family", dump(bar.family)},
          {"pairs_checked", bar.pairs_checked},
          {"shift_pairs", bar.shift_pairs},
          {"good_pair", bar.good_pair ? pair_json(*bar.good_pair) : Json()},
      };
      std::cerr << "reduce: scanned " << bar.pairs_checked << " pairs (" << bar.shift_pairs
                << " shift-related), " << (bar.good_pair ? "GOOD PAIR FOUND" : "no good pair")
                << "\n";
      if (bar.good_pair) rc = kExitCounterexample;
    }
  }
  const int erc = emit(report, out);
  return erc != kExitOk ? erc : rc;
}

const char* bounds_status_name(ValueBoundsReport::Status s) {
  switch (s) {
    case ValueBoundsReport::Status::Ok: return "ok";
    case ValueBoundsReport::Status::FamilyNotSmooth: return "family-not-smooth";
    case ValueBoundsReport::Status::ArrayNotPerfect: return "array-not-perfect";
    case ValueBoundsReport::Status::LengthBoundFailed: return "length-bound-failed";
    case ValueBoundsReport::Status::DominationFailed: return "domination-failed";
  }
  return "?";
}

int cmd_check(const std::string& family_path, const std::string& array_path,
              const std::string& relation_path, const std::string& codomain_path,
              const std::string& policy, const std::string& out) {
  if (family_path.empty() && array_path.empty())
    throw SchemaError("check: nothing to do; give --family and/or --array");
  if (array_path.empty() && (!relation_path.empty() || !codomain_path.empty()))
    throw SchemaError("check: --relation/--codomain make sense only with --array");

  Json report{
      {"block", Json()},
      {"perfect", Json()},
      {"good_pair", Json()},
      {"value_bounds", Json()},
  };
  int rc = kExitOk;

  if (!family_path.empty()) {
    const SeqFamily c = load_family(read_json_file(family_path));
    const BlockVerdict verdict = block_check(c);
    report["block"] = dump(verdict);
    std::cerr << "check: family of " << c.size() << " is " << block_status_name(verdict.status)
              << "\n";
    if (verdict.status == BlockStatus::NotBlock) {
      rc = kExitCounterexample;
    } else if (verdict.status == BlockStatus::IndeterminateAtBoundary) {
      if (policy == "strict")
        rc = kExitWindowExhaustion;
      else
        std::cerr << "warning: block verdict indeterminate at the window boundary\n";
    }
  }

  if (!array_path.empty()) {
    const BlockArray arr = load_array(read_json_file(array_path));
    std::optional<std::pair<FinSeq, FinSeq>> imperfect;
    if (!relation_path.empty()) {
      if (!arr.index_valued())
        throw SchemaError("check: --relation needs an index-valued array");
      const RelationMatrix r = load_matrix(read_json_file(relation_path));
      imperfect = perfect_check(arr, r);
      const auto good = find_good_pair(arr, r);
      report["good_pair"] = Json{{"found", good.has_value()},
                                 {"pair", good ? pair_json(*good) : Json()}};
      std::cerr << "check: " << (good ? "good pair found" : "no good pair") << "\n";
    } else if (!arr.index_valued()) {
      imperfect = perfect_check(arr);
    } else {
      throw SchemaError("check: an index-valued array needs --relation");
    }
    report["perfect"] = Json{{"ok", !imperfect.has_value()},
                             {"violation", imperfect ? pair_json(*imperfect) : Json()}};
    std::cerr << "check: array is " << (imperfect ? "NOT perfect" : "perfect") << "\n";
    if (imperfect && rc == kExitOk) rc = kExitCounterexample;

    if (!codomain_path.empty()) {
      if (arr.index_valued())
        throw SchemaError("check: --codomain needs a sequence-valued array");
      const SeqFamily codomain = load_family(read_json_file(codomain_path));
      const ValueBoundsReport vb = value_bounds_check(codomain, arr);
      report["value_bounds"] = Json{
          {"status", bounds_status_name(vb.status)},
          {"pair", vb.pair_witness ? pair_json(*vb.pair_witness) : Json()},
          {"member", vb.member ? dump(*vb.member) : Json()},
      };
      std::cerr << "check: value bounds " << bounds_status_name(vb.status) << "\n";
      if (vb.status != ValueBoundsReport::Status::Ok && rc == kExitOk) {
        const bool precondition = vb.status == ValueBoundsReport::Status::FamilyNotSmooth ||
                                  vb.status == ValueBoundsReport::Status::ArrayNotPerfect;
        rc = precondition ? kExitPrecondition : kExitCounterexample;
      }
    }
  }

  const int erc = emit(report, out);
  return erc != kExitOk ? erc : rc;
}

int cmd_selftest(std::uint64_t seed, Nat wn, Nat wl, const std::string& out) {
  Rng rng(seed);
  const Window w{wn, wl};

  const int n_families = 25;
  int exhausted = 0, smooth_failures = 0, block_failures = 0;
  for (int i = 0; i < n_families; ++i) {
    const SeqFamily c = random_family(rng, w);
    try {
      const SeqFamily st = star(c);
      if (smooth_check(st)) ++smooth_failures;
      if (block_check(st).status != BlockStatus::BlockInWindow) ++block_failures;
    } catch (const WindowExhaustion&) {
      ++exhausted;
    }
  }

  const int n_relations = 25;
  int pouzet_failures = 0;
  for (int i = 0; i < n_relations; ++i) {
    const std::size_t n = 3 + draw(rng, 10);
    const RelationMatrix r = random_reflexive(rng, n, 0.4);
    const OrderMatrix m = pouzet_order(r);
    if (order_axiom_violation(m) || !contained_in(m, r) || !enumeration_compatible(m))
      ++pouzet_failures;
  }

  const int n_codes = 10;
  int sublemma_failures = 0, good_pairs = 0, blocks = 0, undecided = 0;
  // Two cover codes with matching x so the array stage is guaranteed to see
  // window blocks, then the random sweep.
  std::vector<std::pair<SigmaCode, FreeSeq>> jobs;
  jobs.emplace_back(singleton_cover_code(w), random_free(rng, wl, wn));
  if (wl >= 2) {
    std::vector<Nat> xe{0, 1};
    while (xe.size() < wl) xe.push_back(draw(rng, wn));
    jobs.emplace_back(pair_cover_code(w, 0, 1), FreeSeq(std::move(xe)));
  }
  for (int i = 0; i < n_codes; ++i)
    jobs.emplace_back(random_code(rng, w, 12), random_free(rng, wl, wn));
  for (const auto& [code, x] : jobs) {
    for (Nat bit : {Nat{0}, Nat{1}}) {
      const FreeSeq y(std::vector<Nat>(wl, bit));
      if (!carrier_star_check(code, x, y).ok) ++sublemma_failures;
      try {
        const SeqFamily sliced = family_slice(code, x, y);
        if (sliced.empty()) {
          ++undecided;
          continue;
        }
        const BlockVerdict verdict = block_check(star(sliced));
        if (verdict.status == BlockStatus::BlockInWindow) {
          ++blocks;
          if (bad_array_witness(code, x, y).good_pair) ++good_pairs;
        } else {
          ++undecided;
        }
      } catch (const WindowExhaustion&) {
        ++undecided;
      }
    }
  }

  const bool ok = smooth_failures == 0 && block_failures == 0 && pouzet_failures == 0 &&
                  sublemma_failures == 0 && good_pairs == 0;
  const Json report{
      {"seed", seed},
      {"window", dump(w)},
      {"families",
       Json{{"count", n_families},
            {"window_exhausted", exhausted},
            {"smooth_failures", smooth_failures},
            {"block_failures", block_failures}}},
      {"pouzet", Json{{"count", n_relations}, {"failures", pouzet_failures}}},
      {"codes",
       Json{{"count", jobs.size()},
            {"prefixes_each", 2},
            {"sublemma_failures", sublemma_failures},
            {"blocks_reached", blocks},
            {"undecided_slices", undecided},
            {"good_pairs", good_pairs}}},
      {"ok", ok},
  };
  std::cerr << "selftest: " << (ok ? "all properties hold" : "FAILURES") << " (seed " << seed
            << ")\n";
  const int erc = emit(report, out);
  if (erc != kExitOk) return erc;
  return ok ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-window toolkit: shift calculus, smoothing, order refinement, carrier reduction"};
  app.require_subcommand(1);

  std::string sm_in, sm_out;
  auto* sm = app.add_subcommand("smooth", "smooth a family and verify the result");
  sm->add_option("family", sm_in, "family JSON file")->required();
  sm->add_option("--out", sm_out, "also write the report to this file");

  std::string pz_in, pz_out;
  auto* pz = app.add_subcommand("pouzet", "refine a reflexive relation into a partial order");
  pz->add_option("relation", pz_in, "relation JSON file")->required();
  pz->add_option("--out", pz_out, "also write the report to this file");

  std::string rd_code, rd_x, rd_y, rd_policy = "strict", rd_out;
  auto* rd = app.add_subcommand("reduce", "carrier of the reduced relation for a code along x");
  rd->add_option("code", rd_code, "code JSON file")->required();
  rd->add_option("x", rd_x, "x prefix JSON file (bare array)")->required();
  rd->add_option("y", rd_y, "binary y prefix JSON file; adds the slice and array stages");
  rd->add_option("--boundary-policy", rd_policy, "strict|warn on indeterminate block verdicts")
      ->check(CLI::IsMember({"strict", "warn"}));
  rd->add_option("--out", rd_out, "also write the report to this file");

  std::string ck_family, ck_array, ck_relation, ck_codomain, ck_policy = "strict", ck_out;
  auto* ck = app.add_subcommand("check", "verdicts for blocks and arrays");
  ck->add_option("--family", ck_family, "family JSON file for the block verdict");
  ck->add_option("--array", ck_array, "array JSON file");
  ck->add_option("--relation", ck_relation, "relation JSON file (index-valued arrays)");
  ck->add_option("--codomain", ck_codomain, "family JSON file for the value-bounds check");
  ck->add_option("--boundary-policy", ck_policy, "strict|warn on indeterminate block verdicts")
      ->check(CLI::IsMember({"strict", "warn"}));
  ck->add_option("--out", ck_out, "also write the report to this file");

  std::uint64_t st_seed = 20240901;
  bqokit::Nat st_n = 8, st_l = 3;
  std::string st_out;
  auto* st = app.add_subcommand("selftest", "seeded property sweep over every module");
  st->add_option("--seed", st_seed, "corpus seed");
  st->add_option("--window-n", st_n, "entry bound of the corpus window");
  st->add_option("--window-l", st_l, "length bound of the corpus window");
  st->add_option("--out", st_out, "also write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sm->parsed()) return cmd_smooth(sm_in, sm_out);
    if (pz->parsed()) return cmd_pouzet(pz_in, pz_out);
    if (rd->parsed()) return cmd_reduce(rd_code, rd_x, rd_y, rd_policy, rd_out);
    if (ck->parsed()) return cmd_check(ck_family, ck_array, ck_relation, ck_codomain, ck_policy, ck_out);
    if (st->parsed()) return cmd_selftest(st_seed, st_n, st_l, st_out);
  } catch (const bqokit::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const bqokit::InvalidRelation& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const bqokit::InsufficientPrefix& e) {
    std::cerr << "insufficient prefix: " << e.what() << "\n";
    return kExitInsufficientPrefix;
  } catch (const bqokit::WindowExhaustion& e) {
    std::cerr << "window exhausted: " << e.what() << "\n";
    return kExitWindowExhaustion;
  } catch (const bqokit::PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
