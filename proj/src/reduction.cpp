#include "bqokit/reduction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "bqokit/errors.hpp"

namespace bqokit {

namespace {

bool triple_less(const SigmaTriple& a, const SigmaTriple& b) {
  if (a.s.lh() != b.s.lh()) return a.s.lh() < b.s.lh();
  if (a.xs != b.xs) return a.xs < b.xs;
  if (a.ys != b.ys) return a.ys < b.ys;
  return a.s < b.s;
}

}  // namespace

SigmaCode::SigmaCode(Window w, std::vector<SigmaTriple> triples)
    : window_(w), triples_(std::move(triples)) {
  for (const SigmaTriple& t : triples_) {
    if (t.xs.lh() != t.s.lh() || t.ys.lh() != t.s.lh())
      throw std::invalid_argument("code triple components must share one length: " + t.xs.str() +
                                  " " + t.ys.str() + " " + t.s.str());
    if (t.s.lh() == 0)
      throw std::invalid_argument("the empty triple is not a legal code entry");
    if (!t.ys.is_binary())
      throw std::invalid_argument("code triple y component must be binary: " + t.ys.str());
    if (t.s.lh() > window_.length_bound)
      throw std::invalid_argument("code triple " + t.s.str() + " longer than window bound " +
                                  std::to_string(window_.length_bound));
    if (t.s.last() >= window_.base_bound)
      throw std::invalid_argument("code triple " + t.s.str() + " has entries beyond window bound " +
                                  std::to_string(window_.base_bound));
    for (Nat v : t.xs.entries())
      if (v >= window_.base_bound)
        throw std::invalid_argument("code triple x component " + t.xs.str() +
                                    " has entries beyond window bound " +
                                    std::to_string(window_.base_bound));
  }
  std::sort(triples_.begin(), triples_.end(), triple_less);
  triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());
  // Componentwise strict-initial-segment comparability; sorting by length means
  // only (shorter, longer) pairs need a look.
  for (std::size_t a = 0; a < triples_.size(); ++a)
    for (std::size_t b = a + 1; b < triples_.size(); ++b) {
      const SigmaTriple &ta = triples_[a], &tb = triples_[b];
      if (ta.s.lh() < tb.s.lh() && is_prefix(ta.xs, tb.xs) && is_prefix(ta.ys, tb.ys) &&
          is_prefix(ta.s, tb.s))
        throw std::invalid_argument("code triples must be componentwise incomparable: " +
                                    ta.s.str() + " extends into " + tb.s.str());
    }
}

std::size_t SigmaCode::max_triple_length() const noexcept {
  return triples_.empty() ? 0 : triples_.back().s.lh();
}

bool qpair_less(const QPair& a, const QPair& b) noexcept {
  if (a.s.lh() != b.s.lh()) return a.s.lh() < b.s.lh();
  if (a.sigma != b.sigma) return a.sigma < b.sigma;
  return a.s < b.s;
}

bool rx(const QPair& p, const QPair& q) noexcept {
  return !is_prefix(p.sigma, q.sigma) || !shift_rel(p.s, q.s);
}

CodeSlice::CodeSlice(const SigmaCode& code, const FreeSeq& x) {
  if (x.lh() < code.max_triple_length())
    throw InsufficientPrefix("x prefix of length " + std::to_string(x.lh()) +
                             " cannot decide triples of length " +
                             std::to_string(code.max_triple_length()));
  for (const SigmaTriple& t : code.triples()) {
    if (t.xs == prefix(x, t.xs.lh())) pairs_.push_back(QPair{t.ys, t.s});
  }
  std::sort(pairs_.begin(), pairs_.end(), qpair_less);
  // Distinct triples matching the same x agree on length, hence on the x
  // component, so (ys, s) never repeats here.
}

bool CodeSlice::contains(const FreeSeq& sigma, const FinSeq& s) const noexcept {
  QPair probe{sigma, s};
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), probe, qpair_less);
  return it != pairs_.end() && it->sigma == sigma && it->s == s;
}

bool CodeSlice::covered(const FreeSeq& sigma, const FinSeq& s) const {
  if (sigma.lh() != s.lh() || !sigma.is_binary()) return false;
  for (const FinSeq& t : dominated_below(s)) {
    bool met = false;
    for (std::size_t i = 0; i <= t.lh(); ++i)
      if (contains(prefix(sigma, i), prefix(t, i))) {
        met = true;
        break;
      }
    if (!met) return false;
  }
  return true;
}

bool CodeSlice::minimally_covered(const FreeSeq& sigma, const FinSeq& s) const {
  if (!covered(sigma, s)) return false;
  for (std::size_t i = 0; i < s.lh(); ++i)
    if (covered(prefix(sigma, i), prefix(s, i))) return false;
  return true;
}

std::vector<QPair> code_slice(const SigmaCode& code, const FreeSeq& x) {
  return CodeSlice(code, x).pairs();
}

bool covered(const SigmaCode& code, const FreeSeq& x, const FreeSeq& sigma, const FinSeq& s) {
  return CodeSlice(code, x).covered(sigma, s);
}

bool minimally_covered(const SigmaCode& code, const FreeSeq& x, const FreeSeq& sigma,
                       const FinSeq& s) {
  return CodeSlice(code, x).minimally_covered(sigma, s);
}

ReducedRelation::ReducedRelation(std::vector<QPair> carrier) : carrier_(std::move(carrier)) {
  std::sort(carrier_.begin(), carrier_.end(), qpair_less);
  for (const QPair& p : carrier_)
    if (!rx(p, p))
      throw std::logic_error("reduced relation is not reflexive at (" + p.sigma.str() + ", " +
                             p.s.str() + ")");
}

namespace {

// All binary sequences of the given length, lexicographically.
std::vector<FreeSeq> binary_seqs(std::size_t len) {
  std::vector<FreeSeq> out;
  std::vector<Nat> cur(len, 0);
  auto go = [&](auto&& self, std::size_t i) -> void {
    if (i == len) {
      out.push_back(FreeSeq(cur));
      return;
    }
    for (Nat b = 0; b <= 1; ++b) {
      cur[i] = b;
      self(self, i + 1);
    }
  };
  go(go, 0);
  return out;
}

// All increasing sequences of the given length with entries below bound,
// lexicographically.
std::vector<FinSeq> increasing_seqs(std::size_t len, Nat bound) {
  std::vector<FinSeq> out;
  std::vector<Nat> cur;
  cur.reserve(len);
  auto go = [&](auto&& self, std::size_t i) -> void {
    if (i == len) {
      out.push_back(FinSeq(cur));
      return;
    }
    const Nat lo = (i == 0) ? 0 : cur.back() + 1;
    for (Nat v = lo; v < bound; ++v) {
      cur.push_back(v);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  go(go, 0);
  return out;
}

using PairKey = std::pair<std::vector<Nat>, std::vector<Nat>>;

}  // namespace

ReducedRelation enumerate_carrier(const SigmaCode& code, const FreeSeq& x) {
  const CodeSlice slice(code, x);
  const Window w = code.window();
  // Bottom-up tables over the windowed (sigma, s) universe: cov says some
  // aligned initial segment of the pair lies in the slice; cvr is coverage of
  // the pair itself (every dominated t meets the slice through cov).
  std::map<PairKey, bool> cov, cvr, any_shorter_cvr;
  std::vector<QPair> carrier;
  for (std::size_t len = 0; len <= w.length_bound; ++len) {
    const auto sigmas = binary_seqs(len);
    const auto seqs = increasing_seqs(len, w.base_bound);
    for (const FreeSeq& sigma : sigmas) {
      for (const FinSeq& s : seqs) {
        PairKey key{sigma.entries(), s.entries()};
        bool c = slice.contains(sigma, s);
        if (!c && len > 0) {
          PairKey parent{prefix(sigma, len - 1).entries(), prefix(s, len - 1).entries()};
          c = cov.at(parent);
        }
        cov[key] = c;

        bool everywhere = true;
        for (const FinSeq& t : dominated_below(s))
          if (!cov.at(PairKey{sigma.entries(), t.entries()})) {
            everywhere = false;
            break;
          }
        cvr[key] = everywhere;

        bool shorter = false;
        if (len > 0) {
          PairKey parent{prefix(sigma, len - 1).entries(), prefix(s, len - 1).entries()};
          shorter = any_shorter_cvr.at(parent) || cvr.at(parent);
        }
        any_shorter_cvr[key] = shorter;

        if (everywhere && !shorter) carrier.push_back(QPair{sigma, s});
      }
    }
  }
  return ReducedRelation(std::move(carrier));
}

SeqFamily family_slice(const SigmaCode& code, const FreeSeq& x, const FreeSeq& y) {
  if (y.lh() < code.window().length_bound)
    throw InsufficientPrefix("y prefix of length " + std::to_string(y.lh()) +
                             " shorter than the window length bound " +
                             std::to_string(code.window().length_bound));
  if (!y.is_binary()) throw std::invalid_argument("y must be binary: " + y.str());
  const CodeSlice slice(code, x);
  std::vector<FinSeq> members;
  for (const QPair& p : slice.pairs())
    if (p.sigma == prefix(y, p.s.lh())) members.push_back(p.s);
  SeqFamily fam(code.window(), std::move(members));
  // Two comparable members would force componentwise comparable triples, which
  // the code constructor rejects.
  const auto& ms = fam.members();
  for (std::size_t a = 0; a < ms.size(); ++a)
    for (std::size_t b = a + 1; b < ms.size(); ++b)
      if (is_strict_prefix(ms[a], ms[b]))
        throw std::logic_error("y-slice has comparable members " + ms[a].str() + " and " +
                               ms[b].str() + "; code invariant broken");
  return fam;
}

CarrierStarReport carrier_star_check(const SigmaCode& code, const FreeSeq& x, const FreeSeq& y) {
  const SeqFamily fam = family_slice(code, x, y);
  const Window w = code.window();

  using Key = std::vector<Nat>;
  std::map<Key, bool> covy, dxy, in_star_tree, any_shorter_dxy, all_prefix_star_tree;
  for (std::size_t len = 0; len <= w.length_bound; ++len) {
    for (const FinSeq& s : increasing_seqs(len, w.base_bound)) {
      const Key key = s.entries();
      Key parent;
      if (len > 0) parent = prefix(s, len - 1).entries();

      bool c = fam.contains(s);
      if (!c && len > 0) c = covy.at(parent);
      covy[key] = c;

      bool d = true;
      for (const FinSeq& t : dominated_below(s))
        if (!covy.at(t.entries())) {
          d = false;
          break;
        }
      dxy[key] = d;
      any_shorter_dxy[key] = len > 0 && (any_shorter_dxy.at(parent) || dxy.at(parent));

      in_star_tree[key] = star_tree_contains(fam, s);
      all_prefix_star_tree[key] =
          len == 0 || (all_prefix_star_tree.at(parent) && in_star_tree.at(parent));
    }
  }
  for (std::size_t len = 0; len <= w.length_bound; ++len) {
    for (const FinSeq& s : increasing_seqs(len, w.base_bound)) {
      const Key key = s.entries();
      const bool carrier_side = dxy.at(key) && !any_shorter_dxy.at(key);
      const bool star_side = !in_star_tree.at(key) && all_prefix_star_tree.at(key);
      if (carrier_side != star_side) return {false, s, carrier_side, star_side};
    }
  }
  return {};
}

BadArrayReport bad_array_witness(const SigmaCode& code, const FreeSeq& x, const FreeSeq& y) {
  const SeqFamily fam = family_slice(code, x, y);
  if (fam.empty())
    throw PreconditionError("the y-slice is empty; an empty family cannot smooth to a block");
  const SeqFamily smoothed = star(fam);
  const BlockVerdict verdict = block_check(smoothed);
  if (verdict.status != BlockStatus::BlockInWindow)
    throw PreconditionError("the smoothing of the y-slice is not a window block");

  const CodeSlice slice(code, x);
  const auto& ms = smoothed.members();
  std::vector<QPair> values;
  values.reserve(ms.size());
  for (const FinSeq& s : ms) {
    QPair p{prefix(y, s.lh()), s};
    if (!slice.minimally_covered(p.sigma, p.s))
      throw std::logic_error("smoothing member " + s.str() +
                             " is not a carrier pair; correspondence broken");
    values.push_back(std::move(p));
  }

  RelationMatrix sub(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = 0; j < values.size(); ++j) sub.set(i, j, rx(values[i], values[j]));
  if (!sub.reflexive())
    throw std::logic_error("induced relation not reflexive on the array carrier");

  std::vector<std::pair<FinSeq, std::size_t>> assignments;
  assignments.reserve(ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i) assignments.emplace_back(ms[i], i);
  const BlockArray arr = BlockArray::with_indices(smoothed, std::move(assignments));

  BadArrayReport report;
  report.family = smoothed;
  report.pairs_checked = ms.size() * ms.size();
  for (const FinSeq& s : ms)
    for (const FinSeq& t : ms)
      if (shift_rel(s, t)) ++report.shift_pairs;
  report.good_pair = find_good_pair(arr, sub);
  return report;
}

}  // namespace bqokit
