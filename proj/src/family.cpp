#include "bqokit/family.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "bqokit/errors.hpp"

namespace bqokit {

SeqFamily::SeqFamily(Window w, std::vector<FinSeq> members)
    : window_(w), members_(std::move(members)) {
  for (const FinSeq& s : members_) {
    if (s.lh() > window_.length_bound)
      throw std::invalid_argument("family member " + s.str() + " longer than window bound " +
                                  std::to_string(window_.length_bound));
    if (!s.empty() && s.last() >= window_.base_bound)
      throw std::invalid_argument("family member " + s.str() + " has entries beyond window bound " +
                                  std::to_string(window_.base_bound));
  }
  std::sort(members_.begin(), members_.end(),
            [](const FinSeq& a, const FinSeq& b) { return length_lex_less(a, b); });
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

std::size_t SeqFamily::max_length() const noexcept {
  return members_.empty() ? 0 : members_.back().lh();
}

bool SeqFamily::contains(const FinSeq& s) const noexcept {
  return contains(std::span<const Nat>(s.entries()));
}

bool SeqFamily::contains(std::span<const Nat> entries) const noexcept {
  auto cmp = [](const FinSeq& m, std::span<const Nat> v) {
    if (m.lh() != v.size()) return m.lh() < v.size();
    return std::lexicographical_compare(m.entries().begin(), m.entries().end(), v.begin(), v.end());
  };
  auto it = std::lower_bound(members_.begin(), members_.end(), entries, cmp);
  return it != members_.end() && it->lh() == entries.size() &&
         std::equal(it->entries().begin(), it->entries().end(), entries.begin());
}

std::vector<Nat> base(const SeqFamily& c) {
  std::set<Nat> seen;
  for (const FinSeq& s : c.members())
    seen.insert(s.entries().begin(), s.entries().end());
  return std::vector<Nat>(seen.begin(), seen.end());
}

std::optional<SmoothViolation> smooth_check(const SeqFamily& c) {
  const auto& ms = c.members();  // length-lex sorted: shorter members come first
  for (const FinSeq& s : ms) {
    for (const FinSeq& t : ms) {
      if (t.lh() <= s.lh()) continue;
      bool dominated = true;
      for (std::size_t i = 0; i < s.lh(); ++i)
        if (t[i] > s[i]) {
          dominated = false;
          break;
        }
      if (dominated) return SmoothViolation{s, t};
    }
  }
  return std::nullopt;
}

bool avoid_tree_contains(const SeqFamily& c, const FinSeq& s) {
  for (std::size_t i = 0; i <= s.lh(); ++i)
    if (c.contains(std::span<const Nat>(s.entries().data(), i))) return false;
  return true;
}

bool star_tree_contains(const SeqFamily& c, const FinSeq& s) {
  if (c.contains(std::span<const Nat>{})) return false;  // every tree branch dies at the root
  // Depth-first search for t <= s entrywise (equal length, increasing) with no
  // initial segment in C; branches whose running prefix hits C are pruned.
  std::vector<Nat> t;
  t.reserve(s.lh());
  auto go = [&](auto&& self, std::size_t i) -> bool {
    if (i == s.lh()) return true;
    const Nat lo = (i == 0) ? 0 : t.back() + 1;
    for (Nat v = lo; v <= s[i]; ++v) {
      t.push_back(v);
      if (!c.contains(std::span<const Nat>(t)) && self(self, i + 1)) return true;
      t.pop_back();
    }
    return false;
  };
  return go(go, 0);
}

bool star_contains(const SeqFamily& c, const FinSeq& s) {
  if (star_tree_contains(c, s)) return false;
  for (std::size_t i = 0; i < s.lh(); ++i)
    if (!star_tree_contains(c, prefix(s, i))) return false;
  return true;
}

SeqFamily star(const SeqFamily& c) {
  const Window w = c.window();
  std::vector<FinSeq> out;
  std::vector<FinSeq> level{FinSeq{}};
  while (!level.empty()) {
    std::vector<FinSeq> next;
    for (const FinSeq& s : level) {
      // Every proper initial segment of s is inside T*(C) by construction, so
      // membership in C* reduces to falling out of T*(C) at s itself.
      if (!star_tree_contains(c, s)) {
        out.push_back(s);
        continue;
      }
      if (s.lh() == w.length_bound)
        throw WindowExhaustion("length bound " + std::to_string(w.length_bound) +
                               " too small: branch " + s.str() + " is still undecided");
      const Nat lo = s.empty() ? 0 : s.last() + 1;
      for (Nat v = lo; v < w.base_bound; ++v)
        next.push_back(concat(s, FinSeq{v}));
    }
    level = std::move(next);
  }
  SeqFamily result(w, std::move(out));
  if (smooth_check(result))
    throw std::logic_error("smoothing produced a non-smooth family");
  return result;
}

BlockVerdict block_check(const SeqFamily& c) {
  if (c.empty()) return {BlockStatus::IndeterminateAtBoundary, std::nullopt};

  const auto& ms = c.members();  // length-lex order makes the witness pair deterministic
  for (std::size_t a = 0; a < ms.size(); ++a)
    for (std::size_t b = a + 1; b < ms.size(); ++b)
      if (is_strict_prefix(ms[a], ms[b]))
        return {BlockStatus::NotBlock, std::make_pair(ms[a], ms[b])};

  const std::vector<Nat> carrier = base(c);
  const std::size_t depth = c.max_length();
  // Enumerate increasing sequences over base(C) of length maxlen(C) in
  // lexicographic order; report the first one with no initial segment in C.
  std::vector<Nat> x;
  x.reserve(depth);
  std::optional<FinSeq> uncovered;
  auto covered = [&](const std::vector<Nat>& v) {
    for (std::size_t i = 0; i <= v.size(); ++i)
      if (c.contains(std::span<const Nat>(v.data(), i))) return true;
    return false;
  };
  auto go = [&](auto&& self, std::size_t from) -> bool {  // true = failure found
    if (x.size() == depth) {
      if (!covered(x)) {
        uncovered = FinSeq(x);
        return true;
      }
      return false;
    }
    for (std::size_t k = from; k < carrier.size(); ++k) {
      x.push_back(carrier[k]);
      if (self(self, k + 1)) return true;
      x.pop_back();
    }
    return false;
  };
  if (go(go, 0)) {
    if (depth >= c.window().length_bound)
      return {BlockStatus::IndeterminateAtBoundary, std::move(*uncovered)};
    return {BlockStatus::NotBlock, std::move(*uncovered)};
  }
  return {BlockStatus::BlockInWindow, std::nullopt};
}

FinSeq extend_into_star(const SeqFamily& c, const FinSeq& t) {
  if (!c.contains(t))
    throw std::invalid_argument("extend_into_star: " + t.str() + " is not a member");
  const SeqFamily st = star(c);
  for (const FinSeq& s : st.members())
    if (is_prefix(t, s)) return s;
  throw WindowExhaustion("no member of the smoothing extends " + t.str() + " inside the window");
}

}  // namespace bqokit
