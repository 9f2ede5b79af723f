#include "bqokit/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bqokit {

Nat draw(Rng& rng, Nat bound) {
  if (bound == 0) throw std::invalid_argument("draw: bound must be positive");
  return static_cast<Nat>(rng() % bound);
}

bool draw_bool(Rng& rng, double p) {
  // 53 explicit mantissa bits; identical on every platform, unlike
  // std::bernoulli_distribution.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

std::vector<FinSeq> all_window_seqs(Window w) {
  std::vector<FinSeq> out{FinSeq{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= w.length_bound; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      const Nat lo = out[i].empty() ? 0 : out[i].last() + 1;
      for (Nat v = lo; v < w.base_bound; ++v) out.push_back(concat(out[i], FinSeq{v}));
    }
    level_begin = level_end;
  }
  return out;
}

SeqFamily uniform_family(Window w, std::size_t len) {
  std::vector<FinSeq> members;
  for (const FinSeq& s : all_window_seqs(w))
    if (s.lh() == len) members.push_back(s);
  return SeqFamily(w, std::move(members));
}

SeqFamily two_level_family(Window w) {
  std::vector<FinSeq> members;
  for (Nat n = 1; n < w.base_bound; ++n) members.push_back(FinSeq{n});
  for (Nat m = 1; m < w.base_bound; ++m) members.push_back(FinSeq{0, m});
  return SeqFamily(w, std::move(members));
}

SeqFamily random_family(Rng& rng, Window w) {
  std::vector<FinSeq> members;
  for (const FinSeq& s : all_window_seqs(w)) {
    if (s.empty()) continue;
    // Dense at short lengths so the smoothing usually settles inside the
    // window instead of running out of room.
    const double p = s.lh() == 1 ? 0.85 : s.lh() == 2 ? 0.5 : 0.35;
    if (draw_bool(rng, p)) members.push_back(s);
  }
  return SeqFamily(w, std::move(members));
}

RelationMatrix random_reflexive(Rng& rng, std::size_t n, double density) {
  RelationMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.set(i, j, i == j || draw_bool(rng, density));
  return m;
}

FreeSeq random_bits(Rng& rng, std::size_t len) {
  std::vector<Nat> entries(len);
  for (Nat& e : entries) e = draw(rng, 2);
  return FreeSeq(std::move(entries));
}

FreeSeq random_free(Rng& rng, std::size_t len, Nat bound) {
  std::vector<Nat> entries(len);
  for (Nat& e : entries) e = draw(rng, bound);
  return FreeSeq(std::move(entries));
}

namespace {

FinSeq random_increasing(Rng& rng, std::size_t len, Nat bound) {
  std::vector<Nat> pool(bound);
  std::iota(pool.begin(), pool.end(), Nat{0});
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t j = i + draw(rng, static_cast<Nat>(bound - i));
    std::swap(pool[i], pool[j]);
  }
  std::vector<Nat> picked(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(len));
  std::sort(picked.begin(), picked.end());
  return FinSeq(std::move(picked));
}

bool triple_below(const SigmaTriple& a, const SigmaTriple& b) {
  return a.xs.lh() < b.xs.lh() && is_prefix(a.xs, b.xs) && is_prefix(a.ys, b.ys) &&
         is_prefix(a.s, b.s);
}

}  // namespace

SigmaCode random_code(Rng& rng, Window w, std::size_t max_triples) {
  const std::size_t max_len =
      std::min<std::size_t>(w.length_bound, w.base_bound);
  std::vector<SigmaTriple> accepted;
  for (std::size_t k = 0; k < max_triples; ++k) {
    const std::size_t len = 1 + draw(rng, static_cast<Nat>(max_len));
    SigmaTriple cand{random_free(rng, len, w.base_bound), random_bits(rng, len),
                     random_increasing(rng, len, w.base_bound)};
    bool ok = true;
    for (const SigmaTriple& t : accepted)
      if (triple_below(t, cand) || triple_below(cand, t)) {
        ok = false;
        break;
      }
    if (ok) accepted.push_back(std::move(cand));
  }
  return SigmaCode(w, std::move(accepted));
}

SigmaCode singleton_cover_code(Window w) {
  std::vector<SigmaTriple> triples;
  for (Nat a = 0; a < w.base_bound; ++a)
    for (Nat k = 0; k < w.base_bound; ++k)
      triples.push_back({FreeSeq{a}, FreeSeq{0}, FinSeq{k}});
  return SigmaCode(w, std::move(triples));
}

SigmaCode pair_cover_code(Window w, Nat x0, Nat x1) {
  std::vector<SigmaTriple> triples;
  for (Nat a = 0; a < w.base_bound; ++a)
    for (Nat b = a + 1; b < w.base_bound; ++b)
      triples.push_back({FreeSeq{x0, x1}, FreeSeq{0, 0}, FinSeq{a, b}});
  return SigmaCode(w, std::move(triples));
}

}  // namespace bqokit
