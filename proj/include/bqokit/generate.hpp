#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bqokit/family.hpp"
#include "bqokit/pouzet.hpp"
#include "bqokit/reduction.hpp"
#include "bqokit/seq.hpp"

namespace bqokit {

using Rng = std::mt19937_64;

// Draw below bound using raw engine output; std::uniform_int_distribution is
// not bit-identical across standard libraries, and golden files care.
Nat draw(Rng& rng, Nat bound);
bool draw_bool(Rng& rng, double p);

// Every increasing sequence inside the window, length-lex ordered.
std::vector<FinSeq> all_window_seqs(Window w);

// [window]^len: all increasing sequences of exactly len entries below the base
// bound, as a family.
SeqFamily uniform_family(Window w, std::size_t len);

// The split cover: singletons <n> for n >= 1 together with the pairs <0,m>
// for m >= 1.  A window block whose smoothing is [window]^2.
SeqFamily two_level_family(Window w);

// Random subfamily of the window, denser at short lengths so the smoothing
// usually finishes inside the window.
SeqFamily random_family(Rng& rng, Window w);

// Random reflexive relation with the given off-diagonal density.
RelationMatrix random_reflexive(Rng& rng, std::size_t n, double density);

// Random binary / unconstrained prefixes.
FreeSeq random_bits(Rng& rng, std::size_t len);
FreeSeq random_free(Rng& rng, std::size_t len, Nat bound);

// Random code: up to max_triples pairwise incomparable triples inside the
// window (proposals that would break an invariant are dropped).
SigmaCode random_code(Rng& rng, Window w, std::size_t max_triples);

// Codes with known slices, used by fixtures and the lemma suites.  The
// singleton cover matches any x and any y starting 0 with the full [window]^1;
// the pair cover matches x extending x0,x1 and y starting 0,0 with [window]^2.
SigmaCode singleton_cover_code(Window w);
SigmaCode pair_cover_code(Window w, Nat x0, Nat x1);

}  // namespace bqokit
