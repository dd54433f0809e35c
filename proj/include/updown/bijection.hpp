#pragma once

#include "updown/patterns.hpp"
#include "updown/tree.hpp"
#include "updown/word.hpp"

namespace updown {

// Bijections between trimmed primitive words (a primitive word on
// P ∪ {m+1, m+2} with its first and last digits removed) and decreasing
// 012-trees on P.

/// (m+2, w, m+1) with m = max(w); the empty word wraps to 21.
Word wrap(const Word& w);

/// Drops the first and last digits of a word whose first digit is the
/// maximum and last digit the runner-up. Throws PreconditionError otherwise.
Word strip(const Word& w);

/// Word to tree. With m at position k:
///   G: k = 1       -> [m, phi(w[2,n])]
///   R: k = n       -> [m, phi(w[1,n-1]*)]
///   otherwise      -> [m, phi(w[1,k-1]*), phi(w[k+1,n])]
/// Throws PreconditionError unless is_trimmed_member(v, w).
DecreasingTree phi(Variant v, const Word& w);

/// Tree to word, inverse of phi.
///   G: [m,T']    -> (m, psi(T'))
///      [m,T',T''] with min label in T'' -> (psi(T')*, m, psi(T''))
///   R: [m,T']    -> (psi(T')*, m)
///      [m,T',T''] with last(psi(T')) < last(psi(T'')) -> (psi(T')*, m, psi(T''))
Word psi(Variant v, const DecreasingTree& t);

}  // namespace updown
