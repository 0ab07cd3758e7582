// Test-only oracles, independent of the implementation paths they check.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "obcalc/linalg.hpp"
#include "obcalc/words.hpp"

namespace oracles {

// Checks U*A*V == D, D diagonal with a divisibility chain, U and V
// unimodular; for square A also |det A| == product of the diagonal.
bool smith_result_valid(const obcalc::linalg::IntMatrix& a,
                        const obcalc::linalg::SmithResult& r);

// Signature via the characteristic polynomial: Faddeev-LeVerrier
// coefficients, then Descartes sign variations (exact for real-rooted
// polynomials).
long charpoly_signature(const obcalc::linalg::IntMatrix& s);

// Words over {a, A, b, B} encoded as one byte per letter:
// bit 0 = inverse flag, bit 1 = generator (0 -> a, 1 -> b).
using BraidLetters = std::vector<std::uint8_t>;

BraidLetters to_letters(const obcalc::words::TwistWord& w);
obcalc::words::TwistWord from_letters(const BraidLetters& ls);
BraidLetters free_reduce(const BraidLetters& w);

// Breadth-first rewriting reachability between freely reduced words:
// moves are the braid relation on sign-uniform triples and insertion of
// cancelling pairs, with every intermediate word bounded to max_len
// letters. Returns nullopt if the node budget is exhausted undecided.
std::optional<bool> bfs_words_equal(const BraidLetters& w1, const BraidLetters& w2,
                                    std::size_t max_len = 14,
                                    std::size_t node_cap = 4'000'000);

}  // namespace oracles
