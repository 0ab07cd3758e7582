#pragma once

#include <array>
#include <string>
#include <vector>

#include "obcalc/linalg.hpp"

namespace obcalc::seifert {

using linalg::IntMatrix;
using linalg::Rat;

// Seifert invariants M(e0; r1, ..., rk) with each ri in (0,1), sorted.
struct SeifertInvariants {
    long long e0 = 0;
    std::vector<Rat> multiplicities;

    SeifertInvariants() = default;
    SeifertInvariants(long long e0_, std::vector<Rat> mults);

    bool operator==(const SeifertInvariants&) const = default;
};

// The Seifert fibered description of Y_m: M(-1; 1/2, 1/2, 1/(m+2)).
SeifertInvariants ym_seifert(long long m);

// Star-shaped surgery presentation: central vertex framed e0 linked once
// to each arm; an arm for multiplicity r is the negative-continued-fraction
// chain of -1/r (a single -1/r vertex when r = 1/k).
IntMatrix seifert_linking_matrix(const SeifertInvariants& si);

enum class ManifoldTag { connected_sum_of_lens_spaces, small_sfs };

struct ManifoldClass {
    ManifoldTag tag = ManifoldTag::small_sfs;
    long long e0 = 0;  // meaningful for small_sfs only
    std::array<long long, 3> pqr{};
    std::string rule;  // which classification rule fired

    bool operator==(const ManifoldClass& o) const {
        return tag == o.tag && e0 == o.e0 && pqr == o.pqr;
    }
};

// Classification of the 3-manifold carried by the planar open book with
// three binding components and monodromy tau_a^p tau_b^q tau_c^r:
// a connected sum of lens spaces when {0,+-1} meets {p,q,r}, otherwise a
// small Seifert fibered space with e0 = floor(-1/p)+floor(-1/q)+floor(-1/r).
ManifoldClass classify_three_binding(long long p, long long q, long long r);

// Exhaustive check (entries outside {0,+-1}, |entries| <= bound): does
// e0 == target force exactly two of p, q, r negative?
bool e0_requires_two_negative(long long target_e0, long long bound);

// Right-veering test for a product of twists along disjoint curves, each
// parallel to a distinct boundary component of a planar page: right-veering
// iff every exponent is >= 0.
bool right_veering_boundary_twists(const std::vector<long long>& exponents);
// Overload with explicit boundary labels; repeated labels are rejected.
bool right_veering_boundary_twists(
    const std::vector<std::pair<std::string, long long>>& labeled);

// Three or more genuine singular fibers rule out a lens space. Inapplicable
// (false) otherwise; callers corroborate via H1 of the star presentation.
bool not_lens_space_certificate(const SeifertInvariants& si);

}  // namespace obcalc::seifert
