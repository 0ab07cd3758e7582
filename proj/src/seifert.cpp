#include "obcalc/seifert.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace obcalc::seifert {

using linalg::Int;

SeifertInvariants::SeifertInvariants(long long e0_, std::vector<Rat> mults)
    : e0(e0_), multiplicities(std::move(mults)) {
    for (const Rat& r : multiplicities)
        if (r <= 0 || r >= 1)
            throw std::invalid_argument("SeifertInvariants: multiplicities lie in (0,1)");
    std::sort(multiplicities.begin(), multiplicities.end());
}

SeifertInvariants ym_seifert(long long m) {
    if (m < 0) throw std::invalid_argument("ym_seifert: m must be >= 0");
    Rat half(1, 2);
    Rat last(1, static_cast<long>(m + 2));
    last.canonicalize();
    return SeifertInvariants(-1, {half, half, last});
}

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::vector<long long> negative_continued_fraction(Rat x) {
    std::vector<long long> out;
    for (;;) {
        Int fl;
        mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
        out.push_back(fl.get_si());
        Rat frac = x - Rat(fl);
        if (frac == 0) break;
        x = Rat(-1) / frac;
    }
    return out;
}

}  // namespace

IntMatrix seifert_linking_matrix(const SeifertInvariants& si) {
    std::vector<std::vector<long long>> arms;
    for (const Rat& r : si.multiplicities) arms.push_back(negative_continued_fraction(Rat(-1) / r));

    std::size_t n = 1;
    for (const auto& arm : arms) n += arm.size();
    IntMatrix m(n, n);
    m.at(0, 0) = linalg::to_int(si.e0);
    std::size_t idx = 1;
    for (const auto& arm : arms) {
        for (std::size_t j = 0; j < arm.size(); ++j) {
            m.at(idx, idx) = linalg::to_int(arm[j]);
            std::size_t prev = j == 0 ? 0 : idx - 1;
            m.at(idx, prev) = 1;
            m.at(prev, idx) = 1;
            ++idx;
        }
    }
    return m;
}

ManifoldClass classify_three_binding(long long p, long long q, long long r) {
    ManifoldClass out;
    out.pqr = {p, q, r};
    const std::set<long long> small{0, 1, -1};
    if (small.count(p) || small.count(q) || small.count(r)) {
        out.tag = ManifoldTag::connected_sum_of_lens_spaces;
        out.rule = "{0,+1,-1} meets {p,q,r}: connected sum of lens spaces";
        return out;
    }
    out.tag = ManifoldTag::small_sfs;
    out.e0 = floor_div(-1, p) + floor_div(-1, q) + floor_div(-1, r);
    out.rule = "no exponent in {0,+1,-1}: small Seifert fibered space, "
               "e0 = floor(-1/p)+floor(-1/q)+floor(-1/r)";
    return out;
}

bool e0_requires_two_negative(long long target_e0, long long bound) {
    for (long long p = -bound; p <= bound; ++p) {
        if (p >= -1 && p <= 1) continue;
        for (long long q = -bound; q <= bound; ++q) {
            if (q >= -1 && q <= 1) continue;
            for (long long r = -bound; r <= bound; ++r) {
                if (r >= -1 && r <= 1) continue;
                ManifoldClass c = classify_three_binding(p, q, r);
                if (c.e0 != target_e0) continue;
                int negatives = (p < 0) + (q < 0) + (r < 0);
                if (negatives != 2) return false;
            }
        }
    }
    return true;
}

bool right_veering_boundary_twists(const std::vector<long long>& exponents) {
    return std::all_of(exponents.begin(), exponents.end(),
                       [](long long e) { return e >= 0; });
}

bool right_veering_boundary_twists(
    const std::vector<std::pair<std::string, long long>>& labeled) {
    std::set<std::string> seen;
    std::vector<long long> exps;
    for (const auto& [label, exp] : labeled) {
        if (!seen.insert(label).second)
            throw std::invalid_argument(
                "right_veering_boundary_twists: repeated boundary label '" + label + "'");
        exps.push_back(exp);
    }
    return right_veering_boundary_twists(exps);
}

bool not_lens_space_certificate(const SeifertInvariants& si) {
    // Every multiplicity in (0,1) has denominator >= 2; three of them means
    // three genuine singular fibers.
    std::size_t singular = 0;
    for (const Rat& r : si.multiplicities)
        if (r.get_den() >= 2) ++singular;
    return singular >= 3;
}

}  // namespace obcalc::seifert
