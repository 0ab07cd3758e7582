#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace obcalc::words {

using Int = mpz_class;

// Primitive homology class (p,q) on the once-punctured torus, held up to
// global sign: a Dehn twist does not depend on the orientation of its
// curve. Canonical representative has p > 0, or p == 0 and q > 0.
struct CurveClass {
    long long p = 1;
    long long q = 0;

    CurveClass() = default;
    CurveClass(long long p_, long long q_);

    static CurveClass a() { return CurveClass(1, 0); }
    static CurveClass b() { return CurveClass(0, 1); }

    bool is_generator() const { return *this == a() || *this == b(); }

    bool operator==(const CurveClass&) const = default;
};

struct Letter {
    CurveClass curve;
    long long exponent = 1;  // nonzero

    bool operator==(const Letter&) const = default;
};

// Word in signed Dehn twists, freely reduced: adjacent letters along the
// same curve are merged and zero exponents dropped. Words compose left to
// right ("apply w1 first, then w2").
class TwistWord {
  public:
    TwistWord() = default;
    explicit TwistWord(std::vector<Letter> letters);
    TwistWord(std::initializer_list<Letter> letters)
        : TwistWord(std::vector<Letter>(letters)) {}

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }
    // Total letter count with exponents expanded.
    std::size_t generator_length() const;
    bool all_generator_curves() const;

    bool operator==(const TwistWord&) const = default;

  private:
    std::vector<Letter> letters_;
};

TwistWord compose(const TwistWord& w1, const TwistWord& w2);
TwistWord invert(const TwistWord& w);

// 2x2 integer matrix with determinant 1, acting on H1 of the page in the
// basis (a, b).
struct SL2 {
    Int m[2][2] = {{1, 0}, {0, 1}};

    static SL2 identity() { return SL2{}; }

    SL2 operator*(const SL2& rhs) const;
    SL2 inverse() const;  // adjugate, valid because det == 1
    SL2 operator-() const;
    bool operator==(const SL2&) const = default;

    Int det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    std::string to_string() const;
};

// Homology action of a right-handed Dehn twist along c: x -> x + <x,c>c
// with the intersection pairing oriented so that <a,b> = -1.
SL2 twist_matrix(const CurveClass& c);

// Matrix of the induced map on H1. With left-to-right word composition
// this is an anti-homomorphism: action(w1*w2) = action(w2)*action(w1).
SL2 homology_action(const TwistWord& w);

// Image of the class c under the mapping class of w, canonicalized.
CurveClass apply_to_class(const TwistWord& w, const CurveClass& c);

// Permutation braids of B3 that appear as factors of a normal form.
// (The trivial braid and the half twist are absorbed elsewhere.)
enum class Factor : std::uint8_t { a, b, ab, ba };

const char* factor_name(Factor f);

// Canonical Garside form of a word over the twist generators a, b
// (sigma_1 = tau_a, sigma_2 = tau_b). The word equals
// factors[0] * ... * factors[r-1] * Delta^delta_power, the factor
// sequence is left-weighted, and no factor is trivial or Delta.
// Two words are equal in B3 iff their records are identical.
struct GarsideNF {
    long long delta_power = 0;
    std::vector<Factor> factors;

    bool operator==(const GarsideNF&) const = default;
};

GarsideNF garside_normal_form(const TwistWord& w);

bool words_equal(const TwistWord& w1, const TwistWord& w2);

// Word g over {a, b} with apply_to_class(g, b) == c, built by running the
// Euclidean algorithm on (p, q) with nearest-integer quotients (shortest
// continued fraction; ties prefer the tau_a step).
TwistWord generator_word_reaching(const CurveClass& c);

// Rewrites every letter along a non-generator curve c as
// invert(g) * tau_b^k * g with apply_to_class(g, b) == c, so the output
// is a word over {a, b} equal to the input as a mapping class.
TwistWord expand_conjugates(const TwistWord& w);

// The monodromy family (tau_a tau_b)^3 tau_a^{-m-4}, m >= 0.
TwistWord phi_family(long long m);

// Its twist factorization tau_{a+b} tau_{a-b} tau_a^{-m}.
TwistWord factored_phi(long long m);

// Text format: letters separated by spaces; "a"/"b" positive twists,
// "A"/"B" their inverses, "a^k"/"b^k" powers, "T(p,q)^k" general classes.
TwistWord parse_word(const std::string& text);
std::string format_word(const TwistWord& w);

}  // namespace obcalc::words
