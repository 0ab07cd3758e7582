#include "obcalc/words.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace obcalc::words {

namespace {

long long checked_ll(const Int& z, const char* what) {
    if (!z.fits_slong_p()) throw std::overflow_error(std::string(what) + ": entry too large");
    return z.get_si();
}

Int ll(long long x) {
    static_assert(sizeof(long) == sizeof(long long), "LP64 expected");
    return Int(static_cast<long>(x));
}

}  // namespace

CurveClass::CurveClass(long long p_, long long q_) : p(p_), q(q_) {
    if (p == 0 && q == 0)
        throw std::invalid_argument("CurveClass: (0,0) is not a curve class");
    if (std::gcd(p < 0 ? -p : p, q < 0 ? -q : q) != 1)
        throw std::invalid_argument("CurveClass: class must be primitive");
    if (p < 0 || (p == 0 && q < 0)) {
        p = -p;
        q = -q;
    }
}

TwistWord::TwistWord(std::vector<Letter> letters) {
    for (const Letter& l : letters) {
        if (l.exponent == 0) continue;
        if (!letters_.empty() && letters_.back().curve == l.curve) {
            letters_.back().exponent += l.exponent;
            if (letters_.back().exponent == 0) letters_.pop_back();
        } else {
            letters_.push_back(l);
        }
    }
}

std::size_t TwistWord::generator_length() const {
    std::size_t n = 0;
    for (const Letter& l : letters_) n += static_cast<std::size_t>(l.exponent < 0 ? -l.exponent : l.exponent);
    return n;
}

bool TwistWord::all_generator_curves() const {
    return std::all_of(letters_.begin(), letters_.end(),
                       [](const Letter& l) { return l.curve.is_generator(); });
}

TwistWord compose(const TwistWord& w1, const TwistWord& w2) {
    std::vector<Letter> all = w1.letters();
    // Only the junction can cascade; re-reducing the concatenation handles it.
    all.insert(all.end(), w2.letters().begin(), w2.letters().end());
    return TwistWord(std::move(all));
}

TwistWord invert(const TwistWord& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
        out.push_back({it->curve, -it->exponent});
    return TwistWord(std::move(out));
}

SL2 SL2::operator*(const SL2& rhs) const {
    SL2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.m[i][j] = m[i][0] * rhs.m[0][j] + m[i][1] * rhs.m[1][j];
    return out;
}

SL2 SL2::inverse() const {
    return SL2{{{m[1][1], -m[0][1]}, {-m[1][0], m[0][0]}}};
}

SL2 SL2::operator-() const {
    return SL2{{{-m[0][0], -m[0][1]}, {-m[1][0], -m[1][1]}}};
}

std::string SL2::to_string() const {
    std::ostringstream os;
    os << "[[" << m[0][0] << ", " << m[0][1] << "], [" << m[1][0] << ", " << m[1][1] << "]]";
    return os.str();
}

namespace {

// x -> x + k<x,c>c as a matrix; <x,c> = x2*c1 - x1*c2 realizes <a,b> = -1.
SL2 twist_power(const CurveClass& c, long long k) {
    Int kp = ll(k), cp = ll(c.p), cq = ll(c.q);
    SL2 out;
    out.m[0][0] = 1 - kp * cp * cq;
    out.m[0][1] = kp * cp * cp;
    out.m[1][0] = -kp * cq * cq;
    out.m[1][1] = 1 + kp * cp * cq;
    return out;
}

}  // namespace

SL2 twist_matrix(const CurveClass& c) { return twist_power(c, 1); }

SL2 homology_action(const TwistWord& w) {
    SL2 out = SL2::identity();
    for (const Letter& l : w.letters()) out = twist_power(l.curve, l.exponent) * out;
    return out;
}

CurveClass apply_to_class(const TwistWord& w, const CurveClass& c) {
    SL2 a = homology_action(w);
    Int p = a.m[0][0] * ll(c.p) + a.m[0][1] * ll(c.q);
    Int q = a.m[1][0] * ll(c.p) + a.m[1][1] * ll(c.q);
    return CurveClass(checked_ll(p, "apply_to_class"), checked_ll(q, "apply_to_class"));
}

// ---------------------------------------------------------------------------
// Garside normal form for B3.
//
// The six permutation braids are indexed E, S1, S2, S12, S21, DEL and matched
// with S3 by length-additive products. The working form is the left form
// Delta^t * f1...fr with a left-weighted factor sequence; the public record
// carries the factors on the left of the Delta power, which conjugates each
// factor by Delta when t is odd.

namespace {

enum Simple : int { E = 0, S1 = 1, S2 = 2, S12 = 3, S21 = 4, DEL = 5, NONE = -1 };

struct BraidTables {
    std::array<std::array<int, 3>, 6> perm;
    std::array<int, 6> len;
    int prod[6][6];      // length-additive product or NONE
    int lquot[6][6];     // lquot[m][v]: y with m*y == v, or NONE
    bool ldiv[6][6];     // ldiv[x][z]: x left-divides z
    bool rdiv[6][6];     // rdiv[x][z]: x right-divides z
    int meet[6][6];      // greatest common left-divisor
    int comp[6];         // right complement x^{-1} Delta
    int flip[6];         // conjugation by Delta (a <-> b)

    BraidTables() {
        auto mul = [](const std::array<int, 3>& f, const std::array<int, 3>& g) {
            // word order: f applied first
            std::array<int, 3> r{};
            for (int i = 0; i < 3; ++i) r[i] = g[f[i]];
            return r;
        };
        auto inversions = [](const std::array<int, 3>& f) {
            int n = 0;
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                    if (f[i] > f[j]) ++n;
            return n;
        };
        const std::array<int, 3> pe{0, 1, 2}, p1{1, 0, 2}, p2{0, 2, 1};
        perm[E] = pe;
        perm[S1] = p1;
        perm[S2] = p2;
        perm[S12] = mul(p1, p2);
        perm[S21] = mul(p2, p1);
        perm[DEL] = mul(mul(p1, p2), p1);
        for (int x = 0; x < 6; ++x) len[x] = inversions(perm[x]);

        auto find = [&](const std::array<int, 3>& f) {
            for (int x = 0; x < 6; ++x)
                if (perm[x] == f) return x;
            return int(NONE);
        };
        auto inv = [](const std::array<int, 3>& f) {
            std::array<int, 3> r{};
            for (int i = 0; i < 3; ++i) r[f[i]] = i;
            return r;
        };

        for (int x = 0; x < 6; ++x)
            for (int y = 0; y < 6; ++y) {
                std::array<int, 3> p = mul(perm[x], perm[y]);
                int z = find(p);
                prod[x][y] = (z != NONE && len[z] == len[x] + len[y]) ? z : NONE;
            }
        for (int m = 0; m < 6; ++m)
            for (int v = 0; v < 6; ++v) {
                int y = find(mul(inv(perm[m]), perm[v]));
                lquot[m][v] = (y != NONE && len[y] == len[v] - len[m]) ? y : NONE;
            }
        for (int x = 0; x < 6; ++x)
            for (int z = 0; z < 6; ++z) {
                ldiv[x][z] = lquot[x][z] != NONE;
                bool r = false;
                for (int y = 0; y < 6; ++y) r = r || prod[y][x] == z;
                rdiv[x][z] = r;
            }
        for (int x = 0; x < 6; ++x)
            for (int y = 0; y < 6; ++y) {
                int best = E;
                for (int z = 0; z < 6; ++z)
                    if (ldiv[z][x] && ldiv[z][y] && len[z] > len[best]) best = z;
                meet[x][y] = best;
            }
        for (int x = 0; x < 6; ++x) comp[x] = lquot[x][DEL];
        flip[E] = E;
        flip[S1] = S2;
        flip[S2] = S1;
        flip[S12] = S21;
        flip[S21] = S12;
        flip[DEL] = DEL;

        assert(prod[S1][S2] == S12 && prod[S2][S1] == S21);
        assert(prod[S1][S21] == DEL && prod[S2][S12] == DEL && prod[S12][S1] == DEL);
        assert(comp[S1] == S21 && comp[S2] == S12 && comp[E] == DEL);
    }
};

const BraidTables& tables() {
    static const BraidTables t;
    return t;
}

struct LeftNF {
    long long delta = 0;
    std::vector<int> fs;
};

bool left_weighted(const BraidTables& t, int u, int v) {
    // S(v) subset of F(u)
    for (int g : {S1, S2})
        if (t.ldiv[g][v] && !t.rdiv[g][u]) return false;
    return true;
}

void normalize(LeftNF& nf) {
    const BraidTables& t = tables();
    auto& fs = nf.fs;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
            int u = fs[i], v = fs[i + 1];
            if (left_weighted(t, u, v)) continue;
            int m = t.meet[t.comp[u]][v];
            assert(m != E);
            fs[i] = t.prod[u][m];
            int v2 = t.lquot[m][v];
            assert(fs[i] != NONE && v2 != NONE);
            if (v2 == E) {
                fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            } else {
                fs[i + 1] = v2;
            }
            changed = true;
        }
    }
    // Delta factors accumulate as a prefix once the sequence is left-weighted.
    std::size_t k = 0;
    while (k < fs.size() && fs[k] == DEL) ++k;
    if (k > 0) {
        nf.delta += static_cast<long long>(k);
        fs.erase(fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(k));
    }
}

void multiply_generator(LeftNF& nf, int gen, bool inverse) {
    const BraidTables& t = tables();
    if (!inverse) {
        nf.fs.push_back(gen == 1 ? S1 : S2);
    } else {
        // w * s^{-1} = Delta^{t-1} * flip(f1)...flip(fr) * (Delta s^{-1})
        nf.delta -= 1;
        for (int& f : nf.fs) f = t.flip[f];
        nf.fs.push_back(gen == 1 ? S12 : S21);
    }
    normalize(nf);
}

}  // namespace

const char* factor_name(Factor f) {
    switch (f) {
        case Factor::a: return "a";
        case Factor::b: return "b";
        case Factor::ab: return "ab";
        case Factor::ba: return "ba";
    }
    return "?";
}

GarsideNF garside_normal_form(const TwistWord& w) {
    const BraidTables& t = tables();
    LeftNF nf;
    for (const Letter& l : w.letters()) {
        if (!l.curve.is_generator())
            throw std::invalid_argument(
                "garside_normal_form: word must be over the twist generators a, b "
                "(expand_conjugates first)");
        int gen = l.curve == CurveClass::a() ? 1 : 2;
        long long n = l.exponent < 0 ? -l.exponent : l.exponent;
        for (long long i = 0; i < n; ++i) multiply_generator(nf, gen, l.exponent < 0);
    }
    GarsideNF out;
    out.delta_power = nf.delta;
    const bool odd = (nf.delta % 2) != 0;
    out.factors.reserve(nf.fs.size());
    for (int f : nf.fs) {
        int g = odd ? t.flip[f] : f;
        switch (g) {
            case S1: out.factors.push_back(Factor::a); break;
            case S2: out.factors.push_back(Factor::b); break;
            case S12: out.factors.push_back(Factor::ab); break;
            case S21: out.factors.push_back(Factor::ba); break;
            default: assert(false && "trivial or Delta factor escaped");
        }
    }
    return out;
}

bool words_equal(const TwistWord& w1, const TwistWord& w2) {
    return garside_normal_form(w1) == garside_normal_form(w2);
}

namespace {

// Quotient minimizing |num - k*den|; ties toward the smaller |k|.
long long nearest_quotient(long long num, long long den) {
    assert(den != 0);
    long long k0 = num / den;
    long long r0 = num - k0 * den;
    if (r0 != 0 && ((r0 < 0) != (den < 0))) {  // floor correction
        k0 -= 1;
        r0 += den;
    }
    long long k1 = k0 + 1;
    long long r1 = r0 - den;
    long long a0 = r0 < 0 ? -r0 : r0, a1 = r1 < 0 ? -r1 : r1;
    if (a0 < a1) return k0;
    if (a1 < a0) return k1;
    return (k0 < 0 ? -k0 : k0) <= (k1 < 0 ? -k1 : k1) ? k0 : k1;
}

}  // namespace

TwistWord generator_word_reaching(const CurveClass& c) {
    if (c == CurveClass::b()) return TwistWord{};
    // Reduce (p,q) to (0,+-1); each step peels a generator power off the
    // homology action, collected in product order and emitted reversed.
    std::vector<Letter> steps;
    long long p = c.p, q = c.q;
    while (p != 0) {
        if (q == 0) {
            steps.push_back({CurveClass::b(), 1});
            q += p;
        } else if ((p < 0 ? -p : p) >= (q < 0 ? -q : q)) {
            long long k = nearest_quotient(p, q);
            steps.push_back({CurveClass::a(), k});
            p -= k * q;
        } else {
            long long k = nearest_quotient(-q, p);
            steps.push_back({CurveClass::b(), k});
            q += k * p;
        }
    }
    std::reverse(steps.begin(), steps.end());
    TwistWord g(std::move(steps));
    if (apply_to_class(g, CurveClass::b()) != c)
        throw std::logic_error("generator_word_reaching: postcondition failed");
    return g;
}

TwistWord expand_conjugates(const TwistWord& w) {
    std::vector<Letter> out;
    for (const Letter& l : w.letters()) {
        if (l.curve.is_generator()) {
            out.push_back(l);
            continue;
        }
        // tau_c^k = invert(g) * tau_b^k * g for any g with g(b) = c.
        TwistWord g = generator_word_reaching(l.curve);
        TwistWord gi = invert(g);
        out.insert(out.end(), gi.letters().begin(), gi.letters().end());
        out.push_back({CurveClass::b(), l.exponent});
        out.insert(out.end(), g.letters().begin(), g.letters().end());
    }
    return TwistWord(std::move(out));
}

TwistWord phi_family(long long m) {
    if (m < 0) throw std::invalid_argument("phi_family: m must be >= 0");
    std::vector<Letter> ls;
    for (int i = 0; i < 3; ++i) {
        ls.push_back({CurveClass::a(), 1});
        ls.push_back({CurveClass::b(), 1});
    }
    ls.push_back({CurveClass::a(), -m - 4});
    return TwistWord(std::move(ls));
}

TwistWord factored_phi(long long m) {
    if (m < 0) throw std::invalid_argument("factored_phi: m must be >= 0");
    std::vector<Letter> ls;
    ls.push_back({CurveClass(1, 1), 1});
    ls.push_back({CurveClass(1, -1), 1});
    if (m > 0) ls.push_back({CurveClass::a(), -m});
    return TwistWord(std::move(ls));
}

namespace {

long long parse_ll(const std::string& s, const std::string& token) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_word: bad integer in token '" + token + "'");
    }
    if (pos != s.size())
        throw std::invalid_argument("parse_word: bad integer in token '" + token + "'");
    return v;
}

Letter parse_token(const std::string& tok) {
    std::string head = tok;
    long long exp = 1;
    if (std::size_t caret = tok.find('^'); caret != std::string::npos) {
        head = tok.substr(0, caret);
        exp = parse_ll(tok.substr(caret + 1), tok);
    }
    if (head == "a") return {CurveClass::a(), exp};
    if (head == "A") return {CurveClass::a(), -exp};
    if (head == "b") return {CurveClass::b(), exp};
    if (head == "B") return {CurveClass::b(), -exp};
    if (head.size() >= 5 && head.front() == 'T' && head[1] == '(' && head.back() == ')') {
        std::string inner = head.substr(2, head.size() - 3);
        std::size_t comma = inner.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("parse_word: expected T(p,q) in token '" + tok + "'");
        long long p = parse_ll(inner.substr(0, comma), tok);
        long long q = parse_ll(inner.substr(comma + 1), tok);
        return {CurveClass(p, q), exp};
    }
    throw std::invalid_argument("parse_word: unrecognized token '" + tok + "'");
}

}  // namespace

TwistWord parse_word(const std::string& text) {
    std::istringstream is(text);
    std::vector<Letter> ls;
    std::string tok;
    while (is >> tok) ls.push_back(parse_token(tok));
    return TwistWord(std::move(ls));
}

std::string format_word(const TwistWord& w) {
    std::ostringstream os;
    bool first = true;
    for (const Letter& l : w.letters()) {
        if (!first) os << ' ';
        first = false;
        if (l.curve.is_generator()) {
            char pos = l.curve == CurveClass::a() ? 'a' : 'b';
            if (l.exponent == 1)
                os << pos;
            else if (l.exponent == -1)
                os << static_cast<char>(pos - 'a' + 'A');
            else
                os << pos << '^' << l.exponent;
        } else {
            os << "T(" << l.curve.p << ',' << l.curve.q << ')';
            if (l.exponent != 1) os << '^' << l.exponent;
        }
    }
    return os.str();
}

}  // namespace obcalc::words
