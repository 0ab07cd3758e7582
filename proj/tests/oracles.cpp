#include "oracles.hpp"

#include <cassert>
#include <stdexcept>
#include <unordered_set>

namespace oracles {

using obcalc::linalg::Int;
using obcalc::linalg::IntMatrix;
using obcalc::linalg::Rat;
using obcalc::words::CurveClass;
using obcalc::words::Letter;
using obcalc::words::TwistWord;

bool smith_result_valid(const IntMatrix& a, const obcalc::linalg::SmithResult& r) {
    using obcalc::linalg::determinant;
    if (r.u * a * r.v != r.d) return false;
    Int du = determinant(r.u), dv = determinant(r.v);
    if (abs(du) != 1 || abs(dv) != 1) return false;
    for (std::size_t i = 0; i < r.d.rows(); ++i)
        for (std::size_t j = 0; j < r.d.cols(); ++j)
            if (i != j && r.d.at(i, j) != 0) return false;
    const std::size_t k = std::min(a.rows(), a.cols());
    Int prod = 1;
    for (std::size_t t = 0; t < k; ++t) {
        const Int& d = r.d.at(t, t);
        if (d < 0) return false;
        if (t + 1 < k) {
            const Int& next = r.d.at(t + 1, t + 1);
            if (d == 0 && next != 0) return false;
            if (d != 0 && next % d != 0) return false;
        }
        prod *= d;
    }
    if (a.is_square() && abs(determinant(a)) != abs(prod)) return false;
    return true;
}

namespace {

// det(xI - S) as coefficients c[0..n], c[0] = 1 leading.
std::vector<Rat> charpoly(const IntMatrix& s) {
    const std::size_t n = s.rows();
    std::vector<Rat> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = Rat(s.at(i, j));

    std::vector<Rat> m(n * n), next(n * n);
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;  // M1 = I
    std::vector<Rat> c(n + 1);
    c[0] = 1;
    std::vector<Rat> am(n * n);
    for (std::size_t k = 1; k <= n; ++k) {
        // AM = A * M
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rat acc;
                for (std::size_t t = 0; t < n; ++t) acc += a[i * n + t] * m[t * n + j];
                am[i * n + j] = acc;
            }
        Rat tr;
        for (std::size_t i = 0; i < n; ++i) tr += am[i * n + i];
        c[k] = -tr / Rat(static_cast<long>(k));
        if (k < n) {
            next = am;
            for (std::size_t i = 0; i < n; ++i) next[i * n + i] += c[k];
            m.swap(next);
        }
    }
    return c;
}

long sign_variations(const std::vector<Rat>& c) {
    long v = 0;
    int last = 0;
    for (const Rat& x : c) {
        int s = sgn(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

long charpoly_signature(const IntMatrix& s) {
    assert(s.is_symmetric());
    std::vector<Rat> c = charpoly(s);
    long pos = sign_variations(c);
    std::vector<Rat> cneg = c;  // p(-x): flip the sign of odd-degree coefficients
    const std::size_t n = c.size() - 1;
    for (std::size_t k = 0; k <= n; ++k)
        if ((n - k) % 2 == 1) cneg[k] = -cneg[k];
    long neg = sign_variations(cneg);
    return pos - neg;
}

namespace {

constexpr std::uint8_t kInverseBit = 1;

std::uint8_t letter_inverse(std::uint8_t l) { return l ^ kInverseBit; }

std::uint32_t encode(const BraidLetters& w) {
    assert(w.size() <= 15);
    std::uint32_t code = static_cast<std::uint32_t>(w.size()) << 28;
    for (std::size_t i = 0; i < w.size(); ++i)
        code |= static_cast<std::uint32_t>(w[i]) << (2 * i);
    return code;
}

// Rewriting rules derived from the braid relator a b a B A B: every split
// of every cyclic rotation of the relator or its inverse into u * v gives
// the replacement u -> v^{-1}. Working on freely reduced words, these
// composite moves realize "insert a cancelling pair, apply the braid
// relation, cancel" in one step; the plain triple swap is the |u| = 3 case.
struct RewriteRule {
    BraidLetters lhs, rhs;
};

const std::vector<RewriteRule>& rewrite_rules() {
    static const std::vector<RewriteRule> rules = [] {
        auto inverse_word = [](const BraidLetters& w) {
            BraidLetters out(w.rbegin(), w.rend());
            for (std::uint8_t& l : out) l = letter_inverse(l);
            return out;
        };
        const BraidLetters relator = {0, 2, 0, 3, 1, 3};  // a b a B A B
        std::vector<BraidLetters> relators;
        for (const BraidLetters& base : {relator, inverse_word(relator)})
            for (std::size_t rot = 0; rot < base.size(); ++rot) {
                BraidLetters r;
                for (std::size_t i = 0; i < base.size(); ++i)
                    r.push_back(base[(rot + i) % base.size()]);
                relators.push_back(free_reduce(r));
            }
        std::vector<RewriteRule> out;
        for (const BraidLetters& r : relators)
            for (std::size_t k = 0; k <= r.size(); ++k) {
                BraidLetters u(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(k));
                BraidLetters v(r.begin() + static_cast<std::ptrdiff_t>(k), r.end());
                out.push_back({std::move(u), inverse_word(v)});
            }
        return out;
    }();
    return rules;
}

void braid_successors(const BraidLetters& w, std::size_t max_len,
                      std::vector<BraidLetters>& out) {
    out.clear();
    for (const RewriteRule& rule : rewrite_rules()) {
        if (rule.lhs.size() > w.size()) continue;
        if (w.size() - rule.lhs.size() + rule.rhs.size() > max_len) continue;
        for (std::size_t pos = 0; pos + rule.lhs.size() <= w.size(); ++pos) {
            if (!std::equal(rule.lhs.begin(), rule.lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(pos)))
                continue;
            BraidLetters v;
            v.reserve(w.size() - rule.lhs.size() + rule.rhs.size());
            v.insert(v.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
            v.insert(v.end(), rule.rhs.begin(), rule.rhs.end());
            v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + rule.lhs.size()), w.end());
            BraidLetters r = free_reduce(v);
            if (r != w && r.size() <= max_len) out.push_back(std::move(r));
        }
    }
}

}  // namespace

BraidLetters to_letters(const TwistWord& w) {
    BraidLetters out;
    for (const Letter& l : w.letters()) {
        if (!l.curve.is_generator())
            throw std::invalid_argument("oracle words must be over a, b");
        std::uint8_t base = l.curve == CurveClass::b() ? 2 : 0;
        long long n = l.exponent < 0 ? -l.exponent : l.exponent;
        std::uint8_t letter = l.exponent < 0 ? (base | kInverseBit) : base;
        for (long long i = 0; i < n; ++i) out.push_back(letter);
    }
    return out;
}

TwistWord from_letters(const BraidLetters& ls) {
    std::vector<Letter> out;
    for (std::uint8_t l : ls) {
        CurveClass c = (l >> 1) ? CurveClass::b() : CurveClass::a();
        out.push_back({c, (l & kInverseBit) ? -1LL : 1LL});
    }
    return TwistWord(std::move(out));
}

BraidLetters free_reduce(const BraidLetters& w) {
    BraidLetters out;
    out.reserve(w.size());
    for (std::uint8_t l : w) {
        if (!out.empty() && out.back() == letter_inverse(l))
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

std::optional<bool> bfs_words_equal(const BraidLetters& w1, const BraidLetters& w2,
                                    std::size_t max_len, std::size_t node_cap) {
    BraidLetters a = free_reduce(w1), b = free_reduce(w2);
    if (a.size() > max_len || b.size() > max_len) return std::nullopt;
    if (a == b) return true;

    struct Side {
        std::unordered_set<std::uint32_t> seen;
        std::vector<BraidLetters> frontier;
    };
    Side s1, s2;
    s1.seen.insert(encode(a));
    s1.frontier.push_back(a);
    s2.seen.insert(encode(b));
    s2.frontier.push_back(b);

    std::size_t nodes = 2;
    std::vector<BraidLetters> succ;
    while (!s1.frontier.empty() && !s2.frontier.empty()) {
        Side& grow = s1.frontier.size() <= s2.frontier.size() ? s1 : s2;
        Side& other = (&grow == &s1) ? s2 : s1;
        std::vector<BraidLetters> next;
        for (const BraidLetters& w : grow.frontier) {
            braid_successors(w, max_len, succ);
            for (BraidLetters& v : succ) {
                std::uint32_t code = encode(v);
                if (!grow.seen.insert(code).second) continue;
                if (other.seen.count(code)) return true;
                if (++nodes > node_cap) return std::nullopt;
                next.push_back(std::move(v));
            }
        }
        grow.frontier = std::move(next);
    }
    return false;  // one side's class exhausted within the bound
}

}  // namespace oracles
