#pragma once

#include <random>
#include <vector>

#include "obcalc/words.hpp"

namespace testutil {

// Random word with unit-exponent generator letters, freely reduced.
inline obcalc::words::TwistWord random_generator_word(std::mt19937_64& rng,
                                                      std::size_t max_letters) {
    using namespace obcalc::words;
    std::uniform_int_distribution<std::size_t> len(0, max_letters);
    std::uniform_int_distribution<int> pick(0, 3);
    std::vector<Letter> ls;
    std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) {
        int c = pick(rng);
        ls.push_back({(c >> 1) ? CurveClass::b() : CurveClass::a(), (c & 1) ? -1LL : 1LL});
    }
    return TwistWord(std::move(ls));
}

inline obcalc::words::CurveClass random_primitive_class(std::mt19937_64& rng, long long bound) {
    std::uniform_int_distribution<long long> d(-bound, bound);
    for (;;) {
        long long p = d(rng), q = d(rng);
        if (p == 0 && q == 0) continue;
        if (std::gcd(p < 0 ? -p : p, q < 0 ? -q : q) != 1) continue;
        return obcalc::words::CurveClass(p, q);
    }
}

}  // namespace testutil
