#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace obcalc::linalg {

using Int = mpz_class;
using Rat = mpq_class;

// gmpxx has no long long overloads; the platform is LP64.
inline Int to_int(long long x) {
    static_assert(sizeof(long) == sizeof(long long));
    return Int(static_cast<long>(x));
}
inline Rat to_rat(long long num, long long den = 1) {
    Rat r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

// Dense integer matrix with arbitrary-precision entries. Row-major.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

    std::string to_string() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

// Finitely generated abelian group in invariant-factor form:
// Z/d1 + Z/d2 + ... + Z^free_rank with d1 | d2 | ..., each di >= 2.
struct AbelianGroup {
    std::vector<Int> invariant_factors;
    std::size_t free_rank = 0;

    bool is_finite() const { return free_rank == 0; }
    // Order of the group; only defined when finite.
    Int order() const;

    bool operator==(const AbelianGroup&) const = default;
};

struct SmithResult {
    IntMatrix d;  // diagonal, divisibility chain, nonnegative diagonal
    IntMatrix u;  // unimodular row transform
    IntMatrix v;  // unimodular column transform; u*a*v == d
};

SmithResult smith_normal_form(const IntMatrix& a);

AbelianGroup homology_from_presentation(const IntMatrix& a);

// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& a);

// Signature of a symmetric matrix (#positive - #negative eigenvalues),
// computed by exact rational congruence diagonalization. A zero diagonal
// with a nonzero off-diagonal pivot is handled by the hyperbolic 2x2
// block rule, contributing (+1, -1).
long signature(const IntMatrix& s);

// Exact solution of a*x = b over the rationals. Throws std::domain_error
// when a is singular.
std::vector<Rat> solve_rational(const IntMatrix& a, const std::vector<Rat>& b);

}  // namespace obcalc::linalg
