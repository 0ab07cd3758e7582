#include "obcalc/linalg.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace obcalc::linalg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
        throw std::invalid_argument("IntMatrix: entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += aik * rhs.at(k, j);
        }
    return out;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < cols_; ++j)
            os << at(i, j) << (j + 1 < cols_ ? " " : "");
        os << (i + 1 < rows_ ? ";\n" : "]");
    }
    return os.str();
}

Int AbelianGroup::order() const {
    if (!is_finite())
        throw std::domain_error("AbelianGroup: infinite group has no order");
    Int n = 1;
    for (const Int& d : invariant_factors) n *= d;
    return n;
}

namespace {

// Row/column elementary operations applied in lockstep to the working
// matrix and the accumulated transform, so u*a*v == d stays true.
struct SmithWork {
    IntMatrix d, u, v;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < d.cols(); ++k) std::swap(d.at(i, k), d.at(j, k));
        for (std::size_t k = 0; k < u.cols(); ++k) std::swap(u.at(i, k), u.at(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < d.rows(); ++k) std::swap(d.at(k, i), d.at(k, j));
        for (std::size_t k = 0; k < v.rows(); ++k) std::swap(v.at(k, i), v.at(k, j));
    }
    void add_row(std::size_t dst, std::size_t src, const Int& f) {
        if (f == 0) return;
        for (std::size_t k = 0; k < d.cols(); ++k) d.at(dst, k) += f * d.at(src, k);
        for (std::size_t k = 0; k < u.cols(); ++k) u.at(dst, k) += f * u.at(src, k);
    }
    void add_col(std::size_t dst, std::size_t src, const Int& f) {
        if (f == 0) return;
        for (std::size_t k = 0; k < d.rows(); ++k) d.at(k, dst) += f * d.at(k, src);
        for (std::size_t k = 0; k < v.rows(); ++k) v.at(k, dst) += f * v.at(k, src);
    }
    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < d.cols(); ++k) d.at(i, k) = -d.at(i, k);
        for (std::size_t k = 0; k < u.cols(); ++k) u.at(i, k) = -u.at(i, k);
    }
};

// Smallest nonzero |entry| in the trailing block, or false if the block is zero.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            const Int& e = d.at(i, j);
            if (e == 0) continue;
            Int a = abs(e);
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& a) {
    SmithWork w{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
    const std::size_t rank_bound = std::min(a.rows(), a.cols());

    for (std::size_t t = 0; t < rank_bound; ++t) {
        std::size_t pi = t, pj = t;
        if (!find_pivot(w.d, t, pi, pj)) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        for (;;) {
            // Clear column t with Euclidean steps; a nonzero remainder
            // becomes the new, strictly smaller pivot.
            bool dirty = true;
            while (dirty) {
                dirty = false;
                for (std::size_t i = t + 1; i < w.d.rows(); ++i) {
                    if (w.d.at(i, t) == 0) continue;
                    Int q = w.d.at(i, t) / w.d.at(t, t);
                    w.add_row(i, t, -q);
                    if (w.d.at(i, t) != 0) {
                        w.swap_rows(i, t);
                        dirty = true;
                    }
                }
                for (std::size_t j = t + 1; j < w.d.cols(); ++j) {
                    if (w.d.at(t, j) == 0) continue;
                    Int q = w.d.at(t, j) / w.d.at(t, t);
                    w.add_col(j, t, -q);
                    if (w.d.at(t, j) != 0) {
                        w.swap_cols(j, t);
                        dirty = true;
                    }
                }
            }
            // Divisibility fix-up: fold a non-multiple into row t and repeat.
            bool fixed = true;
            for (std::size_t i = t + 1; i < w.d.rows() && fixed; ++i)
                for (std::size_t j = t + 1; j < w.d.cols() && fixed; ++j)
                    if (w.d.at(i, j) % w.d.at(t, t) != 0) {
                        w.add_row(t, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (w.d.at(t, t) < 0) w.negate_row(t);
    }
    return SmithResult{std::move(w.d), std::move(w.u), std::move(w.v)};
}

AbelianGroup homology_from_presentation(const IntMatrix& a) {
    AbelianGroup g;
    if (a.rows() == 0) return g;
    if (a.cols() == 0) {
        g.free_rank = a.rows();
        return g;
    }
    SmithResult s = smith_normal_form(a);
    std::size_t rank = 0;
    for (std::size_t t = 0; t < std::min(a.rows(), a.cols()); ++t) {
        const Int& d = s.d.at(t, t);
        if (d == 0) continue;
        ++rank;
        if (d >= 2) g.invariant_factors.push_back(d);
    }
    g.free_rank = a.rows() - rank;
    return g;
}

Int determinant(const IntMatrix& a) {
    if (!a.is_square())
        throw std::invalid_argument("determinant: matrix must be square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t i = k + 1;
            while (i < n && m.at(i, k) == 0) ++i;
            if (i == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(i, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

namespace {

class RatMatrix {
  public:
    RatMatrix(const IntMatrix& a) : n_(a.rows()), data_(n_ * n_) {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) data_[i * n_ + j] = Rat(a.at(i, j));
    }
    Rat& at(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    std::size_t n() const { return n_; }

    void swap_sym(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < n_; ++k) std::swap(at(i, k), at(j, k));
        for (std::size_t k = 0; k < n_; ++k) std::swap(at(k, i), at(k, j));
    }
    // Congruence row+column operation: row_dst += f*row_src, col_dst += f*col_src.
    void add_sym(std::size_t dst, std::size_t src, const Rat& f) {
        for (std::size_t k = 0; k < n_; ++k) at(dst, k) += f * at(src, k);
        for (std::size_t k = 0; k < n_; ++k) at(k, dst) += f * at(k, src);
    }

  private:
    std::size_t n_;
    std::vector<Rat> data_;
};

}  // namespace

long signature(const IntMatrix& s) {
    if (!s.is_symmetric())
        throw std::invalid_argument("signature: matrix must be symmetric");
    RatMatrix m(s);
    const std::size_t n = m.n();
    long sig = 0;
    std::size_t k = 0;
    while (k < n) {
        if (m.at(k, k) == 0) {
            std::size_t j = k + 1;
            while (j < n && m.at(j, j) == 0) ++j;
            if (j < n) {
                m.swap_sym(k, j);
            } else {
                // Diagonal is all zero from k on; find an off-diagonal pivot.
                std::size_t pi = n, pj = n;
                for (std::size_t i = k; i < n && pi == n; ++i)
                    for (std::size_t jj = i + 1; jj < n; ++jj)
                        if (m.at(i, jj) != 0) {
                            pi = i;
                            pj = jj;
                            break;
                        }
                if (pi == n) break;  // zero block, contributes nothing
                m.swap_sym(k, pi);
                m.swap_sym(k + 1, pj);
                // Hyperbolic block [[0,c],[c,0]]: contributes (+1,-1); clear
                // the remaining rows against it and step past both slots.
                Rat c = m.at(k, k + 1);
                for (std::size_t r = k + 2; r < n; ++r) {
                    Rat beta = m.at(r, k + 1);
                    Rat alpha = m.at(r, k);
                    if (beta != 0) m.add_sym(r, k, -beta / c);
                    if (alpha != 0) m.add_sym(r, k + 1, -alpha / c);
                }
                k += 2;
                continue;
            }
        }
        Rat pivot = m.at(k, k);
        sig += sgn(pivot);
        for (std::size_t r = k + 1; r < n; ++r) {
            if (m.at(r, k) == 0) continue;
            m.add_sym(r, k, -m.at(r, k) / pivot);
        }
        ++k;
    }
    return sig;
}

std::vector<Rat> solve_rational(const IntMatrix& a, const std::vector<Rat>& b) {
    if (!a.is_square())
        throw std::invalid_argument("solve_rational: matrix must be square");
    const std::size_t n = a.rows();
    if (b.size() != n)
        throw std::invalid_argument("solve_rational: rhs length mismatch");

    std::vector<Rat> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i * n + j] = Rat(a.at(i, j));
    std::vector<Rat> x = b;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p * n + k] == 0) ++p;
        if (p == n) throw std::domain_error("solve_rational: singular matrix");
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[p * n + j]);
            std::swap(x[k], x[p]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m[i * n + k] == 0) continue;
            Rat f = m[i * n + k] / m[k * n + k];
            for (std::size_t j = k; j < n; ++j) m[i * n + j] -= f * m[k * n + j];
            x[i] -= f * x[k];
        }
    }
    for (std::size_t k = 0; k < n; ++k) x[k] /= m[k * n + k];
    return x;
}

}  // namespace obcalc::linalg
