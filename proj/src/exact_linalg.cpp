#include "lefschetz/exact_linalg.hpp"

#include <algorithm>
#include <cstdint>

namespace lefschetz {

namespace {

struct SnfWorker {
    ZMatrix d, p, q;
    bool track;

    SnfWorker(const ZMatrix& m, bool with_transforms)
        : d(m),
          p(with_transforms ? ZMatrix::identity(m.rows()) : ZMatrix()),
          q(with_transforms ? ZMatrix::identity(m.cols()) : ZMatrix()),
          track(with_transforms) {}

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < d.cols(); ++k) std::swap(d.at(i, k), d.at(j, k));
        if (track)
            for (int k = 0; k < p.cols(); ++k) std::swap(p.at(i, k), p.at(j, k));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < d.rows(); ++k) std::swap(d.at(k, i), d.at(k, j));
        if (track)
            for (int k = 0; k < q.rows(); ++k) std::swap(q.at(k, i), q.at(k, j));
    }
    // row i += f * row j
    void add_row(int i, int j, const mpz_class& f) {
        for (int k = 0; k < d.cols(); ++k) d.at(i, k) += f * d.at(j, k);
        if (track)
            for (int k = 0; k < p.cols(); ++k) p.at(i, k) += f * p.at(j, k);
    }
    void add_col(int i, int j, const mpz_class& f) {
        for (int k = 0; k < d.rows(); ++k) d.at(k, i) += f * d.at(k, j);
        if (track)
            for (int k = 0; k < q.rows(); ++k) q.at(k, i) += f * q.at(k, j);
    }
    void negate_row(int i) {
        for (int k = 0; k < d.cols(); ++k) d.at(i, k) = -d.at(i, k);
        if (track)
            for (int k = 0; k < p.cols(); ++k) p.at(i, k) = -p.at(i, k);
    }

    // Smallest nonzero |entry| in the trailing submatrix; false if all zero.
    bool find_pivot(int s, int& pi, int& pj) const {
        bool found = false;
        mpz_class best;
        for (int i = s; i < d.rows(); ++i)
            for (int j = s; j < d.cols(); ++j) {
                if (d.at(i, j) == 0) continue;
                mpz_class a = abs(d.at(i, j));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    bool row_col_clear(int s) const {
        for (int i = s + 1; i < d.rows(); ++i)
            if (d.at(i, s) != 0) return false;
        for (int j = s + 1; j < d.cols(); ++j)
            if (d.at(s, j) != 0) return false;
        return true;
    }

    void run() {
        const int n = std::min(d.rows(), d.cols());
        for (int s = 0; s < n; ++s) {
            int pi, pj;
            if (!find_pivot(s, pi, pj)) break; // trailing block is zero
            swap_rows(s, pi);
            swap_cols(s, pj);
            for (;;) {
                while (!row_col_clear(s)) {
                    for (int i = s + 1; i < d.rows(); ++i) {
                        if (d.at(i, s) == 0) continue;
                        mpz_class f = -(d.at(i, s) / d.at(s, s));
                        add_row(i, s, f);
                    }
                    for (int j = s + 1; j < d.cols(); ++j) {
                        if (d.at(s, j) == 0) continue;
                        mpz_class f = -(d.at(s, j) / d.at(s, s));
                        add_col(j, s, f);
                    }
                    // remainders may survive; re-pivot on the new minimum
                    if (!row_col_clear(s)) {
                        find_pivot(s, pi, pj);
                        swap_rows(s, pi);
                        swap_cols(s, pj);
                    }
                }
                // divisibility repair: pivot must divide the rest of the block
                int bi = -1, bj = -1;
                for (int i = s + 1; i < d.rows() && bi < 0; ++i)
                    for (int j = s + 1; j < d.cols(); ++j)
                        if (d.at(i, j) % d.at(s, s) != 0) {
                            bi = i;
                            bj = j;
                            break;
                        }
                if (bi < 0) break;
                add_row(s, bi, 1);
                (void)bj;
            }
            if (d.at(s, s) < 0) negate_row(s);
        }
    }
};

} // namespace

static SmithForm extract_form(const ZMatrix& d) {
    SmithForm f;
    const int n = std::min(d.rows(), d.cols());
    f.entries.reserve(n);
    for (int i = 0; i < n; ++i) {
        f.entries.push_back(d.at(i, i));
        if (d.at(i, i) != 0) ++f.rank;
    }
    return f;
}

SmithForm smith_normal_form(const ZMatrix& m) {
    SnfWorker w(m, false);
    w.run();
    return extract_form(w.d);
}

SmithDecomposition smith_decomposition(const ZMatrix& m) {
    SnfWorker w(m, true);
    w.run();
    return {extract_form(w.d), w.p, w.q, w.d};
}

mpz_class determinant(const ZMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    ZMatrix a = m;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

namespace {

// Gray-code Ryser over native integers; valid when the row-sum product bound
// fits. Accumulates in 128 bits (n <= 34 terms of < 2^62 each).
mpz_class ryser_fast(const ZMatrix& m) {
    const int n = m.rows();
    std::vector<std::vector<std::int64_t>> col(n, std::vector<std::int64_t>(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) col[j][i] = m.at(i, j).get_si();

    std::vector<std::int64_t> rowsum(n, 0);
    int zeros = n;
    __int128 total = 0;
    const std::uint64_t count = (n >= 64) ? 0 : (1ULL << n);
    std::uint64_t gray_prev = 0;
    for (std::uint64_t k = 1; k < count; ++k) {
        std::uint64_t gray = k ^ (k >> 1);
        std::uint64_t diff = gray ^ gray_prev;
        int j = 0;
        while (!((diff >> j) & 1)) ++j;
        const bool added = (gray >> j) & 1;
        for (int i = 0; i < n; ++i) {
            std::int64_t before = rowsum[i];
            rowsum[i] = added ? before + col[j][i] : before - col[j][i];
            if (before == 0 && rowsum[i] != 0) --zeros;
            else if (before != 0 && rowsum[i] == 0) ++zeros;
        }
        gray_prev = gray;
        if (zeros > 0) continue;
        __int128 prod = 1;
        for (int i = 0; i < n; ++i) prod *= rowsum[i];
        int bits = __builtin_popcountll(gray);
        total += ((n - bits) % 2 == 0) ? prod : -prod;
    }
    bool neg = total < 0;
    unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(total) : total;
    mpz_class hi(static_cast<unsigned long>(mag >> 64));
    mpz_class result = (hi << 64) + static_cast<unsigned long>(mag);
    return neg ? -result : result;
}

mpz_class ryser_bignum(const ZMatrix& m) {
    const int n = m.rows();
    std::vector<mpz_class> rowsum(n, 0);
    mpz_class total = 0;
    const std::uint64_t count = 1ULL << n;
    std::uint64_t gray_prev = 0;
    for (std::uint64_t k = 1; k < count; ++k) {
        std::uint64_t gray = k ^ (k >> 1);
        std::uint64_t diff = gray ^ gray_prev;
        int j = 0;
        while (!((diff >> j) & 1)) ++j;
        if ((gray >> j) & 1)
            for (int i = 0; i < n; ++i) rowsum[i] += m.at(i, j);
        else
            for (int i = 0; i < n; ++i) rowsum[i] -= m.at(i, j);
        gray_prev = gray;
        mpz_class prod = 1;
        for (int i = 0; i < n && prod != 0; ++i) prod *= rowsum[i];
        if (prod == 0) continue;
        int bits = __builtin_popcountll(gray);
        if ((n - bits) % 2 == 0) total += prod;
        else total -= prod;
    }
    return total;
}

} // namespace

mpz_class permanent(const ZMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("permanent of non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    if (n > 34) throw CapacityError("permanent capped at 34 columns");

    // |rowsum| <= sum |a_ij|; if the product of those bounds fits in 62 bits
    // the native path is exact.
    bool fits = true;
    double log2prod = 0;
    for (int i = 0; i < n && fits; ++i) {
        mpz_class r = 0;
        for (int j = 0; j < n; ++j) {
            if (!m.at(i, j).fits_slong_p()) fits = false;
            r += abs(m.at(i, j));
        }
        if (r > 0) log2prod += mpz_sizeinbase(r.get_mpz_t(), 2);
    }
    if (fits && log2prod < 62.0) return ryser_fast(m);
    return ryser_bignum(m);
}

mpz_class gcd_of_minors(const ZMatrix& m, int k) {
    if (k == 0) return 1;
    if (k < 0 || k > std::min(m.rows(), m.cols()))
        throw DimensionError("minor order out of range");
    std::vector<int> ri(k), ci(k);
    for (int i = 0; i < k; ++i) ri[i] = ci[i] = i;
    auto advance = [&](std::vector<int>& idx, int limit) {
        int i = k - 1;
        while (i >= 0 && idx[i] == limit - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        return true;
    };
    mpz_class g = 0;
    for (;;) {
        for (int i = 0; i < k; ++i) ci[i] = i;
        for (;;) {
            ZMatrix sub(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(ri[i], ci[j]);
            mpz_class d = determinant(sub);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            if (g == 1) return g;
            if (!advance(ci, m.cols())) break;
        }
        if (!advance(ri, m.rows())) break;
    }
    return g;
}

} // namespace lefschetz
