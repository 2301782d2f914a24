#pragma once
#include <gmpxx.h>
#include <vector>

#include "lefschetz/exact_matrix.hpp"

namespace lefschetz {

// Diagonal of the Smith normal form: nonnegative, a[i] | a[i+1], zeros last.
struct SmithForm {
    std::vector<mpz_class> entries;
    int rank = 0; // number of nonzero entries

    std::vector<mpz_class> nonunit() const {
        std::vector<mpz_class> out;
        for (const auto& e : entries)
            if (e != 1) out.push_back(e);
        return out;
    }
};

SmithForm smith_normal_form(const ZMatrix& m);

// Also returns unimodular P, Q with P*m*Q = D (diagonal padded with zeros).
struct SmithDecomposition {
    SmithForm form;
    ZMatrix p, q, d;
};
SmithDecomposition smith_decomposition(const ZMatrix& m);

// Fraction-free Bareiss elimination. Throws DimensionError unless square.
mpz_class determinant(const ZMatrix& m);

// Ryser inclusion-exclusion with Gray-code subset iteration. Throws
// DimensionError unless square, CapacityError beyond 34 columns.
mpz_class permanent(const ZMatrix& m);

// gcd of all k x k minors, 0 if they all vanish. gcd_of_minors(m, 0) = 1.
mpz_class gcd_of_minors(const ZMatrix& m, int k);

} // namespace lefschetz
