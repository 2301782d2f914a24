#pragma once
#include <gmpxx.h>
#include <optional>
#include <vector>

#include "lefschetz/exact_matrix.hpp"
#include "lefschetz/monomial_ring.hpp"
#include "lefschetz/report.hpp"

namespace lefschetz {

// (B+C-r-2) x (r-A+2) binomial matrix with entry(i,j) = C(A, r-B+i-j+2),
// 1-based indices. Requires A >= B >= C >= 1 and A-1 <= r <= floor((e-1)/2).
ZMatrix build_mr(int A, int B, int C, int r);

// n-variable generalization: rows are degree-(r+1) monomials in x_2..x_n
// below caps, columns degree-(r-A_1+1) monomials; nonzero entries are the
// multinomial coefficients A_1! / prod(i_j!) at row/col ratios.
ZMatrix build_multinomial_mr(const std::vector<int>& caps, int r);

// Known closed forms for the Smith entries of the c x c Carlitz matrix
// (C(a+b, b+i-j)): c = 1, and c = 2 both for a = b and in general.
// nullopt for c >= 3 (no closed form is known).
std::optional<std::vector<mpz_class>> carlitz_closed_forms(int a, int b, int c);

// Single term c * y^j * z^k of a bivariate integer polynomial.
struct BivariateTerm {
    mpz_class coeff;
    int ypow = 0;
    int zpow = 0;
    bool operator==(const BivariateTerm&) const = default;
};

struct TermMatrix {
    int rows = 0, cols = 0;
    std::vector<BivariateTerm> entries;
    BivariateTerm& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
    const BivariateTerm& at(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * cols + j];
    }
};

// Runs the symbolic pivoting pass over U_r(y,z): variables substituted for
// the 1s, x^{A-1} columns moved rightmost, then repeated elimination on the
// unit pivot. Returns the terminal (B+C-r-2) x (r-A+2) block, asserting at
// every step that its entries stay single terms.
TermMatrix symbolic_reduction(int A, int B, int C, int r);

enum class Thm1Part { I, II, III };

// Computational check of the three Smith-normal-form statements for the
// trivariate up maps. Caps must be sorted descending.
VerificationReport verify_snf_theorem(Thm1Part part, const RingSpec& spec);

mpz_class binomial(int n, int k); // 0 outside 0 <= k <= n

} // namespace lefschetz
