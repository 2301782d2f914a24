#pragma once
#include <gmpxx.h>
#include <map>
#include <vector>

#include "lefschetz/exact_matrix.hpp"
#include "lefschetz/report.hpp"

namespace lefschetz {

// Weakly decreasing positive parts; the empty partition is allowed.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
int part_count(const Partition& p); // number of nonzero parts

// lambda / mu with mu zero-padded to the length of lambda.
struct SkewShape {
    Partition outer, inner;

    SkewShape() = default;
    SkewShape(Partition out, Partition in);
    explicit SkewShape(Partition out) : SkewShape(std::move(out), {}) {}

    auto operator<=>(const SkewShape&) const = default;
};

// Formal polynomial in the complete homogeneous symmetric variables h_1,
// h_2, ...; h_0 collapses to 1 and negative indices annihilate a term. The
// h_j are treated as algebraically independent for every j >= 1, which is
// what identity-checking between determinants requires.
class HPolynomial {
public:
    static HPolynomial zero() { return {}; }
    static HPolynomial one();
    static HPolynomial h(int index); // index >= 0

    void add_term(std::vector<int> indices, const mpz_class& coeff); // sorted or not

    HPolynomial& operator+=(const HPolynomial& o);
    HPolynomial& operator-=(const HPolynomial& o);
    HPolynomial& operator*=(const mpz_class& s);
    friend HPolynomial operator+(HPolynomial a, const HPolynomial& b) { return a += b; }
    friend HPolynomial operator-(HPolynomial a, const HPolynomial& b) { return a -= b; }
    bool operator==(const HPolynomial&) const = default;

    bool is_zero() const { return terms_.empty(); }
    int max_index() const;
    // values[i] is the value of h_{i+1}
    mpz_class evaluate(const std::vector<mpz_class>& values) const;
    nlohmann::json to_json() const;

private:
    std::map<std::vector<int>, mpz_class> terms_;
};

// det(h_{lambda_i - mu_j - i + j}) expanded formally.
HPolynomial jacobi_trudi(const SkewShape& shape);

// All partitions arising from ballot labelings of the shape, with
// multiplicity.
std::map<Partition, long long> lr_expand(const SkewShape& shape);

// The five minor-legality conditions for k x k minors of A_c inside the
// n x n lower-triangular Toeplitz matrix. The outer partition must have
// exactly k parts.
bool is_legal(const SkewShape& shape, int k, int c, int n);

// Row/column selection of a k x k minor of A_c (1-based, strictly
// increasing).
struct MinorSelection {
    std::vector<int> rows, cols;
};

// Shape whose Jacobi-Trudi determinant equals the selected minor of A_c.
SkewShape minor_shape(int n, int c, const MinorSelection& sel);

// Witness selection for a legal shape; requires every Jacobi-Trudi index to
// be >= 1 (equivalently outer_k >= inner_1 + k), which is what membership in
// the Toeplitz matrix demands.
MinorSelection shape_minor_witness(const SkewShape& shape, int k, int c, int n);

// (p_1 - p_k, ..., p_{k-1} - p_k), compared lexicographically.
std::vector<int> spread_of(const Partition& p, int k);
bool spread_less(const std::vector<int>& a, const std::vector<int>& b);

// One step of the inverse Littlewood-Richardson construction: a (k,c)-legal
// skew shape whose expansion contains nu exactly once, all other terms of
// strictly smaller spread. Both postconditions are asserted by running
// lr_expand. nu must be (k,k)-legal and not already (k,c)-legal.
SkewShape inverse_lr_step(const Partition& nu, int k, int c, int n);

// Full decomposition of a (k,k)-legal nu into (k,c)-legal shapes with
// integer coefficients; sum of coeff * jacobi_trudi(shape) equals
// jacobi_trudi(nu).
std::map<SkewShape, long long> inverse_lr_decompose(const Partition& nu, int k, int c,
                                                    int n);

// A_c: columns 1..c and rows c..n of the lower-triangular Toeplitz matrix
// with h.back() on the diagonal.
ZMatrix toeplitz_submatrix(const std::vector<mpz_class>& h, int c);

// Checks that the k-th Smith entry of A_c is constant over k <= c <= n/2.
VerificationReport verify_toeplitz_lemma(const std::vector<mpz_class>& h);

} // namespace lefschetz
