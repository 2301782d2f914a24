#pragma once
#include <string>
#include <utility>
#include <vector>

#include "lefschetz/exact_matrix.hpp"

namespace lefschetz {

// Exponent vector of a monomial, one entry per variable. std::vector's
// built-in lexicographic comparison is exactly the order used throughout.
using Monomial = std::vector<int>;

int degree(const Monomial& m);
std::string monomial_str(const Monomial& m); // "x^2yz" style, n <= 3 gets letters

// k[x_1..x_n] / (x_1^{A_1}, ..., x_n^{A_n})
struct RingSpec {
    std::vector<int> caps;

    explicit RingSpec(std::vector<int> c);
    RingSpec(std::initializer_list<int> c) : RingSpec(std::vector<int>(c)) {}

    int vars() const { return static_cast<int>(caps.size()); }
    int top_degree() const;  // e = sum(caps) - n
    int middle_rank() const; // floor((e-1)/2), i.e. -1 when e = 0
    bool contains(const Monomial& m) const;
};

// Monomials of total degree r below the caps, lexicographically descending
// (higher power of an earlier variable on the left). Empty when r is out of
// [0, e].
std::vector<Monomial> graded_basis(const RingSpec& spec, int r);

std::vector<long long> hilbert_function(const RingSpec& spec); // h(0..e)

// h(r+1) x h(r) 0/1 matrix of multiplication by the sum of the variables,
// rows/columns in graded_basis order. Requires 0 <= r < e.
ZMatrix up_map_matrix(const RingSpec& spec, int r);

enum class ActionKind { Cycle3, SwapYZ };
enum class ActionSign { Plus, Minus };
struct GroupAction {
    ActionKind kind;
    ActionSign sign;
};

// Orbit sum/difference with a canonical representative (the lex-largest
// monomial of the orbit). Coefficient of the representative is +1.
struct SignedBasisElement {
    Monomial rep;
    std::vector<std::pair<Monomial, int>> terms;
};

// Basis of the invariant (Plus) or anti-invariant (Minus) part of degree r,
// ordered by descending representative. Cycle3 requires n = 3 with equal
// caps; SwapYZ requires n = 3 with caps[1] == caps[2]. Cycle3/Minus is
// rejected: C_3 has no sign character over the integers.
std::vector<SignedBasisElement> invariant_basis(const RingSpec& spec, int r,
                                                GroupAction action);

// Matrix of multiplication by x+y+z between the signed bases of degrees r
// and r+1.
ZMatrix restricted_up_map(const RingSpec& spec, int r, GroupAction action);

// Basis of the intersection of the cyclic invariants with the swap
// anti-invariants: six-term alternating sums over S_3, one per orbit with
// pairwise distinct exponents. Requires n = 3 with equal caps.
std::vector<SignedBasisElement> alternating_basis(const RingSpec& spec, int r);
ZMatrix alternating_up_map(const RingSpec& spec, int r);

} // namespace lefschetz
