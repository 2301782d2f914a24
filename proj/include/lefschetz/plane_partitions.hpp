#pragma once
#include <gmpxx.h>
#include <vector>

#include "lefschetz/exact_matrix.hpp"
#include "lefschetz/monomial_ring.hpp"
#include "lefschetz/report.hpp"

namespace lefschetz {

struct BoxSpec {
    int a, b, c;

    BoxSpec(int a_, int b_, int c_);
    RingSpec ring() const { return RingSpec{a + b, a + c, b + c}; }
    int middle_rank() const { return a + b + c - 2; }
    long long cells() const { return 1LL * a * b * c; }
};

// Order ideal of the a x b x c cube grid, stored as its matrix of stack
// heights (a rows, b columns, entries in [0, c], weakly decreasing along
// rows and columns).
class PlanePartition {
public:
    PlanePartition(const BoxSpec& box, std::vector<std::vector<int>> heights);
    static PlanePartition empty(const BoxSpec& box);

    const BoxSpec& box() const { return box_; }
    int height(int i, int j) const { return heights_[i][j]; }
    bool has_cube(int i, int j, int k) const { return k < heights_[i][j]; }
    long long cube_count() const;

    PlanePartition cycled() const;      // (i,j,k) -> (j,k,i); needs a = b = c
    PlanePartition transposed() const;  // (i,j,k) -> (j,i,k); needs a = b
    PlanePartition complemented() const;

    bool operator==(const PlanePartition& o) const { return heights_ == o.heights_; }
    bool operator<(const PlanePartition& o) const { return heights_ < o.heights_; }

    nlohmann::json to_json() const;

private:
    BoxSpec box_;
    std::vector<std::vector<int>> heights_;
};

// All plane partitions in the box, in descending height-matrix order (full
// box first). Throws CapacityError past the cell limit.
std::vector<PlanePartition> enumerate_box_pp(const BoxSpec& box,
                                             long long cell_limit = 64);

// The box product formula, evaluated in exact rational arithmetic.
mpz_class macmahon_count(const BoxSpec& box);

// Bipartite graph on monomials of the two middle degrees; `weights` is the
// biadjacency (rows = degree m+1, columns = degree m), with multiplicities
// for quotient graphs.
struct HexGraph {
    RingSpec ring;
    int rank; // m
    std::vector<Monomial> left;  // columns
    std::vector<Monomial> right; // rows
    ZMatrix weights;
};

HexGraph build_hex_graph(const BoxSpec& box);

// Orbit quotients used by the symmetry-class determinants: Cycle3 gives the
// cyclic orbit graph (one double edge), SwapYZ gives the reflection quotient
// with the axis vertices removed.
HexGraph quotient_structures(const BoxSpec& box, ActionKind kind);

// left index -> right index
using Matching = std::vector<int>;

std::vector<Matching> enumerate_matchings(const HexGraph& g);
mpz_class count_matchings(const HexGraph& g); // weighted
int matching_sign(const Matching& m);         // permutation parity, +1/-1

// Lozenge correspondence between perfect matchings of the full hexagon
// graph and plane partitions. matching_to_pp validates its input and
// round-trips with pp_to_matching.
PlanePartition matching_to_pp(const HexGraph& g, const Matching& m);
Matching pp_to_matching(const HexGraph& g, const PlanePartition& pp);

// Symmetry classes 1..10 in the standard order (PP, SPP, CSPP, TSPP, SCPP,
// TCPP, SSCPP, CSTCPP, CSSCPP, TSSCPP).
mpz_class symmetry_count(const BoxSpec& box, int cls, long long cell_limit = 64);
const char* symmetry_class_name(int cls);

// Determinant identities for classes 1, 3, 6, 8.
VerificationReport verify_det_identity(const BoxSpec& box, int cls);

} // namespace lefschetz
