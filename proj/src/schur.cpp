#include "lefschetz/schur.hpp"

#include <algorithm>
#include <numeric>

#include "lefschetz/errors.hpp"
#include "lefschetz/exact_linalg.hpp"

namespace lefschetz {

bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0) return false;
        if (i && p[i] > p[i - 1]) return false;
    }
    return true;
}

int part_count(const Partition& p) {
    int k = 0;
    for (int v : p)
        if (v > 0) ++k;
    return k;
}

SkewShape::SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
    while (!outer.empty() && outer.back() == 0) outer.pop_back();
    inner.resize(outer.size(), 0);
    if (!is_partition(outer) || !is_partition(inner))
        throw PreconditionError("shape parts must be weakly decreasing");
    for (std::size_t i = 0; i < outer.size(); ++i)
        if (inner[i] > outer[i]) throw PreconditionError("inner shape not contained");
}

HPolynomial HPolynomial::one() {
    HPolynomial p;
    p.terms_[{}] = 1;
    return p;
}

HPolynomial HPolynomial::h(int index) {
    if (index < 0) throw PreconditionError("negative h index");
    if (index == 0) return one();
    HPolynomial p;
    p.terms_[{index}] = 1;
    return p;
}

void HPolynomial::add_term(std::vector<int> indices, const mpz_class& coeff) {
    if (coeff == 0) return;
    std::erase(indices, 0);
    for (int i : indices)
        if (i < 0) return; // annihilated
    std::sort(indices.begin(), indices.end());
    auto it = terms_.find(indices);
    if (it == terms_.end()) it = terms_.emplace(std::move(indices), 0).first;
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

HPolynomial& HPolynomial::operator+=(const HPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

HPolynomial& HPolynomial::operator-=(const HPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

HPolynomial& HPolynomial::operator*=(const mpz_class& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

int HPolynomial::max_index() const {
    int mx = 0;
    for (const auto& [m, c] : terms_)
        if (!m.empty()) mx = std::max(mx, m.back());
    return mx;
}

mpz_class HPolynomial::evaluate(const std::vector<mpz_class>& values) const {
    mpz_class total = 0;
    for (const auto& [m, c] : terms_) {
        mpz_class t = c;
        for (int idx : m) {
            if (idx > static_cast<int>(values.size()))
                throw PreconditionError("evaluation point too short for h_" +
                                        std::to_string(idx));
            t *= values[static_cast<std::size_t>(idx) - 1];
        }
        total += t;
    }
    return total;
}

nlohmann::json HPolynomial::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : terms_)
        arr.push_back({{"indices", m}, {"coeff", c.get_str()}});
    return arr;
}

HPolynomial jacobi_trudi(const SkewShape& shape) {
    const int k = static_cast<int>(shape.outer.size());
    if (k == 0) return HPolynomial::one();
    HPolynomial out;
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inv = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) ++inv;
        std::vector<int> idx(k);
        bool dead = false;
        for (int i = 0; i < k && !dead; ++i) {
            idx[i] = shape.outer[i] - shape.inner[perm[i]] - i + perm[i];
            dead = idx[i] < 0;
        }
        if (!dead) out.add_term(idx, inv % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

namespace {

struct LrEnumerator {
    const SkewShape& shape;
    int k;
    std::vector<std::vector<int>> grid; // label per cell, 0 = unfilled
    std::vector<int> counts;            // counts[l] = copies of label l so far
    std::map<Partition, long long>& out;

    LrEnumerator(const SkewShape& s, std::map<Partition, long long>& o)
        : shape(s), k(static_cast<int>(s.outer.size())),
          counts(static_cast<std::size_t>(k) + 1, 0), out(o) {
        grid.reserve(k);
        for (int i = 0; i < k; ++i)
            grid.emplace_back(static_cast<std::size_t>(shape.outer[i]), 0);
    }

    void emit() {
        Partition p;
        for (int l = 1; l <= k && counts[l] > 0; ++l) p.push_back(counts[l]);
        ++out[p];
    }

    int first_cell_row(int from) const {
        int r = from;
        while (r < k && shape.outer[r] == shape.inner[r]) ++r;
        return r;
    }

    // reading order: rows top to bottom, right to left within a row
    void advance(int row, int col) {
        if (col > shape.inner[row]) {
            fill(row, col - 1);
            return;
        }
        int r = first_cell_row(row + 1);
        if (r == k) emit();
        else fill(r, shape.outer[r] - 1);
    }

    void fill(int row, int col) {
        // weakly increasing along the row, strictly increasing down a column
        int upper = k;
        if (col + 1 < shape.outer[row]) upper = grid[row][col + 1];
        int lower = 1;
        if (row > 0 && col < shape.outer[row - 1] && col >= shape.inner[row - 1])
            lower = grid[row - 1][col] + 1;
        for (int l = lower; l <= upper; ++l) {
            if (l > 1 && counts[l] + 1 > counts[l - 1]) continue; // ballot prefix
            grid[row][col] = l;
            ++counts[l];
            advance(row, col);
            --counts[l];
            grid[row][col] = 0;
        }
    }

    void run() {
        int r = first_cell_row(0);
        if (r == k) emit();
        else fill(r, shape.outer[r] - 1);
    }
};

} // namespace

std::map<Partition, long long> lr_expand(const SkewShape& shape) {
    std::map<Partition, long long> out;
    if (shape.outer.empty()) {
        out[{}] = 1;
        return out;
    }
    LrEnumerator(shape, out).run();
    return out;
}

bool is_legal(const SkewShape& shape, int k, int c, int n) {
    if (part_count(shape.outer) != static_cast<int>(shape.outer.size()) ||
        static_cast<int>(shape.outer.size()) != k)
        throw PreconditionError("outer partition must have exactly k parts");
    const auto& l = shape.outer;
    const auto& m = shape.inner;
    if (l[0] > n - k + 1) return false;
    if (l[k - 1] < k) return false;
    if (m[0] > c - k) return false;
    for (int i = 0; i < k; ++i)
        if (l[i] - m[i] < k) return false;
    return l[0] - l[k - 1] <= n - c - k + 1;
}

SkewShape minor_shape(int n, int c, const MinorSelection& sel) {
    const int k = static_cast<int>(sel.rows.size());
    if (k == 0 || sel.cols.size() != sel.rows.size())
        throw PreconditionError("row/column selections must agree in size");
    for (int i = 0; i < k; ++i) {
        if (sel.rows[i] < 1 || sel.rows[i] > n - c + 1 || sel.cols[i] < 1 || sel.cols[i] > c)
            throw DimensionError("selection outside A_c");
        if (i && (sel.rows[i] <= sel.rows[i - 1] || sel.cols[i] <= sel.cols[i - 1]))
            throw PreconditionError("selections must be strictly increasing");
    }
    const int shift = sel.cols[k - 1] - k; // makes mu_k = 0
    Partition outer(k), inner(k);
    for (int u = 1; u <= k; ++u)
        outer[u - 1] = n - c + 1 - sel.rows[u - 1] + u + shift;
    for (int v = 1; v <= k; ++v)
        inner[v - 1] = shift + v - sel.cols[v - 1];
    return SkewShape(std::move(outer), std::move(inner));
}

MinorSelection shape_minor_witness(const SkewShape& shape, int k, int c, int n) {
    if (!is_legal(shape, k, c, n))
        throw PreconditionError("shape is not (k,c)-legal");
    // normalize so the last inner part is zero; the determinant is unchanged
    int sh = shape.inner[k - 1];
    std::vector<int> l(k), m(k);
    for (int i = 0; i < k; ++i) {
        l[i] = shape.outer[i] - sh;
        m[i] = shape.inner[i] - sh;
    }
    if (l[k - 1] - m[0] < k)
        throw PreconditionError(
            "shape has Jacobi-Trudi indices below 1 and no minor witness");
    int lo = std::max(m[0], l[0] + c - n - 1);
    MinorSelection sel;
    sel.rows.resize(k);
    sel.cols.resize(k);
    for (int u = 1; u <= k; ++u) sel.rows[u - 1] = n - c + 1 + u + lo - l[u - 1];
    for (int v = 1; v <= k; ++v) sel.cols[v - 1] = lo + v - m[v - 1];
    return sel;
}

std::vector<int> spread_of(const Partition& p, int k) {
    if (part_count(p) > k) throw PreconditionError("partition has more than k parts");
    std::vector<int> padded(p);
    padded.resize(static_cast<std::size_t>(k), 0);
    std::vector<int> s(static_cast<std::size_t>(k) - 1);
    for (int i = 0; i + 1 < k; ++i) s[static_cast<std::size_t>(i)] = padded[i] - padded[k - 1];
    return s;
}

bool spread_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

SkewShape inverse_lr_step(const Partition& nu, int k, int c, int n) {
    if (part_count(nu) != k) throw PreconditionError("nu must have exactly k parts");
    SkewShape plain(nu);
    if (!is_legal(plain, k, k, n)) throw PreconditionError("nu is not (k,k)-legal");
    if (is_legal(plain, k, c, n))
        throw PreconditionError("nu is already (k,c)-legal; no step to take");

    const int span = n - c - k + 1;
    const int split = nu[k - 1] + span; // columns of nu beyond this are excess
    // conjugate column heights
    std::vector<int> height(nu[0]);
    for (int j = 0; j < nu[0]; ++j) {
        int h = 0;
        while (h < k && nu[h] > j) ++h;
        height[j] = h;
    }
    // excess columns, rotated: ascending heights hung from the bottom row k
    std::vector<int> excess(height.begin() + split, height.end());
    std::reverse(excess.begin(), excess.end());
    const int ex = static_cast<int>(excess.size());

    Partition outer(k), inner(k);
    for (int row = 1; row <= k; ++row) {
        int covering_excess = 0;
        for (int h : excess)
            if (h >= k - row + 1) ++covering_excess;
        int covering_main = 0;
        for (int j = 0; j < split; ++j)
            if (height[j] >= row) ++covering_main;
        inner[row - 1] = ex - covering_excess;
        outer[row - 1] = ex + covering_main;
    }
    SkewShape shape(std::move(outer), std::move(inner));

    if (!is_legal(shape, k, c, n))
        throw ConstructionError("constructed shape is not (k,c)-legal");
    auto expansion = lr_expand(shape);
    auto it = expansion.find(nu);
    if (it == expansion.end() || it->second != 1)
        throw ConstructionError("nu does not appear exactly once in the expansion");
    auto nu_spread = spread_of(nu, k);
    for (const auto& [pi, mult] : expansion) {
        if (pi == nu) continue;
        if (!spread_less(spread_of(pi, k), nu_spread))
            throw ConstructionError("expansion term without smaller spread");
    }
    return shape;
}

std::map<SkewShape, long long> inverse_lr_decompose(const Partition& nu, int k, int c,
                                                    int n) {
    if (!(k <= c && 2 * c <= n))
        throw PreconditionError("need k <= c <= n/2");
    std::map<SkewShape, long long> out;
    // recursion ordered by strictly decreasing spread
    auto go = [&](auto&& self, const Partition& v, long long coeff) -> void {
        SkewShape plain(v);
        if (is_legal(plain, k, c, n)) {
            out[plain] += coeff;
            if (out[plain] == 0) out.erase(plain);
            return;
        }
        SkewShape shape = inverse_lr_step(v, k, c, n);
        out[shape] += coeff;
        if (out[shape] == 0) out.erase(shape);
        for (const auto& [pi, mult] : lr_expand(shape)) {
            if (pi == v) continue;
            self(self, pi, -coeff * mult);
        }
    };
    go(go, nu, 1);
    return out;
}

ZMatrix toeplitz_submatrix(const std::vector<mpz_class>& h, int c) {
    const int n = static_cast<int>(h.size());
    if (c < 1 || c > n) throw DimensionError("column count outside [1, n]");
    ZMatrix a(n - c + 1, c);
    for (int s = 1; s <= n - c + 1; ++s)
        for (int t = 1; t <= c; ++t)
            a.at(s - 1, t - 1) = h[static_cast<std::size_t>(n - c - s + t)]; // h_{n-c+1-s+t}
    return a;
}

VerificationReport verify_toeplitz_lemma(const std::vector<mpz_class>& h) {
    const int n = static_cast<int>(h.size());
    if (n < 2) throw PreconditionError("need n >= 2");
    VerificationReport rep;
    rep.theorem_id = "toeplitz";
    nlohmann::json hv = nlohmann::json::array();
    for (const auto& v : h) hv.push_back(v.get_str());
    rep.params = {{"h", hv}};

    const int half = n / 2;
    std::vector<SmithForm> forms(static_cast<std::size_t>(half) + 1);
    for (int c = 1; c <= half; ++c)
        forms[static_cast<std::size_t>(c)] = smith_normal_form(toeplitz_submatrix(h, c));
    for (int k = 1; k <= half; ++k) {
        const mpz_class& base = forms[static_cast<std::size_t>(k)].entries[static_cast<std::size_t>(k) - 1];
        for (int c = k + 1; c <= half; ++c)
            rep.add("k=" + std::to_string(k) + ",c=" + std::to_string(c), base.get_str(),
                    forms[static_cast<std::size_t>(c)]
                        .entries[static_cast<std::size_t>(k) - 1]
                        .get_str());
    }
    return rep;
}

} // namespace lefschetz
