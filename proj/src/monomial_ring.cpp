#include "lefschetz/monomial_ring.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lefschetz/errors.hpp"

namespace lefschetz {

int degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

std::string monomial_str(const Monomial& m) {
    static const char* names3 = "xyz";
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (m.size() <= 3) out += names3[i];
        else out += "x" + std::to_string(i + 1);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

RingSpec::RingSpec(std::vector<int> c) : caps(std::move(c)) {
    if (caps.empty()) throw PreconditionError("ring needs at least one variable");
    for (int a : caps)
        if (a < 1) throw PreconditionError("exponent caps must be positive");
}

int RingSpec::top_degree() const {
    return std::accumulate(caps.begin(), caps.end(), 0) - vars();
}

int RingSpec::middle_rank() const {
    int e = top_degree();
    return e == 0 ? -1 : (e - 1) / 2;
}

bool RingSpec::contains(const Monomial& m) const {
    if (static_cast<int>(m.size()) != vars()) return false;
    for (int i = 0; i < vars(); ++i)
        if (m[i] < 0 || m[i] >= caps[i]) return false;
    return true;
}

static void gen_basis(const RingSpec& spec, int var, int left, Monomial& cur,
                      std::vector<Monomial>& out) {
    const int n = spec.vars();
    if (var == n - 1) {
        if (left < spec.caps[var]) {
            cur[var] = left;
            out.push_back(cur);
        }
        return;
    }
    int hi = std::min(spec.caps[var] - 1, left);
    for (int e = hi; e >= 0; --e) { // descending: lex-largest first
        cur[var] = e;
        gen_basis(spec, var + 1, left - e, cur, out);
    }
    cur[var] = 0;
}

std::vector<Monomial> graded_basis(const RingSpec& spec, int r) {
    std::vector<Monomial> out;
    if (r < 0 || r > spec.top_degree()) return out;
    Monomial cur(spec.vars(), 0);
    gen_basis(spec, 0, r, cur, out);
    return out;
}

std::vector<long long> hilbert_function(const RingSpec& spec) {
    std::vector<long long> h{1};
    for (int a : spec.caps) {
        std::vector<long long> next(h.size() + a - 1, 0);
        for (std::size_t d = 0; d < h.size(); ++d)
            for (int k = 0; k < a; ++k) next[d + k] += h[d];
        h = std::move(next);
    }
    return h;
}

ZMatrix up_map_matrix(const RingSpec& spec, int r) {
    if (r < 0 || r >= spec.top_degree())
        throw DimensionError("up map rank out of [0, e)");
    auto cols = graded_basis(spec, r);
    auto rows = graded_basis(spec, r + 1);
    std::map<Monomial, int, std::greater<>> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = static_cast<int>(i);
    ZMatrix u(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        Monomial m = cols[j];
        for (int v = 0; v < spec.vars(); ++v) {
            ++m[v];
            if (m[v] < spec.caps[v]) u.at(row_index.at(m), static_cast<int>(j)) = 1;
            --m[v];
        }
    }
    return u;
}

namespace {

Monomial cycled(const Monomial& m) { return {m[2], m[0], m[1]}; } // x->y->z->x
Monomial swapped(const Monomial& m) { return {m[0], m[2], m[1]}; }

void require_action(const RingSpec& spec, GroupAction a) {
    if (spec.vars() != 3) throw ConstraintError("group actions need three variables");
    if (a.kind == ActionKind::Cycle3) {
        if (!(spec.caps[0] == spec.caps[1] && spec.caps[1] == spec.caps[2]))
            throw ConstraintError("cycle3 needs equal caps");
        if (a.sign == ActionSign::Minus)
            throw ConstraintError("cycle3 has no sign character over the integers");
    } else {
        if (spec.caps[1] != spec.caps[2])
            throw ConstraintError("swap_yz needs caps[1] == caps[2]");
    }
}

// Expand (x+y+z) * element and read off coordinates in the degree-(r+1)
// signed basis: the representative of each target element carries it.
ZMatrix restricted_matrix(const RingSpec& spec,
                          const std::vector<SignedBasisElement>& domain,
                          const std::vector<SignedBasisElement>& target) {
    std::map<Monomial, int, std::greater<>> rep_row;
    for (std::size_t i = 0; i < target.size(); ++i) rep_row[target[i].rep] = static_cast<int>(i);
    ZMatrix u(static_cast<int>(target.size()), static_cast<int>(domain.size()));
    for (std::size_t j = 0; j < domain.size(); ++j) {
        std::map<Monomial, long long> image;
        for (const auto& [mon, coeff] : domain[j].terms) {
            Monomial m = mon;
            for (int v = 0; v < 3; ++v) {
                ++m[v];
                if (m[v] < spec.caps[v]) image[m] += coeff;
                --m[v];
            }
        }
        for (const auto& t : target) {
            auto it = image.find(t.rep);
            if (it != image.end() && it->second != 0)
                u.at(rep_row.at(t.rep), static_cast<int>(j)) = static_cast<long>(it->second);
        }
        // the image must lie in the span of the target basis
        std::map<Monomial, long long> residual = image;
        for (const auto& t : target) {
            auto it = image.find(t.rep);
            if (it == image.end()) continue;
            long long c = it->second;
            for (const auto& [mon, coeff] : t.terms) residual[mon] -= c * coeff;
        }
        for (const auto& [mon, coeff] : residual)
            if (coeff != 0)
                throw ConstructionError("restricted image leaves the signed span at " +
                                        monomial_str(mon));
    }
    return u;
}

} // namespace

std::vector<SignedBasisElement> invariant_basis(const RingSpec& spec, int r,
                                                GroupAction action) {
    require_action(spec, action);
    std::vector<SignedBasisElement> out;
    for (const Monomial& m : graded_basis(spec, r)) {
        if (action.kind == ActionKind::Cycle3) {
            Monomial a = cycled(m), b = cycled(a);
            if (m < a || m < b) continue; // not the orbit representative
            SignedBasisElement e{m, {{m, 1}}};
            if (a != m) e.terms.push_back({a, 1});
            if (b != m && b != a) e.terms.push_back({b, 1});
            out.push_back(std::move(e));
        } else {
            Monomial s = swapped(m);
            if (action.sign == ActionSign::Plus) {
                if (m < s) continue;
                SignedBasisElement e{m, {{m, 1}}};
                if (s != m) e.terms.push_back({s, 1});
                out.push_back(std::move(e));
            } else {
                if (m[1] <= m[2]) continue; // fixed monomials vanish
                out.push_back({m, {{m, 1}, {s, -1}}});
            }
        }
    }
    // graded_basis is descending and each orbit is emitted at its largest
    // member, so the list is already in representative order
    return out;
}

ZMatrix restricted_up_map(const RingSpec& spec, int r, GroupAction action) {
    require_action(spec, action);
    return restricted_matrix(spec, invariant_basis(spec, r, action),
                             invariant_basis(spec, r + 1, action));
}

std::vector<SignedBasisElement> alternating_basis(const RingSpec& spec, int r) {
    require_action(spec, {ActionKind::Cycle3, ActionSign::Plus});
    std::vector<SignedBasisElement> out;
    for (const Monomial& m : graded_basis(spec, r)) {
        if (!(m[0] > m[1] && m[1] > m[2])) continue; // descending = representative
        SignedBasisElement e{m, {}};
        Monomial c1 = cycled(m), c2 = cycled(c1);
        e.terms = {{m, 1},          {c1, 1},          {c2, 1},
                   {swapped(m), -1}, {swapped(c1), -1}, {swapped(c2), -1}};
        out.push_back(std::move(e));
    }
    return out;
}

ZMatrix alternating_up_map(const RingSpec& spec, int r) {
    return restricted_matrix(spec, alternating_basis(spec, r),
                             alternating_basis(spec, r + 1));
}

} // namespace lefschetz
