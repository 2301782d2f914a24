#include "lefschetz/snf_theorems.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "lefschetz/errors.hpp"
#include "lefschetz/exact_linalg.hpp"

namespace lefschetz {

mpz_class binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

static void check_mr_range(int A, int B, int C, int r) {
    if (!(A >= B && B >= C && C >= 1))
        throw PreconditionError("caps must satisfy A >= B >= C >= 1");
    int e = A + B + C - 3;
    if (r < A - 1 || 2 * r > e - 1)
        throw PreconditionError("rank outside [A-1, floor((e-1)/2)]");
}

ZMatrix build_mr(int A, int B, int C, int r) {
    check_mr_range(A, B, C, r);
    ZMatrix m(B + C - r - 2, r - A + 2);
    for (int i = 1; i <= m.rows(); ++i)
        for (int j = 1; j <= m.cols(); ++j)
            m.at(i - 1, j - 1) = binomial(A, r - B + i - j + 2);
    return m;
}

ZMatrix build_multinomial_mr(const std::vector<int>& caps, int r) {
    if (!std::is_sorted(caps.begin(), caps.end(), std::greater<>()))
        throw PreconditionError("caps must be sorted descending");
    const int a1 = caps[0];
    int e = 0;
    for (int c : caps) e += c - 1;
    if (r < a1 - 1 || 2 * r > e)
        throw PreconditionError("rank outside [A1-1, (sum caps - n)/2]");

    RingSpec rest(std::vector<int>(caps.begin() + 1, caps.end()));
    auto rows = graded_basis(rest, r + 1);
    auto cols = graded_basis(rest, r - a1 + 1);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), a1);

    ZMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            mpz_class coef = fact;
            bool ok = true;
            for (std::size_t v = 0; v < rows[i].size() && ok; ++v) {
                int d = rows[i][v] - cols[j][v];
                if (d < 0) ok = false;
                else {
                    mpz_class df;
                    mpz_fac_ui(df.get_mpz_t(), d);
                    coef /= df;
                }
            }
            if (ok) m.at(static_cast<int>(i), static_cast<int>(j)) = coef;
        }
    return m;
}

std::optional<std::vector<mpz_class>> carlitz_closed_forms(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1) throw PreconditionError("box sides must be positive");
    if (c == 1) return std::vector<mpz_class>{binomial(a + b, b)};
    if (c == 2) {
        if (a == b) {
            mpz_class catalan = binomial(2 * a, a) / (a + 1);
            return std::vector<mpz_class>{catalan, binomial(2 * a + 1, a + 1)};
        }
        mpz_class s1;
        mpz_class b0 = binomial(a + b, b - 1), b1 = binomial(a + b, b),
                  b2 = binomial(a + b, b + 1);
        mpz_gcd(s1.get_mpz_t(), b0.get_mpz_t(), b1.get_mpz_t());
        mpz_gcd(s1.get_mpz_t(), s1.get_mpz_t(), b2.get_mpz_t());
        mpz_class s2 = (b1 * b1 - b0 * b2) / s1;
        return std::vector<mpz_class>{s1, s2};
    }
    return std::nullopt;
}

namespace {

using Poly = std::map<std::pair<int, int>, mpz_class>; // (ypow, zpow) -> coeff

void poly_sub_product(Poly& dst, const Poly& a, const Poly& b) {
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            auto key = std::make_pair(ma.first + mb.first, ma.second + mb.second);
            auto it = dst.find(key);
            if (it == dst.end()) it = dst.emplace(key, 0).first;
            it->second -= ca * cb;
            if (it->second == 0) dst.erase(it);
        }
}

bool is_const_one(const Poly& p) {
    return p.size() == 1 && p.begin()->first == std::make_pair(0, 0) &&
           p.begin()->second == 1;
}

} // namespace

TermMatrix symbolic_reduction(int A, int B, int C, int r) {
    check_mr_range(A, B, C, r);
    RingSpec spec{A, B, C};
    auto rows = graded_basis(spec, r + 1);
    auto all_cols = graded_basis(spec, r);
    std::vector<Monomial> cols, moved;
    for (const auto& m : all_cols)
        (m[0] == A - 1 ? moved : cols).push_back(m);
    const int keep = static_cast<int>(moved.size()); // r - A + 2 tracked columns
    cols.insert(cols.end(), moved.begin(), moved.end());

    const int nr = static_cast<int>(rows.size());
    const int nc = static_cast<int>(cols.size());
    std::vector<std::vector<Poly>> m(nr, std::vector<Poly>(nc));
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) {
            // nonzero iff the row monomial is the column monomial times a variable
            Monomial diff(3);
            bool ok = true;
            for (int v = 0; v < 3; ++v) {
                diff[v] = rows[i][v] - cols[j][v];
                ok = ok && diff[v] >= 0;
            }
            if (!ok || diff[0] + diff[1] + diff[2] != 1) continue;
            if (diff[0] == 1) m[i][j][{0, 0}] = 1;
            else if (diff[1] == 1) m[i][j][{1, 0}] = 1;
            else m[i][j][{0, 1}] = 1;
        }

    const int target_rows = B + C - r - 2;
    int top = 0, left = 0; // live block is [top, nr) x [left, nc)
    auto check_tracked = [&](int step) {
        for (int i = top; i < nr; ++i)
            for (int j = nc - keep; j < nc; ++j)
                if (m[i][j].size() > 1)
                    throw ConstructionError(
                        "tracked entry not a single term at step " + std::to_string(step) +
                        ", row " + monomial_str(rows[i]));
    };
    check_tracked(0);
    while (nr - top > target_rows) {
        if (!is_const_one(m[top][left]))
            throw ConstructionError("pivot is not 1 at row " + monomial_str(rows[top]));
        for (int i = top + 1; i < nr; ++i) {
            if (m[i][left].empty()) continue;
            for (int j = left + 1; j < nc; ++j) {
                if (m[top][j].empty()) continue;
                poly_sub_product(m[i][j], m[i][left], m[top][j]);
            }
        }
        ++top;
        ++left;
        check_tracked(left);
    }
    if (nc - left != keep)
        throw ConstructionError("column count off after elimination");
    for (int i = top; i < nr; ++i)
        if (rows[i][0] != 0)
            throw ConstructionError("terminal rows are not x-free");

    TermMatrix out;
    out.rows = target_rows;
    out.cols = keep;
    out.entries.resize(static_cast<std::size_t>(target_rows) * keep);
    for (int i = 0; i < target_rows; ++i)
        for (int j = 0; j < keep; ++j) {
            const Poly& p = m[top + i][left + j];
            if (p.empty()) continue;
            const auto& [mono, coeff] = *p.begin();
            out.at(i, j) = {coeff, mono.first, mono.second};
        }
    return out;
}

namespace {

std::string fmt_entries(std::vector<mpz_class> v) {
    std::sort(v.begin(), v.end());
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

} // namespace

VerificationReport verify_snf_theorem(Thm1Part part, const RingSpec& spec) {
    if (spec.vars() != 3) throw PreconditionError("theorem is trivariate");
    if (!std::is_sorted(spec.caps.begin(), spec.caps.end(), std::greater<>()))
        throw PreconditionError("caps must be sorted descending");
    const int A = spec.caps[0], B = spec.caps[1], C = spec.caps[2];
    const int e = spec.top_degree();
    const int mid = spec.middle_rank();

    VerificationReport rep;
    rep.params = {{"caps", spec.caps}};
    auto h = hilbert_function(spec);

    switch (part) {
    case Thm1Part::I: {
        rep.theorem_id = "thm1.i";
        for (int r = 0; r <= A - 2 && r < e; ++r) {
            SmithForm f = smith_normal_form(up_map_matrix(spec, r));
            rep.add("r=" + std::to_string(r) + " non-units", "()", fmt_entries(f.nonunit()));
            rep.add_bool("r=" + std::to_string(r) + " rank=h(r)",
                         f.rank == h[static_cast<std::size_t>(r)]);
        }
        break;
    }
    case Thm1Part::II: {
        rep.theorem_id = "thm1.ii";
        for (int r = A - 1; r <= mid; ++r) {
            SmithForm fu = smith_normal_form(up_map_matrix(spec, r));
            SmithForm fm = smith_normal_form(build_mr(A, B, C, r));
            auto label = "r=" + std::to_string(r);
            rep.add(label + " non-units", fmt_entries(fm.nonunit()), fmt_entries(fu.nonunit()));
            rep.add_bool(label + " count<=r-A+2",
                         static_cast<int>(fu.nonunit().size()) <= r - A + 2);
        }
        break;
    }
    case Thm1Part::III: {
        rep.theorem_id = "thm1.iii";
        if (mid < 0) break; // e = 0: nothing to check
        SmithForm fm = smith_normal_form(up_map_matrix(spec, mid));
        for (int s = 0; s <= mid; ++s) {
            SmithForm fs = smith_normal_form(up_map_matrix(spec, mid - s));
            long long take = std::max<long long>(0, h[static_cast<std::size_t>(mid)] - s);
            std::vector<mpz_class> prefix_nonunit;
            for (long long i = 0; i < take && i < static_cast<long long>(fm.entries.size()); ++i)
                if (fm.entries[static_cast<std::size_t>(i)] != 1)
                    prefix_nonunit.push_back(fm.entries[static_cast<std::size_t>(i)]);
            rep.add("s=" + std::to_string(s), fmt_entries(prefix_nonunit),
                    fmt_entries(fs.nonunit()));
        }
        break;
    }
    }
    return rep;
}

} // namespace lefschetz
