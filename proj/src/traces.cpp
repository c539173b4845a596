#include "finf/traces.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace finf {

std::string cycle_structure(const BraidWord& beta) {
    auto p = beta.permutation();
    std::vector<bool> seen(p.size(), false);
    std::vector<int> lens;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t x = i; !seen[x]; x = p[x]) {
            seen[x] = true;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    std::string s = "(";
    for (size_t i = 0; i < lens.size(); ++i) s += (i ? "," : "") + std::to_string(lens[i]);
    return s + ")";
}

void require_knot(const BraidWord& beta) {
    if (!beta.closure_is_knot())
        throw NotAKnotError("closure is not a knot: permutation cycle type " + cycle_structure(beta) + " on " +
                            std::to_string(beta.strands) + " strands");
}

namespace {

// Sum of diagonal entries over closure labels with one end factor held at v_0.
template <class Model, class Pivot>
typename Model::Coeff trace_core(const Model& model, const BraidWord& beta, int cap, Pivot pivot,
                                 bool last_open = false) {
    using T = typename Model::Coeff;
    const int n = beta.strands;
    T sum;
    if (n == 1) return model.one();
    for (int m = 0; m <= (n - 1) * cap; ++m) {
        for (const auto& ks : bounded_compositions(n - 1, m, cap)) {
            Composition k;
            if (last_open) {
                k = ks;
                k.push_back(0);
            } else {
                k.push_back(0);
                k.insert(k.end(), ks.begin(), ks.end());
            }
            SparseVector<T> v;
            v.emplace(k, model.one());
            v = apply_braid(model, beta, std::move(v));
            auto it = v.find(k);
            if (it != v.end()) sum += it->second * pivot(m);
        }
    }
    return sum;
}

}  // namespace

TruncatedSeries partial_trace(const BraidWord& beta, int p, int B) {
    require_knot(beta);
    const int n = beta.strands;
    TruncatedSeries out;
    out.value = trace_core(GenericModel{}, beta, B, [&](int m) { return qs(-2 * p * m, p * (n - 1)); });
    out.state_bound = B;
    out.writhe = beta.writhe();
    out.strands = n;
    return out;
}

BivariateLaurent partial_trace_last_open(const BraidWord& beta, int p, int B) {
    require_knot(beta);
    const int n = beta.strands;
    return trace_core(GenericModel{}, beta, B, [&](int m) { return qs(-2 * p * m, p * (n - 1)); }, true);
}

TruncatedSeries f_infinity(const BraidWord& beta, int B, bool normalize) {
    TruncatedSeries out = partial_trace(beta, 1, B);
    if (normalize) {
        out.value = out.value.scaled({0, -out.writhe}, Int(1));
        out.normalized = true;
    }
    return out;
}

UnivariateLaurent colored_jones(const BraidWord& beta, int N, bool normalize) {
    require_knot(beta);
    const int n = beta.strands;
    SpecializedModel model(N);
    UnivariateLaurent v = trace_core(model, beta, N, [&](int m) { return xpow(N * (n - 1) - 2 * m); });
    return normalize ? v.scaled(-N * beta.writhe(), Int(1)) : v;
}

AdoPolynomial ado(const BraidWord& beta, int r, bool normalize) {
    require_knot(beta);
    const int n = beta.strands, order = 2 * r;
    RootModel model(r, true);
    AdoPolynomial out;
    out.r = r;
    out.writhe = beta.writhe();
    out.value = trace_core(model, beta, r - 1, [&](int m) {
        return CyclotomicLaurent::monomial((1 - r) * (n - 1), CyclotomicScalar::zeta_power(order, -2LL * (1 - r) * m));
    });
    if (out.value.order() == 0) out.value = CyclotomicLaurent(order);
    if (normalize) {
        out.value = out.value.scaled((r - 1) * out.writhe, CyclotomicScalar(order, Int(1)));
        out.normalized = true;
    }
    return out;
}

UnivariateLaurent reduced_burau_determinant(const BraidWord& beta) {
    const SMatrix psi = sym_burau(beta);
    const int n = beta.strands;
    const int d = n - 1;
    // I - psi restricted to rows/columns 2..n.
    SMatrix A(d, std::vector<UnivariateLaurent>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) A[i][j] = (i == j ? UnivariateLaurent(1) : UnivariateLaurent()) - psi[i + 1][j + 1];
    // Laplace expansion along rows, memoized on the set of used columns.
    std::map<unsigned, UnivariateLaurent> memo;
    std::function<UnivariateLaurent(unsigned)> det = [&](unsigned used) -> UnivariateLaurent {
        const int row = __builtin_popcount(used);
        if (row == d) return UnivariateLaurent(1);
        auto it = memo.find(used);
        if (it != memo.end()) return it->second;
        UnivariateLaurent acc;
        int sign_pos = 0;
        for (int j = 0; j < d; ++j) {
            if (used & (1u << j)) continue;
            if (!A[row][j].is_zero()) {
                UnivariateLaurent t = A[row][j] * det(used | (1u << j));
                if (sign_pos % 2) acc -= t; else acc += t;
            }
            ++sign_pos;
        }
        return memo.emplace(used, acc).first->second;
    };
    return det(0);
}

UnivariateLaurent alexander(const BraidWord& beta) {
    require_knot(beta);
    const UnivariateLaurent D = reduced_burau_determinant(beta);
    if (D.is_zero()) throw std::logic_error("degenerate Burau determinant for a knot closure");
    const int lo = min_degree(D), hi = max_degree(D);
    for (const auto& [e, c] : D.terms())
        if ((e - lo) % 2) throw std::logic_error("Burau determinant is not a polynomial in s^2");
    if (((hi - lo) / 2) % 2) throw std::logic_error("Burau determinant has no symmetric representative");
    const int center = (lo + hi) / 2;
    // t = s^{-2}
    UnivariateLaurent A = D.map_exponents([center](int e) { return (center - e) / 2; });
    Int at1(0);
    for (const auto& [e, c] : A.terms()) at1 += c;
    if (at1 == Int(-1)) A = -A;
    else if (!(at1 == Int(1))) throw std::logic_error("Alexander polynomial does not evaluate to +-1 at t = 1");
    return A;
}

TruncatedSeries homological_form(const BraidWord& beta, int B) {
    require_knot(beta);
    const int n = beta.strands;
    TruncatedSeries out;
    out.state_bound = B;
    out.writhe = beta.writhe();
    out.strands = n;
    if (n == 1) {
        out.value = BivariateLaurent(1);
        return out;
    }
    // A(k) = d(k) A''(k) with d(k) = (-t)^{m(m-1)/2} s^{2nm} s^{-sum i k_i}, -t = q^{-2}.
    auto d = [n](const Composition& k) {
        int m = 0, w = 0;
        for (int i = 0; i < n; ++i) {
            m += k[i];
            w += (i + 1) * k[i];
        }
        return BiExp{-m * (m - 1), 2 * n * m - w};
    };
    for (int m = 0; m <= (n - 1) * B; ++m) {
        const WeightBlockMatrix& M = braid_block(beta, m);
        // Entry (r, c) of the block in the A'' basis.
        auto conjugated = [&](size_t r, size_t c) {
            const BiExp dr = d(M.basis[r]), dc = d(M.basis[c]);
            return M.entries[r][c].scaled({dr.q - dc.q, dr.s - dc.s}, Int(1));
        };
        for (size_t c = 0; c < M.basis.size(); ++c) {
            const Composition& k = M.basis[c];
            if (k[0] != 0 || *std::max_element(k.begin(), k.end()) > B) continue;
            // <beta A''(k), B''(k)> picks the diagonal coefficient.
            out.value += conjugated(c, c).scaled({-2 * m, n - 1}, Int(1));
        }
    }
    return out;
}

CurlScalars curl_scalars(int B) {
    return {partial_trace(BraidWord{2, {1}}, 1, B), partial_trace(BraidWord{2, {-1}}, 1, B)};
}

CheckResult verify_symmetry_ado(const BraidWord& beta, int r) {
    const AdoPolynomial a = ado(beta, r, true);
    const int order = 2 * r;
    CyclotomicLaurent flipped(order);
    for (const auto& [e, c] : a.value.terms())
        flipped += CyclotomicLaurent::monomial(-e, c * CyclotomicScalar::zeta_power(order, -2LL * e));
    CheckResult res;
    res.ok = flipped == a.value;
    res.detail = "r=" + std::to_string(r) + (res.ok ? " symmetric" : " not symmetric");
    return res;
}

CheckResult verify_factorization(const BraidWord& beta, int r, int max_m) {
    CheckResult res;
    const AdoPolynomial a = ado(beta, r, true);
    for (int N = 1; N < r; ++N) {
        const CyclotomicScalar lhs = a.value.at_zeta_power(N);
        const CyclotomicScalar rhs = specialize(colored_jones(beta, N, true), 2 * r);
        if (lhs != rhs) {
            res.ok = false;
            res.detail = "ADO(zeta^" + std::to_string(N) + ") != J_" + std::to_string(N) + "(zeta), r=" + std::to_string(r);
            return res;
        }
    }
    for (int m = 0; m <= max_m; ++m) {
        CheckResult f = rpart_factorization_check(beta, r, m);
        if (!f.ok) return f;
    }
    res.detail = "r=" + std::to_string(r) + " roots and r-part blocks agree";
    return res;
}

CheckResult verify_mmr(const BraidWord& beta, int B) {
    CheckResult res;
    const UnivariateLaurent F = specialize_q1(f_infinity(beta, B, false).value);
    const UnivariateLaurent A2 = substitute(alexander(beta), 2);
    const UnivariateLaurent P = F * A2;
    const UnivariateLaurent base = xpow(1) - xpow(-1);
    const int need = (B + 1) / 2;
    const int lo = P.is_zero() ? 0 : min_degree(P), hi = P.is_zero() ? 0 : max_degree(P);
    // Try the writhe first, then every exponent in range.
    std::vector<int> cands{beta.writhe()};
    for (int c = lo - 1; c <= hi + 1; ++c)
        if (c != beta.writhe()) cands.push_back(c);
    for (int c : cands) {
        const int k = divisibility_order(P - xpow(c), base, B + 1);
        if (k >= need) {
            res.ok = true;
            res.detail = "c=" + std::to_string(c) + " order=" + std::to_string(k) + " need=" + std::to_string(need);
            return res;
        }
    }
    res.ok = false;
    res.detail = "no monomial s^c makes the q=1 product divisible to order " + std::to_string(need);
    return res;
}

}  // namespace finf
