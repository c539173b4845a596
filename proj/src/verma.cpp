#include "finf/verma.hpp"

#include <functional>
#include <sstream>

namespace finf {

std::vector<Composition> compositions(int n, int m) { return bounded_compositions(n, m, m); }

std::vector<Composition> bounded_compositions(int n, int m, int cap) {
    std::vector<Composition> out;
    if (n <= 0 || m < 0) return out;
    Composition cur(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n - 1) {
            if (left <= cap) {
                cur[pos] = left;
                out.push_back(cur);
            }
            return;
        }
        for (int v = std::min(left, cap); v >= 0; --v) {
            cur[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, m);
    return out;
}

ModuleTerm act_K(int j, int power) { return {qs(-2 * power * j, power), j}; }

ModuleTerm act_E(int j) {
    if (j == 0) return {BivariateLaurent(), -1};
    return {BivariateLaurent(1), j - 1};
}

ModuleTerm act_F(int n, int j) { return {lift_q(qbinom(n + j, j)) * brace_alpha(j, n), j + n}; }

namespace {

std::mutex g_cross_mutex;
std::map<std::tuple<int, int, int, int>, BivariateLaurent> g_cross;
const BivariateLaurent g_zero_b;

BivariateLaurent compute_crossing(int sign, int a, int b, int i) {
    if (i < 0 || i > b) return {};
    BivariateLaurent c = lift_q(qbinom(a + i, i)) * brace_alpha(a, i);
    if (sign > 0) return c.scaled({i * (i - 1) / 2 + 2 * (a + i) * (b - i), -(a + b)}, Int(1));
    return c.scaled({-i * (i - 1) / 2 - 2 * a * b, a + b}, Int(i % 2 ? -1 : 1));
}

}  // namespace

const BivariateLaurent& crossing_coeff(int sign, int a, int b, int i) {
    auto key = std::make_tuple(sign > 0 ? 1 : -1, a, b, i);
    {
        std::lock_guard<std::mutex> lock(g_cross_mutex);
        auto it = g_cross.find(key);
        if (it != g_cross.end()) return it->second;
    }
    BivariateLaurent c = compute_crossing(sign, a, b, i);
    std::lock_guard<std::mutex> lock(g_cross_mutex);
    return g_cross.emplace(key, std::move(c)).first->second;
}

std::vector<CrossingTerm> crossing_terms(int sign, int a, int b, int bound) {
    std::vector<CrossingTerm> out;
    for (int i = 0; i <= std::min(b, bound); ++i) {
        const auto& c = crossing_coeff(sign, a, b, i);
        if (!c.is_zero()) out.push_back({i, c, a + i, b - i});
    }
    return out;
}

const UnivariateLaurent& SpecializedModel::crossing(int sign, int a, int b, int i) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_tuple(sign, a, b, i);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(key, specialize_s(crossing_coeff(sign, a, b, i), N_)).first->second;
}

const UnivariateLaurent& ClassicalModel::crossing(int sign, int a, int b, int i) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_tuple(sign, a, b, i);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(key, specialize_q1(crossing_coeff(sign, a, b, i))).first->second;
}

const CyclotomicLaurent& RootModel::crossing(int sign, int a, int b, int i) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_tuple(sign, a, b, i);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    CyclotomicLaurent c = specialize_q_root(crossing_coeff(sign, a, b, i), r_);
    if (c.order() == 0) c = CyclotomicLaurent(2 * r_);
    return cache_.emplace(key, std::move(c)).first->second;
}

namespace {

std::mutex g_block_mutex;
std::map<std::pair<std::pair<int, std::vector<int>>, int>, WeightBlockMatrix> g_blocks;

}  // namespace

const WeightBlockMatrix& braid_block(const BraidWord& beta, int m) {
    auto key = std::make_pair(std::make_pair(beta.strands, beta.letters), m);
    {
        std::lock_guard<std::mutex> lock(g_block_mutex);
        auto it = g_blocks.find(key);
        if (it != g_blocks.end()) return it->second;
    }
    WeightBlockMatrix M = block_of(GenericModel{}, beta, compositions(beta.strands, m));
    std::lock_guard<std::mutex> lock(g_block_mutex);
    return g_blocks.emplace(key, std::move(M)).first->second;
}

namespace {

SMatrix identity_matrix(int n) {
    SMatrix I(n, std::vector<UnivariateLaurent>(n));
    for (int i = 0; i < n; ++i) I[i][i] = UnivariateLaurent(1);
    return I;
}

SMatrix multiply(const SMatrix& A, const SMatrix& B) {
    const size_t n = A.size();
    SMatrix C(n, std::vector<UnivariateLaurent>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (A[i][k].is_zero()) continue;
            for (size_t j = 0; j < n; ++j)
                if (!B[k][j].is_zero()) C[i][j] += A[i][k] * B[k][j];
        }
    return C;
}

SMatrix burau_generator(int n, int letter) {
    SMatrix M = identity_matrix(n);
    const int i = std::abs(letter) - 1;
    M[i][i] = M[i + 1][i + 1] = UnivariateLaurent();
    if (letter > 0) {
        M[i][i] = UnivariateLaurent(1) - xpow(-2);
        M[i + 1][i] = xpow(-1);
        M[i][i + 1] = xpow(-1);
    } else {
        M[i + 1][i] = xpow(1);
        M[i][i + 1] = xpow(1);
        M[i + 1][i + 1] = UnivariateLaurent(1) - xpow(2);
    }
    return M;
}

}  // namespace

SMatrix sym_burau(const BraidWord& beta) {
    SMatrix M = identity_matrix(beta.strands);
    for (int l : beta.letters) M = multiply(M, burau_generator(beta.strands, l));
    return M;
}

BlockMatrix<UnivariateLaurent> sym_power(const SMatrix& M, int m) {
    const int n = static_cast<int>(M.size());
    BlockMatrix<UnivariateLaurent> out;
    out.basis = compositions(n, m);
    const size_t dim = out.basis.size();
    out.entries.assign(dim, std::vector<UnivariateLaurent>(dim));
    auto weight = [](const Composition& c) {
        Int d(1);
        for (int x : c)
            for (int k = 2; k <= x; ++k) d *= Int(k);
        return d;
    };
    for (size_t col = 0; col < dim; ++col) {
        // Expand prod_k (M e_k)^{j_k} in commuting variables e_1..e_n.
        SparseVector<UnivariateLaurent> poly;
        poly.emplace(Composition(n, 0), UnivariateLaurent(1));
        for (int k = 0; k < n; ++k) {
            for (int rep = 0; rep < out.basis[col][k]; ++rep) {
                SparseVector<UnivariateLaurent> next;
                for (const auto& [mono, c] : poly)
                    for (int l = 0; l < n; ++l) {
                        if (M[l][k].is_zero()) continue;
                        Composition e = mono;
                        ++e[l];
                        accumulate(next, e, c * M[l][k]);
                    }
                poly = std::move(next);
            }
        }
        const Int dcol = weight(out.basis[col]);
        for (const auto& [mono, c] : poly) {
            const size_t row = out.index_of(mono);
            const Int drow = weight(mono);
            std::vector<UnivariateLaurent::Term> terms;
            for (const auto& [e, x] : c.terms()) {
                Int q;
                if (!Int::divide_exact(x * drow, dcol, q)) throw std::logic_error("sym_power rescaling not integral");
                terms.push_back({e, q});
            }
            out.entries[row][col] = UnivariateLaurent::from_terms(std::move(terms));
        }
    }
    return out;
}

namespace {

int rpart(const Composition& c, int r) {
    int s = 0;
    for (int x : c) s += x / r;
    return s;
}

std::vector<Composition> rpart_basis(int n, int r, int m) {
    std::vector<Composition> out;
    for (const auto& j : compositions(n, m)) {
        for (const auto& ibar : [&] {
                 std::vector<Composition> all;
                 Composition cur(n, 0);
                 std::function<void(int)> rec = [&](int p) {
                     if (p == n) {
                         all.push_back(cur);
                         return;
                     }
                     for (int v = 0; v < r; ++v) {
                         cur[p] = v;
                         rec(p + 1);
                     }
                 };
                 rec(0);
                 return all;
             }()) {
            Composition lab(n);
            for (int k = 0; k < n; ++k) lab[k] = ibar[k] + r * j[k];
            out.push_back(lab);
        }
    }
    return out;
}

}  // namespace

BlockMatrix<CyclotomicLaurent> rpart_block(const BraidWord& beta, int r, int m) {
    RootModel model(r, false);
    BlockMatrix<CyclotomicLaurent> M;
    M.basis = rpart_basis(beta.strands, r, m);
    const size_t dim = M.basis.size();
    M.entries.assign(dim, std::vector<CyclotomicLaurent>(dim, CyclotomicLaurent(2 * r)));
    for (size_t col = 0; col < dim; ++col) {
        SparseVector<CyclotomicLaurent> v;
        v.emplace(M.basis[col], model.one());
        for (auto it = beta.letters.rbegin(); it != beta.letters.rend(); ++it) {
            v = apply_letter(model, *it, v);
            // The r-part never increases, and lower parts never return.
            for (auto vi = v.begin(); vi != v.end();) vi = rpart(vi->first, r) == m ? std::next(vi) : v.erase(vi);
        }
        for (const auto& [comp, c] : v) M.entries[M.index_of(comp)][col] = c;
    }
    return M;
}

namespace {

std::string comp_str(const Composition& c) {
    std::string s = "(";
    for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
}

CyclotomicLaurent frobenius(const UnivariateLaurent& p, int r) {
    CyclotomicLaurent out(2 * r);
    for (const auto& [e, c] : p.terms()) out += CyclotomicLaurent::monomial(e * r, CyclotomicScalar(2 * r, c));
    return out;
}

}  // namespace

CheckResult rpart_factorization_check(const BraidWord& beta, int r, int m) {
    const int n = beta.strands;
    const auto L = rpart_block(beta, r, m);
    const auto P0 = rpart_block(beta, r, 0);
    const auto Psi = sym_power(sym_burau(beta), m);
    CheckResult res;
    for (size_t col = 0; col < L.basis.size(); ++col) {
        for (size_t row = 0; row < L.basis.size(); ++row) {
            Composition ic(n), jc(n), ir(n), jr(n);
            for (int k = 0; k < n; ++k) {
                ic[k] = L.basis[col][k] % r;
                jc[k] = L.basis[col][k] / r;
                ir[k] = L.basis[row][k] % r;
                jr[k] = L.basis[row][k] / r;
            }
            const auto& a = P0.entries[P0.index_of(ir)][P0.index_of(ic)];
            const auto& b = Psi.entries[Psi.index_of(jr)][Psi.index_of(jc)];
            if (L.entries[row][col] != a * frobenius(b, r)) {
                res.ok = false;
                res.detail = "mismatch at row " + comp_str(L.basis[row]) + " col " + comp_str(L.basis[col]);
                return res;
            }
        }
    }
    res.detail = "r=" + std::to_string(r) + " m=" + std::to_string(m) + " dim=" + std::to_string(L.basis.size());
    return res;
}

CheckResult quotient_module_check(int N, int depth) {
    CheckResult res;
    auto fail = [&](const std::string& what, int i) {
        res.ok = false;
        std::ostringstream os;
        os << what << " differs at quotient index " << i;
        res.detail = os.str();
    };
    const int M = -N - 2;
    for (int i = 0; i < depth && res.ok; ++i) {
        const int j = N + 1 + i;
        if (specialize_s(act_K(j).coeff, N) != specialize_s(act_K(i).coeff, M)) fail("K", i);
        // E v_{N+1} lands in the submodule.
        const auto e1 = act_E(j), e2 = act_E(i);
        const bool zero1 = e1.index <= N, zero2 = e2.index < 0;
        if (zero1 != zero2) fail("E", i);
        if (!zero1 && specialize_s(e1.coeff, N) != specialize_s(e2.coeff, M)) fail("E", i);
        for (int n = 1; n <= depth && res.ok; ++n)
            if (specialize_s(act_F(n, j).coeff, N) != specialize_s(act_F(n, i).coeff, M)) fail("F", i);
    }
    if (res.ok) res.detail = "N=" + std::to_string(N) + " depth=" + std::to_string(depth);
    return res;
}

}  // namespace finf
