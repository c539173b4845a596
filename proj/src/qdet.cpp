#include "finf/qdet.hpp"

#include "finf/rings.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>
#include <unordered_map>
#include <cstdio>
#include <cstdlib>

namespace finf {

MultiLaurent MultiLaurent::constant(int indices, const UnivariateLaurent& c) {
    return monomial(indices, Key(3 * indices, 0), c);
}

MultiLaurent MultiLaurent::monomial(int indices, Key e, const UnivariateLaurent& c) {
    MultiLaurent p(indices);
    e.resize(3 * indices, 0);
    p.add(e, c);
    return p;
}

void MultiLaurent::widen(int indices) {
    if (indices <= k_) return;
    Map t;
    for (auto& [e, c] : t_) {
        Key f = e;
        f.resize(3 * indices, 0);
        t.emplace(std::move(f), std::move(c));
    }
    t_ = std::move(t);
    k_ = indices;
}

void MultiLaurent::add(const Key& e, const UnivariateLaurent& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

void MultiLaurent::assign_sorted(std::vector<std::pair<Key, UnivariateLaurent>>&& terms) {
    t_.clear();
    for (auto& [k, c] : terms) t_.emplace_hint(t_.end(), std::move(k), std::move(c));
}

MultiLaurent& MultiLaurent::operator+=(const MultiLaurent& o) {
    widen(o.k_);
    if (o.k_ < k_) {
        MultiLaurent w = o;
        w.widen(k_);
        for (const auto& [e, c] : w.t_) add(e, c);
    } else {
        for (const auto& [e, c] : o.t_) add(e, c);
    }
    return *this;
}

MultiLaurent& MultiLaurent::operator-=(const MultiLaurent& o) {
    MultiLaurent n = o;
    for (auto& [e, c] : n.t_) c = -c;
    return *this += n;
}

MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b) {
    const int k = std::max(a.k_, b.k_);
    MultiLaurent x = a, y = b, out(k);
    x.widen(k);
    y.widen(k);
    for (const auto& [e, c] : x.t_)
        for (const auto& [f, d] : y.t_) {
            MultiLaurent::Key g(e.size());
            for (size_t i = 0; i < g.size(); ++i) g[i] = e[i] + f[i];
            out.add(g, c * d);
        }
    return out;
}

OperatorExpression OperatorExpression::identity() { return scalar(UnivariateLaurent(1)); }

OperatorExpression OperatorExpression::scalar(const UnivariateLaurent& c) {
    OperatorExpression e;
    if (!c.is_zero()) e.w_.push_back({c, {}});
    return e;
}

OperatorExpression OperatorExpression::mul(Var v, int index, int power) {
    OperatorExpression e;
    e.w_.push_back({UnivariateLaurent(1), {{false, v, index, power}}});
    return e;
}

OperatorExpression OperatorExpression::tau(Var v, int index, int power) {
    OperatorExpression e;
    e.w_.push_back({UnivariateLaurent(1), {{true, v, index, power}}});
    return e;
}

int OperatorExpression::max_index() const {
    int m = 0;
    for (const auto& w : w_)
        for (const auto& g : w.word) m = std::max(m, g.index);
    return m;
}

OperatorExpression& OperatorExpression::operator+=(const OperatorExpression& o) {
    for (const auto& w : o.w_) {
        auto it = std::find_if(w_.begin(), w_.end(), [&](const OpWord& x) { return x.word == w.word; });
        if (it == w_.end()) {
            w_.push_back(w);
        } else {
            it->coeff += w.coeff;
            if (it->coeff.is_zero()) w_.erase(it);
        }
    }
    return *this;
}

OperatorExpression& OperatorExpression::operator-=(const OperatorExpression& o) {
    return *this += o.scaled(UnivariateLaurent(-1));
}

OperatorExpression operator*(const OperatorExpression& a, const OperatorExpression& b) {
    OperatorExpression out;
    for (const auto& x : a.w_)
        for (const auto& y : b.w_) {
            OpWord w{x.coeff * y.coeff, x.word};
            w.word.insert(w.word.end(), y.word.begin(), y.word.end());
            OperatorExpression t;
            t.w_.push_back(std::move(w));
            out += t;
        }
    return out;
}

OperatorExpression OperatorExpression::scaled(const UnivariateLaurent& c) const {
    OperatorExpression out;
    if (c.is_zero()) return out;
    out.w_ = w_;
    for (auto& w : out.w_) w.coeff *= c;
    return out;
}

namespace {

std::string laurent_str(const UnivariateLaurent& p) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (e) os << "*q^" << e;
    }
    return first ? "0" : os.str();
}

}  // namespace

std::string OperatorExpression::str() const {
    if (w_.empty()) return "0";
    static const char* names = "xyu";
    std::ostringstream os;
    for (size_t i = 0; i < w_.size(); ++i) {
        if (i) os << " + ";
        const auto& w = w_[i];
        const bool unit = w.coeff == UnivariateLaurent(1);
        if (!unit || w.word.empty()) os << "(" << laurent_str(w.coeff) << ")";
        for (size_t j = 0; j < w.word.size(); ++j) {
            const auto& g = w.word[j];
            if (j || !unit) os << " · ";
            if (g.shift) os << "τ";
            os << names[static_cast<int>(g.var)] << g.index;
            if (g.power != 1) os << "^" << g.power;
        }
    }
    return os.str();
}

namespace {

// A word acts on x^E as coeff * q^{<lin, E>} x^{E + shift}.
struct CompiledWord {
    UnivariateLaurent coeff;
    std::vector<std::pair<int, int>> lin;
    std::vector<std::pair<int, int>> shift;
};

int slot(const Generator& g) { return 3 * (g.index - 1) + static_cast<int>(g.var); }

std::vector<CompiledWord> compile(const OperatorExpression& op) {
    std::map<std::pair<std::map<int, int>, std::map<int, int>>, UnivariateLaurent> merged;
    for (const auto& w : op.words()) {
        std::map<int, int> lin, shift;
        int kappa = 0;
        for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
            const int p = slot(*it);
            if (it->shift) {
                lin[p] += it->power;
                kappa += it->power * shift[p];
            } else {
                shift[p] += it->power;
            }
        }
        std::erase_if(lin, [](const auto& kv) { return kv.second == 0; });
        std::erase_if(shift, [](const auto& kv) { return kv.second == 0; });
        merged[{lin, shift}] += w.coeff.scaled(kappa, Int(1));
    }
    std::vector<CompiledWord> out;
    for (auto& [k, c] : merged) {
        if (c.is_zero()) continue;
        out.push_back({c, {k.first.begin(), k.first.end()}, {k.second.begin(), k.second.end()}});
    }
    return out;
}


// Dense Z[q] accumulator indexed from exponent lo.
struct DenseQ {
    int lo = 0;
    std::vector<Int> c;
    void add(const UnivariateLaurent& p, int shift, const Int& k) {
        if (p.is_zero()) return;
        const int a = p.terms().front().first + shift, b = p.terms().back().first + shift;
        if (c.empty()) {
            lo = a;
            c.resize(b - a + 1);
        } else if (a < lo) {
            c.insert(c.begin(), lo - a, Int(0));
            lo = a;
        }
        if (b - lo + 1 > static_cast<int>(c.size())) c.resize(b - lo + 1);
        for (const auto& [e, x] : p.terms()) {
            Int& dst = c[e + shift - lo];
            if (k.is_one()) dst += x;
            else dst += x * k;
        }
    }
    UnivariateLaurent take() const {
        std::vector<UnivariateLaurent::Term> t;
        for (size_t i = 0; i < c.size(); ++i)
            if (!c[i].is_zero()) t.push_back({lo + static_cast<int>(i), c[i]});
        return UnivariateLaurent::from_terms(std::move(t));
    }
};

UnivariateLaurent fold(const UnivariateLaurent& p, int period) {
    if (period <= 0) return p;
    return p.map_exponents([period](int e) { return ((e % period) + period) % period; });
}

MultiLaurent apply_compiled(const std::vector<CompiledWord>& op, const MultiLaurent& p, int indices, int period = 0) {
    MultiLaurent in = p;
    in.widen(indices);
    std::unordered_map<MultiLaurent::Key, DenseQ, MultiLaurent::KeyHash> acc;
    acc.reserve(in.size() * 2);
    MultiLaurent::Key f;
    for (const auto& [e, c] : in.terms()) {
        for (const auto& w : op) {
            int qe = 0;
            for (auto [pos, m] : w.lin) qe += m * e[pos];
            f = e;
            for (auto [pos, d] : w.shift) f[pos] += d;
            auto& dst = acc[f];
            for (const auto& [b, y] : w.coeff.terms()) dst.add(c, b + qe, y);
        }
    }
    MultiLaurent out(in.indices());
    std::vector<std::pair<MultiLaurent::Key, UnivariateLaurent>> sorted;
    sorted.reserve(acc.size());
    for (auto& [k, t] : acc) {
        UnivariateLaurent v = t.take();
        if (period > 0) v = fold(v, period);
        if (!v.is_zero()) sorted.emplace_back(k, std::move(v));
    }
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.assign_sorted(std::move(sorted));
    return out;
}

}  // namespace

MultiLaurent apply(const OperatorExpression& op, const MultiLaurent& p) {
    return apply_compiled(compile(op), p, std::max(op.max_index(), p.indices()));
}

OperatorExpression op_a(int sign, int j) {
    using OE = OperatorExpression;
    if (sign > 0)
        return (OE::mul(Var::U, j) - OE::mul(Var::Y, j) * OE::tau(Var::X, j, -1)) * OE::tau(Var::Y, j, -1);
    return (OE::tau(Var::Y, j) - OE::mul(Var::X, j, -1)) * OE::tau(Var::X, j, -1) * OE::tau(Var::U, j);
}

OperatorExpression op_b(int, int j) { return OperatorExpression::mul(Var::U, j, 2); }

OperatorExpression op_c(int sign, int j) {
    using OE = OperatorExpression;
    if (sign > 0) return OE::mul(Var::X, j) * OE::tau(Var::Y, j, -2) * OE::tau(Var::U, j, -1);
    return OE::mul(Var::Y, j, -1) * OE::tau(Var::X, j, -1) * OE::tau(Var::U, j);
}

OperatorMatrix deformed_burau(const BraidWord& beta) {
    const int n = beta.strands;
    OperatorMatrix rho(n, std::vector<OperatorExpression>(n));
    for (int i = 0; i < n; ++i) rho[i][i] = OperatorExpression::identity();
    for (size_t t = 0; t < beta.letters.size(); ++t) {
        const int letter = beta.letters[t], j = static_cast<int>(t) + 1;
        const int p = std::abs(letter) - 1, sign = letter > 0 ? 1 : -1;
        // Right multiplication by A_j only mixes columns p and p+1.
        std::array<std::array<OperatorExpression, 2>, 2> S;
        if (sign > 0) {
            S[0][0] = op_a(1, j);
            S[0][1] = op_b(1, j);
            S[1][0] = op_c(1, j);
        } else {
            S[0][1] = op_c(-1, j);
            S[1][0] = op_b(-1, j);
            S[1][1] = op_a(-1, j);
        }
        for (int i = 0; i < n; ++i) {
            OperatorExpression c0, c1;
            for (int l = 0; l < 2; ++l) {
                if (rho[i][p + l].is_zero()) continue;
                if (!S[l][0].is_zero()) c0 += rho[i][p + l] * S[l][0];
                if (!S[l][1].is_zero()) c1 += rho[i][p + l] * S[l][1];
            }
            rho[i][p] = std::move(c0);
            rho[i][p + 1] = std::move(c1);
        }
    }
    return rho;
}

OperatorMatrix reduced(const OperatorMatrix& M) {
    OperatorMatrix R;
    for (size_t i = 1; i < M.size(); ++i) R.emplace_back(M[i].begin() + 1, M[i].end());
    return R;
}

namespace {

int matrix_max_index(const OperatorMatrix& M) {
    int k = 0;
    for (const auto& row : M)
        for (const auto& e : row) k = std::max(k, e.max_index());
    return k;
}

void monomials_upto(int vars, int degree, std::vector<MultiLaurent::Key>& out) {
    MultiLaurent::Key e(vars, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == vars) {
            out.push_back(e);
            return;
        }
        for (int d = 0; d <= left; ++d) {
            e[pos] = d;
            rec(pos + 1, left - d);
        }
        e[pos] = 0;
    };
    rec(0, degree);
}

}  // namespace

CheckResult right_quantum_check(const OperatorMatrix& M, int max_degree) {
    const int k = matrix_max_index(M);
    const int m = static_cast<int>(M.size());
    std::vector<MultiLaurent::Key> monos;
    monomials_upto(3 * k, max_degree, monos);
    const UnivariateLaurent q = xpow(1), qi = xpow(-1);
    CheckResult res;
    auto same = [&](const OperatorExpression& lhs, const OperatorExpression& rhs) {
        const auto L = compile(lhs), R = compile(rhs);
        for (const auto& e : monos)
            if (apply_compiled(L, MultiLaurent::monomial(k, e), k) != apply_compiled(R, MultiLaurent::monomial(k, e), k))
                return false;
        return true;
    };
    for (int i = 0; i < m; ++i)
        for (int i2 = i + 1; i2 < m; ++i2)
            for (int j = 0; j < m; ++j)
                for (int j2 = j + 1; j2 < m; ++j2) {
                    const auto &a = M[i][j], &b = M[i][j2], &c = M[i2][j], &d = M[i2][j2];
                    std::string which;
                    if (!same(a * c, (c * a).scaled(q))) which = "ac = q ca";
                    else if (!same(b * d, (d * b).scaled(q))) which = "bd = q db";
                    else if (!same(a * d, d * a + (c * b).scaled(q) - (b * c).scaled(qi))) which = "ad = da + q cb - q^-1 bc";
                    if (!which.empty()) {
                        res.ok = false;
                        res.detail = which + " fails on rows " + std::to_string(i + 1) + "," + std::to_string(i2 + 1) +
                                     " columns " + std::to_string(j + 1) + "," + std::to_string(j2 + 1);
                        return res;
                    }
                }
    res.detail = "right quantum on " + std::to_string(monos.size()) + " monomials";
    return res;
}

OperatorExpression qdet(const OperatorMatrix& M) {
    const int m = static_cast<int>(M.size());
    std::vector<int> pi(m);
    for (int i = 0; i < m; ++i) pi[i] = i;
    OperatorExpression out;
    do {
        int inv = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) inv += pi[i] > pi[j];
        OperatorExpression term = OperatorExpression::scalar(UnivariateLaurent::monomial(inv, Int(inv % 2 ? -1 : 1)));
        for (int col = 0; col < m && !term.is_zero(); ++col) {
            const auto& e = M[pi[col]][col];
            term = e.is_zero() ? OperatorExpression() : term * e;
        }
        out += term;
    } while (std::next_permutation(pi.begin(), pi.end()));
    return out;
}

namespace {

OperatorMatrix submatrix(const OperatorMatrix& M, unsigned mask) {
    std::vector<int> idx;
    for (int i = 0; i < static_cast<int>(M.size()); ++i)
        if (mask & (1u << i)) idx.push_back(i);
    OperatorMatrix S(idx.size(), std::vector<OperatorExpression>(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < idx.size(); ++j) S[i][j] = M[idx[i]][idx[j]];
    return S;
}

// Pieces of C graded by |J|.
std::vector<OperatorExpression> graded_c(const OperatorMatrix& M) {
    const int m = static_cast<int>(M.size());
    std::vector<OperatorExpression> parts(m + 1);
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        const int g = __builtin_popcount(mask);
        const OperatorExpression d = qdet(submatrix(M, mask));
        parts[g] += d.scaled(UnivariateLaurent(g % 2 ? 1 : -1));
    }
    return parts;
}

OperatorMatrix scaled(const OperatorMatrix& M, const UnivariateLaurent& c) {
    OperatorMatrix R = M;
    for (auto& row : R)
        for (auto& e : row) e = e.scaled(c);
    return R;
}

}  // namespace

OperatorExpression c_operator(const OperatorMatrix& M) {
    OperatorExpression C;
    for (const auto& p : graded_c(M)) C += p;
    return C;
}

OperatorExpression one_minus_C(const OperatorMatrix& M) { return OperatorExpression::identity() - c_operator(M); }

BivariateLaurent evaluate_E(const MultiLaurent& p) {
    std::map<int, UnivariateLaurent> by_s;
    for (const auto& [e, c] : p.terms()) {
        int s = 0;
        for (size_t i = 0; i < e.size(); i += 3) s += e[i] + e[i + 1];
        by_s[s] += c;
    }
    std::vector<BivariateLaurent::Term> t;
    for (const auto& [s, c] : by_s)
        for (const auto& [eq, k] : c.terms()) t.push_back({{eq, s}, k});
    return BivariateLaurent::from_terms(std::move(t));
}

QdetSeries qdet_series(const BraidWord& beta, int cutoff, int period) {
    require_knot(beta);
    QdetSeries out;
    out.degree_cutoff = cutoff;
    const int k = static_cast<int>(beta.letters.size());
    const OperatorMatrix Mp = scaled(reduced(deformed_burau(beta)), xpow(1));
    const auto parts = graded_c(Mp);
    std::vector<std::vector<CompiledWord>> compiled;
    for (const auto& p : parts) compiled.push_back(compile(p));
    std::vector<MultiLaurent> p{MultiLaurent::constant(k, UnivariateLaurent(1))};
    out.value = evaluate_E(p[0]);
    out.by_degree.push_back(out.value);
    for (int d = 1; d <= cutoff; ++d) {
        MultiLaurent pd(k);
        for (int g = 1; g < static_cast<int>(compiled.size()) && g <= d; ++g)
            if (!compiled[g].empty()) pd += apply_compiled(compiled[g], p[d - g], k, period);
        const BivariateLaurent v = evaluate_E(pd);
        out.by_degree.push_back(v);
        if (!v.is_zero()) out.last_degree = d;
        out.value += v;
        p.push_back(std::move(pd));
    }
    return out;
}

namespace {

int prefactor_exponent(const BraidWord& beta) {
    const int t = beta.writhe() - beta.strands + 1;
    if (t % 2) throw std::logic_error("w - m + 1 is odd for a knot closure braid");
    return t / 2;
}

// (q, s) -> (q^-2, s^-2)
BivariateLaurent to_trace_variables(const BivariateLaurent& p) { return substitute(p, -2, -2); }

}  // namespace

UnivariateLaurent alexander_factor(const BraidWord& beta) {
    const OperatorMatrix R = reduced(deformed_burau(beta));
    const int d = static_cast<int>(R.size());
    const int k = static_cast<int>(beta.letters.size());
    const MultiLaurent one = MultiLaurent::constant(k, UnivariateLaurent(1));
    // At q = 1 every operator is multiplication by its value on 1.
    std::vector<std::vector<UnivariateLaurent>> A(d, std::vector<UnivariateLaurent>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            A[i][j] = i == j ? UnivariateLaurent(1) : UnivariateLaurent();
            if (!R[i][j].is_zero()) A[i][j] -= specialize_q1(evaluate_E(apply(R[i][j], one)));
        }
    std::map<unsigned, UnivariateLaurent> memo;
    std::function<UnivariateLaurent(unsigned)> det = [&](unsigned used) -> UnivariateLaurent {
        const int row = __builtin_popcount(used);
        if (row == d) return UnivariateLaurent(1);
        if (auto it = memo.find(used); it != memo.end()) return it->second;
        UnivariateLaurent acc;
        int sign = 0;
        for (int j = 0; j < d; ++j) {
            if (used & (1u << j)) continue;
            if (!A[row][j].is_zero()) {
                const UnivariateLaurent t = A[row][j] * det(used | (1u << j));
                if (sign % 2) acc -= t; else acc += t;
            }
            ++sign;
        }
        return memo.emplace(used, acc).first->second;
    };
    return det(0);
}

TruncatedSeries f_infinity_qdet(const BraidWord& beta, int B, bool normalize, int cutoff) {
    require_knot(beta);
    const int m = beta.strands;
    const int D = cutoff >= 0 ? cutoff : B * (m - 1);
    const QdetSeries S = qdet_series(beta, D);
    TruncatedSeries out;
    out.value = to_trace_variables(S.value.scaled({0, prefactor_exponent(beta)}, Int(1)));
    out.state_bound = B;
    out.writhe = beta.writhe();
    out.strands = m;
    out.normalized = normalize;
    if (!normalize) out.value = out.value.scaled({0, out.writhe}, Int(1));
    return out;
}

CheckResult qdet_tail_check(const BraidWord& beta, int B, int extra) {
    require_knot(beta);
    const int D = B * (beta.strands - 1);
    const QdetSeries S = qdet_series(beta, D + extra);
    CheckResult res;
    for (int d = D + 1; d <= D + extra; ++d) {
        const BivariateLaurent v = to_trace_variables(S.by_degree[d]);
        for (int N = 0; N <= B; ++N)
            if (!specialize_s(v, N).is_zero()) {
                res.ok = false;
                res.detail = "degree " + std::to_string(d) + " survives at s = q^" + std::to_string(N);
                return res;
            }
        if (!v.is_zero() && !divisible(v, brace_alpha(0, B + 1))) {
            res.ok = false;
            res.detail = "degree " + std::to_string(d) + " not divisible by {alpha; " + std::to_string(B + 1) + "}";
            return res;
        }
    }
    res.detail = "degrees " + std::to_string(D + 1) + ".." + std::to_string(D + extra) + " lie in the filtration";
    return res;
}

AdoPolynomial ado_qdet(const BraidWord& beta, int r) {
    require_knot(beta);
    const int m = beta.strands, k = static_cast<int>(beta.letters.size()), w = beta.writhe();
    const int order = 2 * r, R = 2 * r;
    const int h = prefactor_exponent(beta);
    // F_r(s^{-h} A) in the operator variable, then s -> s^-2.
    CyclotomicLaurent alex(order);
    const UnivariateLaurent A = alexander_factor(beta);
    for (const auto& [e, c] : A.terms())
        alex += CyclotomicLaurent::monomial(-2 * r * (e - h), CyclotomicScalar(order, c));
    // Seifert-genus window for the braid closure.
    const int M = (r - 1) * std::max(0, k - m + 1);
    int e = std::max(1, (M + r) / r);
    for (int attempt = 0; attempt < 8; ++attempt, ++e) {
        const int D = std::max(0, (e + 1) * (m - 1) * r - 1);
        const QdetSeries S = qdet_series(beta, D, r);
        const CyclotomicLaurent series = specialize_q_root(to_trace_variables(S.value), r);
        const CyclotomicLaurent P = (alex * series).scaled(-2 * h, CyclotomicScalar(order, Int(1)));
        const CyclotomicLaurent a = frobenius_residue(P, R, e, -r * e);
        const CyclotomicLaurent b = frobenius_residue(P, R, e + 1, -r * (e + 1));
        if (a == b) {
            AdoPolynomial out;
            out.r = r;
            out.value = a;
            out.writhe = w;
            out.normalized = true;
            return out;
        }
    }
    throw std::runtime_error("ADO reconstruction did not stabilize");
}

}  // namespace finf
