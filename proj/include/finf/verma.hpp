#pragma once

#include "finf/braid.hpp"
#include "finf/rings.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace finf {

using Composition = std::vector<int>;

// All compositions of m into n non-negative parts, lexicographically decreasing in the first part.
std::vector<Composition> compositions(int n, int m);
// Compositions with every part <= cap.
std::vector<Composition> bounded_compositions(int n, int m, int cap);

// Actions on the Verma module basis v_j.
struct ModuleTerm {
    BivariateLaurent coeff;
    int index;  // -1 when the result is zero
};
ModuleTerm act_K(int j, int power = 1);
ModuleTerm act_E(int j);
ModuleTerm act_F(int n, int j);  // divided power F^{(n)}

// R-matrix terms at a crossing. a is the incoming label of the strand that gains i
// (F side), b the label of the strand that loses i (E side); i <= b.
//   positive: R(v_b (x) v_a) = sum_i c v_{a+i} (x) v_{b-i}
//   negative: R^{-1}(v_a (x) v_b) = sum_i c v_{b-i} (x) v_{a+i}
struct CrossingTerm {
    int i;
    BivariateLaurent coeff;
    int a_out;  // a + i
    int b_out;  // b - i
};
std::vector<CrossingTerm> crossing_terms(int sign, int a, int b, int bound);
const BivariateLaurent& crossing_coeff(int sign, int a, int b, int i);

// Coefficient models for the braid action; each fixes the coefficient ring.
struct GenericModel {
    using Coeff = BivariateLaurent;
    const Coeff& crossing(int sign, int a, int b, int i) const { return crossing_coeff(sign, a, b, i); }
    bool label_ok(int) const { return true; }
    Coeff one() const { return Coeff(1); }
};

// s = q^N on the finite-dimensional quotient; labels above N vanish.
class SpecializedModel {
public:
    using Coeff = UnivariateLaurent;
    explicit SpecializedModel(int N) : N_(N) {}
    const Coeff& crossing(int sign, int a, int b, int i) const;
    bool label_ok(int l) const { return l <= N_; }
    Coeff one() const { return Coeff(1); }

private:
    int N_;
    mutable std::mutex mu_;
    mutable std::map<std::tuple<int, int, int, int>, Coeff> cache_;
};

// q = 1; coefficients in Z[s^{+-1}] stored as univariate in s.
class ClassicalModel {
public:
    using Coeff = UnivariateLaurent;
    const Coeff& crossing(int sign, int a, int b, int i) const;
    bool label_ok(int) const { return true; }
    Coeff one() const { return Coeff(1); }

private:
    mutable std::mutex mu_;
    mutable std::map<std::tuple<int, int, int, int>, Coeff> cache_;
};

// q = exp(pi i / r); optionally restricted to labels < r.
class RootModel {
public:
    using Coeff = CyclotomicLaurent;
    RootModel(int r, bool restrict_labels) : r_(r), restrict_(restrict_labels) {}
    const Coeff& crossing(int sign, int a, int b, int i) const;
    bool label_ok(int l) const { return !restrict_ || l < r_; }
    Coeff one() const { return Coeff(CyclotomicScalar(2 * r_, Int(1))); }
    int r() const { return r_; }

private:
    int r_;
    bool restrict_;
    mutable std::mutex mu_;
    mutable std::map<std::tuple<int, int, int, int>, Coeff> cache_;
};

template <class T>
using SparseVector = std::map<Composition, T>;

template <class T>
void accumulate(SparseVector<T>& v, const Composition& c, const T& x) {
    if (x.is_zero()) return;
    auto it = v.find(c);
    if (it == v.end()) {
        v.emplace(c, x);
        return;
    }
    it->second += x;
    if (it->second.is_zero()) v.erase(it);
}

// Action of one generator on a vector.
template <class Model>
SparseVector<typename Model::Coeff> apply_letter(const Model& model, int letter,
                                                 const SparseVector<typename Model::Coeff>& in) {
    using T = typename Model::Coeff;
    SparseVector<T> out;
    const int p = (letter > 0 ? letter : -letter) - 1;
    for (const auto& [comp, c] : in) {
        const int x = comp[p], y = comp[p + 1];
        Composition next = comp;
        // Positive: the right strand carries a; negative: the left strand does.
        const int a = letter > 0 ? y : x, b = letter > 0 ? x : y;
        const int sign = letter > 0 ? 1 : -1;
        for (int i = 0; i <= b; ++i) {
            if (!model.label_ok(a + i)) break;
            const T& k = model.crossing(sign, a, b, i);
            if (k.is_zero()) continue;
            if (letter > 0) {
                next[p] = a + i;
                next[p + 1] = b - i;
            } else {
                next[p] = b - i;
                next[p + 1] = a + i;
            }
            accumulate(out, next, c * k);
        }
    }
    return out;
}

// phi(beta) v: the last letter acts first.
template <class Model>
SparseVector<typename Model::Coeff> apply_braid(const Model& model, const BraidWord& beta,
                                                SparseVector<typename Model::Coeff> v) {
    for (auto it = beta.letters.rbegin(); it != beta.letters.rend(); ++it) v = apply_letter(model, *it, v);
    return v;
}

// Dense matrix over compositions; entries[row][col], columns are images of basis vectors.
template <class T>
struct BlockMatrix {
    std::vector<Composition> basis;
    std::vector<std::vector<T>> entries;

    size_t index_of(const Composition& c) const;
    friend bool operator==(const BlockMatrix& a, const BlockMatrix& b) {
        return a.basis == b.basis && a.entries == b.entries;
    }
};

template <class T>
size_t BlockMatrix<T>::index_of(const Composition& c) const {
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == c) return i;
    return basis.size();
}

template <class Model>
BlockMatrix<typename Model::Coeff> block_of(const Model& model, const BraidWord& beta,
                                            std::vector<Composition> basis) {
    using T = typename Model::Coeff;
    BlockMatrix<T> M;
    M.basis = std::move(basis);
    M.entries.assign(M.basis.size(), std::vector<T>(M.basis.size()));
    for (size_t col = 0; col < M.basis.size(); ++col) {
        SparseVector<T> v;
        v.emplace(M.basis[col], model.one());
        for (const auto& [comp, c] : apply_braid(model, beta, std::move(v))) {
            size_t row = M.index_of(comp);
            if (row < M.basis.size()) M.entries[row][col] = c;
        }
    }
    return M;
}

using WeightBlockMatrix = BlockMatrix<BivariateLaurent>;

// Exact restriction of phi_n(beta) to the weight-m block; cached by (word, m).
const WeightBlockMatrix& braid_block(const BraidWord& beta, int m);

// Classical Burau-type matrix at q = 1 on the weight-1 block, in Z[s^{+-1}].
using SMatrix = std::vector<std::vector<UnivariateLaurent>>;
SMatrix sym_burau(const BraidWord& beta);
// Symmetric power in the divided-power basis w_j = u_j / j!, indexed by compositions(n, m).
BlockMatrix<UnivariateLaurent> sym_power(const SMatrix& M, int m);

// Block of phi_n(beta) at q = zeta_{2r} on vectors v_{i + r j} with sum(j) = m,
// projected back to the same r-part. Basis entries are the labels i_k + r j_k.
BlockMatrix<CyclotomicLaurent> rpart_block(const BraidWord& beta, int r, int m);

struct CheckResult {
    bool ok = true;
    std::string detail;
};

// Compares the r-part block against (r-part-0 block) (x) (q=1 block with s -> s^r).
CheckResult rpart_factorization_check(const BraidWord& beta, int r, int m);
// V^N / S_N against V^{-N-2} on the first `depth` basis vectors.
CheckResult quotient_module_check(int N, int depth);

}  // namespace finf
