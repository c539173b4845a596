#pragma once

#include "finf/traces.hpp"

#include <map>
#include <string>
#include <vector>

namespace finf {

// Laurent polynomial in x_j, y_j, u_j (j = 1..k) with coefficients in Z[q^{+-1}].
// Exponent vectors are laid out as (x_1, y_1, u_1, x_2, ...).
class MultiLaurent {
public:
    using Key = std::vector<int>;
    struct KeyHash {
        size_t operator()(const Key& k) const noexcept {
            size_t h = 1469598103934665603ull;
            for (int v : k) h = (h ^ static_cast<size_t>(v + 0x9e37)) * 1099511628211ull;
            return h;
        }
    };
    using Map = std::map<Key, UnivariateLaurent>;

    MultiLaurent() = default;
    explicit MultiLaurent(int indices) : k_(indices) {}
    static MultiLaurent constant(int indices, const UnivariateLaurent& c);
    static MultiLaurent monomial(int indices, Key e, const UnivariateLaurent& c = UnivariateLaurent(1));

    int indices() const { return k_; }
    const Map& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }

    void add(const Key& e, const UnivariateLaurent& c);
    // Replace the terms by nonzero, strictly increasing (key, coefficient) pairs.
    void assign_sorted(std::vector<std::pair<Key, UnivariateLaurent>>&& terms);
    MultiLaurent& operator+=(const MultiLaurent& o);
    MultiLaurent& operator-=(const MultiLaurent& o);
    friend MultiLaurent operator+(MultiLaurent a, const MultiLaurent& b) { return a += b; }
    friend MultiLaurent operator-(MultiLaurent a, const MultiLaurent& b) { return a -= b; }
    friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b);
    friend bool operator==(const MultiLaurent& a, const MultiLaurent& b) { return a.t_ == b.t_; }
    friend bool operator!=(const MultiLaurent& a, const MultiLaurent& b) { return !(a == b); }

    // Grow to at least `indices` crossing indices.
    void widen(int indices);

private:
    int k_ = 0;
    Map t_;
};

enum class Var { X = 0, Y = 1, U = 2 };

// x^_j^e (multiplication) or tau_{x_j}^e (q-shift), likewise for y, u. Index j is 1-based.
struct Generator {
    bool shift;
    Var var;
    int index;
    int power;
    friend bool operator==(const Generator&, const Generator&) = default;
};

struct OpWord {
    UnivariateLaurent coeff;
    std::vector<Generator> word;  // leftmost acts last
};

class OperatorExpression {
public:
    OperatorExpression() = default;
    static OperatorExpression identity();
    static OperatorExpression scalar(const UnivariateLaurent& c);
    static OperatorExpression mul(Var v, int index, int power = 1);
    static OperatorExpression tau(Var v, int index, int power = 1);

    const std::vector<OpWord>& words() const { return w_; }
    bool is_zero() const { return w_.empty(); }
    int max_index() const;

    OperatorExpression& operator+=(const OperatorExpression& o);
    OperatorExpression& operator-=(const OperatorExpression& o);
    friend OperatorExpression operator+(OperatorExpression a, const OperatorExpression& b) { return a += b; }
    friend OperatorExpression operator-(OperatorExpression a, const OperatorExpression& b) { return a -= b; }
    // Composition: (A * B)(f) = A(B(f)).
    friend OperatorExpression operator*(const OperatorExpression& a, const OperatorExpression& b);
    OperatorExpression scaled(const UnivariateLaurent& c) const;

    // Words joined as "u1^2 · τy1^-1 · x2".
    std::string str() const;

private:
    std::vector<OpWord> w_;
};

MultiLaurent apply(const OperatorExpression& op, const MultiLaurent& p);

// Crossing operators at index j.
OperatorExpression op_a(int sign, int j);
OperatorExpression op_b(int sign, int j);
OperatorExpression op_c(int sign, int j);

using OperatorMatrix = std::vector<std::vector<OperatorExpression>>;

// Product of Id + S_{j, eps_j} blocks in word order, crossing j = position in the word.
OperatorMatrix deformed_burau(const BraidWord& beta);
// Drop the first row and column.
OperatorMatrix reduced(const OperatorMatrix& M);

// Right-quantum relations on every 2x2 submatrix, applied to all monomials of total
// degree <= max_degree in the touched variables.
CheckResult right_quantum_check(const OperatorMatrix& M, int max_degree);

OperatorExpression qdet(const OperatorMatrix& M);
// Sum over nonempty J of (-1)^{|J|-1} det_q(M_J); one_minus_C returns 1 - C.
OperatorExpression c_operator(const OperatorMatrix& M);
OperatorExpression one_minus_C(const OperatorMatrix& M);

// u_j -> 1, x_j, y_j -> s.
BivariateLaurent evaluate_E(const MultiLaurent& p);

struct QdetSeries {
    BivariateLaurent value;  // in the operator variables, before alignment
    int degree_cutoff = 0;
    int last_degree = 0;  // last degree with a nonzero contribution
    std::vector<BivariateLaurent> by_degree;
};

// Sum_{d <= cutoff} of the degree-d part of 1/(1 - C) applied to 1, with C built from q rho'(beta).
// With period > 0, q-exponents are reduced modulo period throughout (q a root of unity).
QdetSeries qdet_series(const BraidWord& beta, int cutoff, int period = 0);

// E(det(Id - rho'(beta))) at q = 1, in the operator variable s.
UnivariateLaurent alexander_factor(const BraidWord& beta);

// s^{(w-m+1)/2} times the series cut at total degree B (m - 1) (or `cutoff` when >= 0),
// moved to the trace conventions by (q, s) -> (q^-2, s^-2). normalize=false multiplies by s^w.
TruncatedSeries f_infinity_qdet(const BraidWord& beta, int B, bool normalize = true, int cutoff = -1);

// Degree-d parts with B (m - 1) < d <= B (m - 1) + extra vanish at s = q^N for N <= B and are
// divisible by {alpha; B+1}.
CheckResult qdet_tail_check(const BraidWord& beta, int B, int extra);

// Alexander factor with s -> s^r times the series at q = zeta_{2r}, reduced modulo
// (1 - s^{2r})^e into a symmetric window; e grows until two consecutive precisions agree.
AdoPolynomial ado_qdet(const BraidWord& beta, int r);

}  // namespace finf
