#pragma once

#include "finf/verma.hpp"

#include <stdexcept>

namespace finf {

class NotAKnotError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Throws NotAKnotError naming the cycle structure of the permutation.
void require_knot(const BraidWord& beta);
std::string cycle_structure(const BraidWord& beta);

struct TruncatedSeries {
    BivariateLaurent value;
    int state_bound = 0;
    int writhe = 0;
    int strands = 1;
    bool normalized = false;
};

struct AdoPolynomial {
    int r = 1;
    CyclotomicLaurent value;
    int writhe = 0;
    bool normalized = false;
};

// Sum over closure labels (0, k_2..k_n) with every k_i <= B of the diagonal entries of
// (1 (x) K^p (x) ... (x) K^p) phi_n(beta). Raw, no framing correction.
TruncatedSeries partial_trace(const BraidWord& beta, int pivot_exponent, int B);

// Same sum with the roles of the end factors swapped: the last factor is held at v_0 and
// factors 1..n-1 are traced.
BivariateLaurent partial_trace_last_open(const BraidWord& beta, int pivot_exponent, int B);

// Normalized output is multiplied by s^{-w}.
TruncatedSeries f_infinity(const BraidWord& beta, int B, bool normalize);

// s = q^N on the (N+1)-dimensional quotient; normalized by q^{-N w}.
UnivariateLaurent colored_jones(const BraidWord& beta, int N, bool normalize = true);

// q = zeta_{2r}, labels < r, pivot K^{1-r}; normalized by s^{(r-1) w}.
AdoPolynomial ado(const BraidWord& beta, int r, bool normalize = true);

// Symmetric representative with A(1) = 1, as a Laurent polynomial in t.
UnivariateLaurent alexander(const BraidWord& beta);
// det(I - P psi(beta)) in Z[s^{+-1}] before normalization.
UnivariateLaurent reduced_burau_determinant(const BraidWord& beta);

// Partial trace in the dual multi-arc basis; equal to the raw f_infinity value.
TruncatedSeries homological_form(const BraidWord& beta, int B);

struct CurlScalars {
    TruncatedSeries pos;
    TruncatedSeries neg;
};
CurlScalars curl_scalars(int B);

// ADO_r(A) = ADO_r(A^{-1} zeta^{-2}) after framing normalization.
CheckResult verify_symmetry_ado(const BraidWord& beta, int r);
// ADO_r(zeta^N) = J_N(zeta) for 1 <= N < r, plus the r-part factorization for m <= max_m.
CheckResult verify_factorization(const BraidWord& beta, int r, int max_m = 2);
// (q=1 raw truncation) * A(s^2) - s^c divisible by (s - s^{-1})^{ceil(B/2)}.
CheckResult verify_mmr(const BraidWord& beta, int B);

}  // namespace finf
