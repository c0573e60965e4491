#pragma once

#include <span>
#include <vector>

#include "noisecube/cube.hpp"

namespace noisecube {

/// Symmetrized boundary data: k, lambda, and the profile y_1..y_k >= 0.
struct SymmetricData {
    int k;
    double lambda;
    std::vector<double> y;  // y[s-1] = y_s

    SymmetricData(int k_, double lambda_, std::vector<double> y_);
};

/// The recursion table x^r_s for 0 <= r < s <= k:
///   x^0_s = y_s,   x^r_s = lambda * x^{r-1}_s + (1-lambda) * x^{r-1}_{s-1}.
/// Out-of-range reads are programming errors (asserted), never silent zeros.
class XTable {
   public:
    XTable(int k, std::vector<double> entries);
    double at(int r, int s) const;  // 0 <= r < s <= k
    int k() const { return k_; }

   private:
    int k_;
    std::vector<double> entries_;  // row r holds x^r_{r+1..k}
};

XTable x_table(const SymmetricData& data);

/// Closed form of x^r_t for unit data e_s:
///   C(r, t-s) lambda^{r-(t-s)} (1-lambda)^{t-s} for s <= t <= s+r, else 0.
double x_closed_form_unit(int k, double lambda, int s, int r, int t);

/// Binomial tail Lambda(k, s, lambda) = 1 - sum_{j<s} C(k,j) lambda^j
/// (1-lambda)^{k-j} = P[Binomial(k, lambda) >= s]. Decreasing in s.
double lambda_coeff(int k, int s, double lambda);

/// V(e_s), evaluated through both closed forms
///   lambda^s sum_{m=0}^{k-s} C(s+m-1, m) (1-lambda)^m
///   1 - sum_{j<s} C(k,j) lambda^j (1-lambda)^{k-j}
/// which are asserted equal to 1e-12 relative.
double unit_value(int k, int s, double lambda);

/// Value of the symmetric solution, lambda * sum_{t<k} x^t_{t+1}; asserted
/// equal (1e-10) to the linear expansion sum_s y_s * V(e_s).
double symmetric_value(const SymmetricData& data);

/// The symmetric assignment x-bar^R_{S,i} with r = |R n S|, s = |S|:
/// lambda * x^{r-1}_s when i in R, x^r_s otherwise. Requires i in S.
double sym_assignment(const SymmetricData& data, mask_t r_set, mask_t s_set,
                      int i);

/// Path sum sum_i x-bar^R_{{tau(1..i)}, tau(i)}, asserted equal (1e-12) to
/// the closed form sum_{j<=k-r} y_j + lambda sum_{t<r} x^t_{k-r+t+1};
/// independent of the ordering tau.
double sym_path_value(const SymmetricData& data, mask_t r_set,
                      std::span<const int> tau);

/// S[mu]^r_{[k]}(m) = sum_{j<=m-r} y_j + lambda sum_{t<r} x^t_{m-r+t+1},
/// for 0 <= r <= m <= k.
double sym_mu(const SymmetricData& data, int m, int r);

/// Weights w_1..w_{n-1} of the noisy chain-rule bound, evaluated through
/// three routes asserted equal to 1e-10:
///   (lambda n - s) + sum_{j<s} sum_{t<=j} C(n,t) lambda^t (1-lambda)^{n-t}
///   lambda * sum_{k=s}^{n-1} Lambda(k, s, lambda)
///   sum_{k=s+1}^{n} (k-s) C(n,k) lambda^k (1-lambda)^{n-k}
std::vector<double> w_weights(int n, double lambda);

/// The closed-form upper bound on noisy mutual information,
/// sum_s Lambda(k, s, lambda) * Y(A, m, s), where Y(A, m, s) averages
/// Z_{S;i,m} over (s-1)-subsets S of A and i in A \ S.
double noisy_mi_upper_bound(const CubeFunction& f, mask_t a, int m,
                            const NoiseParam& noise);

/// Exact C(n, k) as a double; 64-bit integer arithmetic up to n = 60,
/// log-space beyond.
double binomial(int n, int k);

}  // namespace noisecube
