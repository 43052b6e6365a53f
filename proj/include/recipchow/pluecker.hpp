#pragma once

#include <vector>

#include "recipchow/matrix.hpp"
#include "recipchow/subsets.hpp"

namespace recipchow {

/// Coefficients of a decomposable d-vector on [n], indexed by the
/// lexicographically ranked d-subsets.
struct PlueckerVector {
    int n = 0;
    int d = 0;
    std::vector<BigRat> coeffs;

    const BigRat& at_rank(std::size_t r) const { return coeffs[r]; }
    const BigRat& at_mask(std::uint32_t mask) const {
        return coeffs[SubsetTable::get(n, d).rank(mask)];
    }
    bool is_zero() const;

    /// Support as subset masks.
    std::vector<std::uint32_t> support() const;
    bool full_support() const;

    /// Scaled so the first nonzero coordinate is positive; display only.
    PlueckerVector display_normalized() const;
};

/// Maximal minors of a full-row-rank d x n matrix, in lex subset order.
/// Throws input_error when the rank is below d.
PlueckerVector pluecker_from_matrix(const RatMatrix& a);

struct Orthocomplement {
    RatMatrix mat;            // (n-d) x n, rows span the kernel
    PlueckerVector plucker;   // of that row span
};

/// Reduced kernel basis of a full-row-rank matrix, together with its
/// coordinates. Verifies the complementary-minor sign identity up to one
/// global scalar before returning.
Orthocomplement orthocomplement(const RatMatrix& a);

/// Sum over d-subsets of p_I(L) * p_I(M-perp); zero exactly when the two
/// spaces intersect nontrivially.
BigRat pairing_transversal(const PlueckerVector& p_l, const PlueckerVector& p_m_perp);

/// Coefficientwise dual: out_I = (-1)^(s(I)) * in_{[n] \ I}. Sends the
/// coordinates of a space to the coordinates of its orthogonal complement
/// up to one global scalar.
PlueckerVector dual_plucker(const PlueckerVector& p);

/// Multiplies coordinatewise by the d-fold products of w.
PlueckerVector diag_scale(const PlueckerVector& p, const std::vector<BigRat>& w);

/// Wedge of a k-vector (coefficients over k-subsets of [n]) with a vector;
/// returns coefficients over (k+1)-subsets.
std::vector<BigRat> wedge_with_vector(int n, int k, const std::vector<BigRat>& coeffs,
                                      const std::vector<BigRat>& w);

/// Coefficients of the linear functional induced on d-vectors by an
/// (n-d)-vector beta: out_I = coefficient of the top form in e_I ^ beta.
std::vector<BigRat> functional_from_wedge(int n, int d, const std::vector<BigRat>& beta);

} // namespace recipchow
