#pragma once

#include "fracbody/vec.hpp"

#include <array>

namespace fracbody {

/// Invertible affine map x -> A x + b on R^n, n <= 3. The matrix is stored
/// row-major in a 3x3 block with the inactive part set to the identity so
/// determinants and inverses can be computed uniformly.
///
/// Construction rejects singular matrices and condition numbers above 1e6;
/// past that point box-truncation error dominates anything the map is used
/// to measure.
class AffineMap {
  public:
    /// Identity on R^n.
    explicit AffineMap(int n);

    /// matrix is n*n row-major, translation has n entries (may be null for 0).
    AffineMap(int n, const double* matrix, const double* translation);

    /// Rescales the matrix by |det|^(-1/n) so that |det| = 1
    /// (volume-preserving; a reflection keeps det = -1).
    static AffineMap sl_normalized(int n, const double* matrix,
                                   const double* translation = nullptr);

    int dim() const { return n_; }
    double det() const { return det_; }
    double condition_number() const { return cond_; }
    const Vec& translation() const { return translation_; }
    double entry(int i, int j) const { return m_[i][j]; }

    Vec apply(const Vec& x) const;          ///< A x + b
    Vec apply_inverse(const Vec& x) const;  ///< A^-1 (x - b)
    Vec apply_linear(const Vec& x) const;   ///< A x
    Vec apply_inverse_linear(const Vec& x) const;  ///< A^-1 x
    /// A^-T x; this is how gradients transport through f o phi^-1.
    Vec apply_inverse_transpose(const Vec& x) const;

    bool is_identity() const;

    static constexpr double kMaxCondition = 1e6;

  private:
    int n_;
    std::array<std::array<double, 3>, 3> m_;
    std::array<std::array<double, 3>, 3> inv_;
    Vec translation_;
    double det_;
    double cond_;

    void finalize();
};

}  // namespace fracbody
