#pragma once

#include <vector>

#include "aztec/bigcount.hpp"

namespace aztec {

// Which of the four studied matrices a Hankel matrix was built as.
// H1/G1: offset 1 over the large/small Schroeder numbers; H0/G0: offset 0.
enum class HankelKind { H1, G1, H0, G0, Custom };

// Square matrix constant along anti-diagonals: entry(i, j) = seq[i + j + offset]
// for 0-based i, j. Offset 1 puts seq[1] at the top-left, offset 0 puts seq[0]
// there. Immutable after construction.
class HankelMatrix {
 public:
  HankelMatrix(std::vector<BigCount> entries, int order, int offset,
               HankelKind kind = HankelKind::Custom);

  int order() const { return order_; }
  int offset() const { return offset_; }
  HankelKind kind() const { return kind_; }
  const BigCount& at(int i, int j) const;  // 0-based
  const std::vector<BigCount>& entries() const { return entries_; }

 private:
  int order_;
  int offset_;
  HankelKind kind_;
  std::vector<BigCount> entries_;  // row-major order_ x order_
};

// Builds the order-n matrix from a sequence. seq must provide indices
// offset .. 2n-2+offset; shorter input throws InsufficientTermsError.
HankelMatrix build_hankel(const std::vector<BigCount>& seq, int offset, int n,
                          HankelKind kind = HankelKind::Custom);

// The four named matrices directly: H1/H0 over r, G1/G0 over s, at order n.
HankelMatrix build_hankel(HankelKind kind, int n);

// Exact determinant of a row-major n x n integer matrix by fraction-free
// (Bareiss) elimination: every intermediate is an exact integer and every
// division is exact. Zero pivots are handled by a sign-flipping row swap; a
// fully zero column makes the determinant 0.
BigCount determinant(std::vector<BigCount> m, int n);
BigCount determinant(const HankelMatrix& m);

// 2^{n(n+1)/2} for H1, 2^{n(n-1)/2} for G1, H0 and G0.
BigCount closed_form(HankelKind kind, int n);

// Recovers the unique sequence c_0..c_{len-1} whose offset-0 determinant
// profile is d0 (d0[k] = det of the order-(k+1) offset-0 matrix) and whose
// offset-1 profile is d1. Determinants are consumed in the interleaved order
// H0_1, H1_1, H0_2, H1_2, ...; each target determinant is linear in the
// newest term with coefficient equal to the previous determinant of the same
// profile, so one exact division recovers each term.
// Throws IllPosedProfileError on a zero pivot and InconsistentProfileError
// when a solved term is not an integer.
std::vector<BigCount> reconstruct_sequence(const std::vector<BigCount>& d0,
                                           const std::vector<BigCount>& d1,
                                           int len);

}  // namespace aztec
