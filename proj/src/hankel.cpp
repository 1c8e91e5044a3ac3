#include "aztec/hankel.hpp"

#include <cstddef>
#include <string>
#include <utility>

#include "aztec/errors.hpp"
#include "aztec/schroeder.hpp"

namespace aztec {

HankelMatrix::HankelMatrix(std::vector<BigCount> entries, int order, int offset,
                           HankelKind kind)
    : order_(order), offset_(offset), kind_(kind), entries_(std::move(entries)) {
  if (order_ < 1) throw DomainError("matrix order must be >= 1");
  if (offset_ != 0 && offset_ != 1) throw DomainError("offset must be 0 or 1");
  if (entries_.size() != static_cast<std::size_t>(order_) * order_) {
    throw DomainError("entry count does not match order");
  }
  for (int i = 0; i + 1 < order_; ++i) {
    for (int j = 1; j < order_; ++j) {
      if (at(i, j) != at(i + 1, j - 1)) {
        throw DomainError("entries are not constant along anti-diagonals");
      }
    }
  }
}

const BigCount& HankelMatrix::at(int i, int j) const {
  return entries_[static_cast<std::size_t>(i) * order_ + j];
}

HankelMatrix build_hankel(const std::vector<BigCount>& seq, int offset, int n,
                          HankelKind kind) {
  if (n < 1) throw DomainError("matrix order must be >= 1");
  if (offset != 0 && offset != 1) throw DomainError("offset must be 0 or 1");
  const std::size_t needed = static_cast<std::size_t>(2 * n - 2 + offset) + 1;
  if (seq.size() < needed) {
    throw InsufficientTermsError(
        "sequence has " + std::to_string(seq.size()) + " terms, order " +
        std::to_string(n) + " with offset " + std::to_string(offset) +
        " needs " + std::to_string(needed));
  }
  std::vector<BigCount> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) entries.push_back(seq[i + j + offset]);
  return HankelMatrix(std::move(entries), n, offset, kind);
}

HankelMatrix build_hankel(HankelKind kind, int n) {
  if (kind == HankelKind::Custom)
    throw DomainError("Custom matrices need an explicit sequence");
  const int offset = (kind == HankelKind::H1 || kind == HankelKind::G1) ? 1 : 0;
  const bool small = (kind == HankelKind::G1 || kind == HankelKind::G0);
  const int terms = 2 * n - 1 + offset;
  return build_hankel(small ? small_schroeder_sequence(terms)
                            : large_schroeder_sequence(terms),
                      offset, n, kind);
}

BigCount determinant(std::vector<BigCount> m, int n) {
  if (n < 1) throw DomainError("matrix order must be >= 1");
  if (m.size() != static_cast<std::size_t>(n) * n)
    throw DomainError("entry count does not match order");
  auto at = [&](int i, int j) -> BigCount& {
    return m[static_cast<std::size_t>(i) * n + j];
  };
  int sign = 1;
  BigCount prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      int pivot_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (at(r, k) != 0) { pivot_row = r; break; }
      }
      if (pivot_row < 0) return 0;  // zero column, singular
      for (int j = k; j < n; ++j) std::swap(at(k, j), at(pivot_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        // exact by the Bareiss identity: prev divides the numerator
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign > 0 ? at(n - 1, n - 1) : -at(n - 1, n - 1);
}

BigCount determinant(const HankelMatrix& m) {
  return determinant(m.entries(), m.order());
}

BigCount closed_form(HankelKind kind, int n) {
  if (n < 1) throw DomainError("closed forms are defined for n >= 1");
  switch (kind) {
    case HankelKind::H1:
      return pow2(static_cast<unsigned long long>(n) * (n + 1) / 2);
    case HankelKind::G1:
    case HankelKind::H0:
    case HankelKind::G0:
      return pow2(static_cast<unsigned long long>(n) * (n - 1) / 2);
    case HankelKind::Custom:
      break;
  }
  throw DomainError("no closed form for Custom matrices");
}

namespace {

// det of the order-n Hankel matrix over c extended by one unknown entry t:
// linear in t, so det = coeff * t + base where base is the det at t = 0.
BigCount det_with_last_term(const std::vector<BigCount>& c, int offset, int n,
                            const BigCount& t) {
  std::vector<BigCount> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  const std::size_t top = static_cast<std::size_t>(2 * n - 2 + offset);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::size_t idx = static_cast<std::size_t>(i + j + offset);
      entries.push_back(idx == top ? t : c[idx]);
    }
  }
  return determinant(std::move(entries), n);
}

}  // namespace

std::vector<BigCount> reconstruct_sequence(const std::vector<BigCount>& d0,
                                           const std::vector<BigCount>& d1,
                                           int len) {
  if (len < 1) throw DomainError("sequence length must be >= 1");
  const std::size_t need0 = static_cast<std::size_t>((len + 1) / 2);
  const std::size_t need1 = static_cast<std::size_t>(len / 2);
  if (d0.size() < need0 || d1.size() < need1) {
    throw InsufficientTermsError(
        "profiles too short: need " + std::to_string(need0) + " offset-0 and " +
        std::to_string(need1) + " offset-1 determinants for length " +
        std::to_string(len));
  }
  std::vector<BigCount> c;
  c.reserve(len);
  for (int m = 0; m < len; ++m) {
    const int offset = m % 2;                 // even m from d0, odd m from d1
    const int k = (m - offset) / 2;           // solving det of order k+1
    const std::vector<BigCount>& profile = offset == 0 ? d0 : d1;
    const BigCount& target = profile[k];
    if (k == 0) {
      // 1x1 determinant: the term itself
      c.push_back(target);
      continue;
    }
    const BigCount& coeff = profile[k - 1];   // leading principal minor
    if (coeff == 0) {
      throw IllPosedProfileError(
          "zero determinant at order " + std::to_string(k) + " (offset " +
          std::to_string(offset) + ") leaves the sequence undetermined");
    }
    const BigCount base = det_with_last_term(c, offset, k + 1, 0);
    const BigCount numerator = target - base;
    BigCount quotient, remainder;
    boost::multiprecision::divide_qr(numerator, coeff, quotient, remainder);
    if (remainder != 0) {
      throw InconsistentProfileError(
          "no integer sequence matches the profiles at term " +
          std::to_string(m));
    }
    c.push_back(quotient);
  }
  return c;
}

}  // namespace aztec
