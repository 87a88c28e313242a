#include "qmf/kronecker.hpp"

#include <gmp.h>

#include <algorithm>

namespace qmf::detail {
namespace {

constexpr std::size_t kSchoolbookLimit = 32;

mpz_srcptr raw(const Integer& z) { return z.backend().data(); }
mpz_ptr raw(Integer& z) { return z.backend().data(); }

std::size_t max_bits(const std::vector<Integer>& v, std::size_t n) {
  std::size_t bits = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (mpz_sgn(raw(v[i])) != 0) bits = std::max(bits, mpz_sizeinbase(raw(v[i]), 2));
  return bits;
}

// Evaluate the polynomial at 2^(64*limbs) as a signed integer.
Integer pack(const std::vector<Integer>& v, std::size_t n, std::size_t limbs) {
  Integer pos, neg;
  const std::size_t total = n * limbs;
  mp_limb_t* p = mpz_limbs_write(raw(pos), total);
  mp_limb_t* q = mpz_limbs_write(raw(neg), total);
  std::fill(p, p + total, mp_limb_t{0});
  std::fill(q, q + total, mp_limb_t{0});
  for (std::size_t i = 0; i < n; ++i) {
    mpz_srcptr z = raw(v[i]);
    const int s = mpz_sgn(z);
    if (s == 0) continue;
    mp_limb_t* dst = (s > 0 ? p : q) + i * limbs;
    const mp_limb_t* src = mpz_limbs_read(z);
    std::copy(src, src + mpz_size(z), dst);
  }
  mpz_limbs_finish(raw(pos), static_cast<mp_size_t>(total));
  mpz_limbs_finish(raw(neg), static_cast<mp_size_t>(total));
  return pos - neg;
}

}  // namespace

std::vector<Integer> convolve_schoolbook(const std::vector<Integer>& a,
                                         const std::vector<Integer>& b, std::size_t n_out) {
  std::vector<Integer> r(n_out);
  std::vector<std::size_t> nz_b;
  for (std::size_t j = 0; j < std::min(b.size(), n_out); ++j)
    if (mpz_sgn(raw(b[j])) != 0) nz_b.push_back(j);
  for (std::size_t i = 0; i < std::min(a.size(), n_out); ++i) {
    mpz_srcptr ai = raw(a[i]);
    if (mpz_sgn(ai) == 0) continue;
    for (std::size_t j : nz_b) {
      if (i + j >= n_out) break;
      mpz_addmul(raw(r[i + j]), ai, raw(b[j]));
    }
  }
  return r;
}

std::vector<Integer> convolve_kronecker(const std::vector<Integer>& a,
                                        const std::vector<Integer>& b, std::size_t n_out) {
  const std::size_t na = std::min(a.size(), n_out);
  const std::size_t nb = std::min(b.size(), n_out);
  std::vector<Integer> r(n_out);
  const std::size_t ba = max_bits(a, na);
  const std::size_t bb = max_bits(b, nb);
  if (ba == 0 || bb == 0) return r;

  std::size_t terms = std::min(na, nb), log_terms = 1;
  while ((std::size_t{1} << log_terms) < terms) ++log_terms;
  const std::size_t bits = ba + bb + log_terms + 2;
  const std::size_t limbs = (bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;

  const bool square = &a == &b;
  Integer pa = pack(a, na, limbs);
  Integer prod;
  if (square) {
    mpz_mul(raw(prod), raw(pa), raw(pa));
  } else {
    Integer pb = pack(b, nb, limbs);
    mpz_mul(raw(prod), raw(pa), raw(pb));
  }

  const int sign = mpz_sgn(raw(prod));
  if (sign == 0) return r;
  mpz_abs(raw(prod), raw(prod));
  const mp_limb_t* limb = mpz_limbs_read(raw(prod));
  const std::size_t size = mpz_size(raw(prod));

  // Balanced digit extraction: each slot holds c_k mod 2^(64 L), with a borrow
  // propagated from negative digits below it.
  Integer half, full, digit;
  mpz_setbit(raw(half), limbs * GMP_NUMB_BITS - 1);
  mpz_setbit(raw(full), limbs * GMP_NUMB_BITS);
  bool carry = false;
  for (std::size_t k = 0; k < n_out; ++k) {
    const std::size_t lo = k * limbs;
    if (lo >= size && !carry) break;
    mp_limb_t* d = mpz_limbs_write(raw(digit), limbs);
    for (std::size_t j = 0; j < limbs; ++j) d[j] = lo + j < size ? limb[lo + j] : 0;
    mpz_limbs_finish(raw(digit), static_cast<mp_size_t>(limbs));
    if (carry) mpz_add_ui(raw(digit), raw(digit), 1);
    if (mpz_cmp(raw(digit), raw(half)) >= 0) {
      mpz_sub(raw(digit), raw(digit), raw(full));
      carry = true;
    } else {
      carry = false;
    }
    if (sign < 0) mpz_neg(raw(digit), raw(digit));
    r[k] = digit;
  }
  return r;
}

std::vector<Integer> convolve(const std::vector<Integer>& a, const std::vector<Integer>& b,
                              std::size_t n_out) {
  if (std::min({a.size(), b.size(), n_out}) <= kSchoolbookLimit)
    return convolve_schoolbook(a, b, n_out);
  return convolve_kronecker(a, b, n_out);
}

}  // namespace qmf::detail
