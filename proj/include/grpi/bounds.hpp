#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "grpi/error.hpp"
#include "grpi/field.hpp"

namespace grpi {

namespace detail {

inline BigInt ipow(unsigned long base, unsigned long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

inline void require_positive(std::int64_t v, const char* name) {
  if (v < 1) throw InputError(std::string(name) + " must be >= 1");
}

// RAII holder for an mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

}  // namespace detail

/// (|G| d - 1)^{2n}.
inline BigInt riley_bound(std::int64_t group_order, std::int64_t d, std::int64_t n) {
  detail::require_positive(group_order, "|G|");
  detail::require_positive(d, "d");
  detail::require_positive(n, "n");
  return detail::ipow(static_cast<unsigned long>(group_order * d - 1), static_cast<unsigned long>(2 * n));
}

/// 2^n ((2 d1 - 1) o(g) - 1)^{2r} (|G| d2 - 1)^{2(n-r)} (r+1)^{n-r}.
inline BigInt lemma10_bound(std::int64_t n, std::int64_t r, std::int64_t d1, std::int64_t d2, std::int64_t elt_order,
                            std::int64_t group_order) {
  detail::require_positive(n, "n");
  detail::require_positive(d1, "d1");
  detail::require_positive(d2, "d2");
  detail::require_positive(elt_order, "o(g)");
  detail::require_positive(group_order, "|G|");
  if (r < 0 || r > n) throw InputError("r must satisfy 0 <= r <= n");
  auto un = static_cast<unsigned long>(n), ur = static_cast<unsigned long>(r);
  return detail::ipow(2, un) * detail::ipow(static_cast<unsigned long>((2 * d1 - 1) * elt_order - 1), 2 * ur) *
         detail::ipow(static_cast<unsigned long>(group_order * d2 - 1), 2 * (un - ur)) *
         detail::ipow(ur + 1, un - ur);
}

/// n! / 2^n.
inline Rational l8_threshold(std::int64_t n) {
  detail::require_positive(n, "n");
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  Rational q(f, detail::ipow(2, static_cast<unsigned long>(n)));
  q.canonicalize();
  return q;
}

/// Every per-pattern quotient dimension lies strictly below n!/2^n.
inline bool l8_check(const std::vector<std::uint64_t>& dims, std::int64_t n) {
  auto t = l8_threshold(n);
  for (auto d : dims)
    if (!(Rational(static_cast<unsigned long>(d)) < t)) return false;
  return true;
}

/// dim V_{n_1..n_k} = 2^n n!.
inline BigInt dim_v(std::int64_t n) {
  if (n < 0) throw InputError("n must be non-negative");
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return detail::ipow(2, static_cast<unsigned long>(n)) * f;
}

struct TheoremDegreeOptions {
  bool exact = false;                 // also compute n as an integer
  std::uint64_t digit_cap = 100'000;  // refuse exact n beyond this many digits
  double alpha_width = 1e-6;          // target width of the alpha enclosure
  double log10_width = 1e-3;          // target width of the log10(n) enclosure
  mpfr_prec_t precision = 0;          // 0 = adaptive from 64 bits; otherwise fixed
};

struct TheoremDegree {
  BigInt coefficient;  // alpha = coefficient * e
  double alpha_lo = 0, alpha_hi = 0;
  double log10_lo = 0, log10_hi = 0;  // enclosure of log10(n)
  std::optional<BigInt> n;            // exact n when requested and within the digit cap
  mpfr_prec_t precision = 0;
};

namespace detail {

inline void enclose_degree(const BigInt& c, mpfr_prec_t prec, TheoremDegree& out) {
  Mpfr e_lo(prec), e_hi(prec), a_lo(prec), a_hi(prec), l_lo(prec), l_hi(prec), t(prec);
  mpfr_set_ui(e_lo.get(), 1, MPFR_RNDD);
  mpfr_set_ui(e_hi.get(), 1, MPFR_RNDU);
  mpfr_exp(e_lo.get(), e_lo.get(), MPFR_RNDD);
  mpfr_exp(e_hi.get(), e_hi.get(), MPFR_RNDU);
  mpfr_mul_z(a_lo.get(), e_lo.get(), c.get_mpz_t(), MPFR_RNDD);
  mpfr_mul_z(a_hi.get(), e_hi.get(), c.get_mpz_t(), MPFR_RNDU);

  // log10(alpha^alpha) = alpha log10(alpha), increasing for alpha > 1.
  mpfr_log10(l_lo.get(), a_lo.get(), MPFR_RNDD);
  mpfr_mul(l_lo.get(), l_lo.get(), a_lo.get(), MPFR_RNDD);
  mpfr_log10(l_hi.get(), a_hi.get(), MPFR_RNDU);
  mpfr_mul(l_hi.get(), l_hi.get(), a_hi.get(), MPFR_RNDU);
  // n < alpha^alpha + 1, so log10(n) < log10(alpha^alpha) + 1/alpha^alpha.
  mpfr_pow(t.get(), a_lo.get(), a_lo.get(), MPFR_RNDD);
  mpfr_ui_div(t.get(), 1, t.get(), MPFR_RNDU);
  mpfr_add(l_hi.get(), l_hi.get(), t.get(), MPFR_RNDU);

  out.alpha_lo = mpfr_get_d(a_lo.get(), MPFR_RNDD);
  out.alpha_hi = mpfr_get_d(a_hi.get(), MPFR_RNDU);
  out.log10_lo = mpfr_get_d(l_lo.get(), MPFR_RNDD);
  out.log10_hi = mpfr_get_d(l_hi.get(), MPFR_RNDU);
  out.precision = prec;
}

// ceil(alpha^alpha) if both enclosure ends agree at this precision.
inline std::optional<BigInt> exact_degree(const BigInt& c, mpfr_prec_t prec) {
  Mpfr e(prec), a(prec), p(prec);
  BigInt lo, hi;
  mpfr_set_ui(e.get(), 1, MPFR_RNDD);
  mpfr_exp(e.get(), e.get(), MPFR_RNDD);
  mpfr_mul_z(a.get(), e.get(), c.get_mpz_t(), MPFR_RNDD);
  mpfr_pow(p.get(), a.get(), a.get(), MPFR_RNDD);
  mpfr_get_z(lo.get_mpz_t(), p.get(), MPFR_RNDU);
  mpfr_set_ui(e.get(), 1, MPFR_RNDU);
  mpfr_exp(e.get(), e.get(), MPFR_RNDU);
  mpfr_mul_z(a.get(), e.get(), c.get_mpz_t(), MPFR_RNDU);
  mpfr_pow(p.get(), a.get(), a.get(), MPFR_RNDU);
  mpfr_get_z(hi.get_mpz_t(), p.get(), MPFR_RNDU);
  if (lo == hi) return lo;
  return std::nullopt;
}

}  // namespace detail

/// alpha = 8e((2 d1 - 1) o(g) - 1)^2 (|G| d2 - 1)^2 and the least integer
/// n >= alpha^alpha, as rigorous enclosures.
inline TheoremDegree theorem_degree(std::int64_t d1, std::int64_t d2, std::int64_t elt_order, std::int64_t group_order,
                                    const TheoremDegreeOptions& opt = {}) {
  detail::require_positive(d1, "d1");
  detail::require_positive(d2, "d2");
  detail::require_positive(elt_order, "o(g)");
  detail::require_positive(group_order, "|G|");
  TheoremDegree out;
  BigInt y = (2 * d1 - 1) * elt_order - 1;
  BigInt z = group_order * d2 - 1;
  out.coefficient = 8 * y * y * z * z;
  if (out.coefficient == 0)
    throw DegenerateParameters("alpha = 0: ((2 d1 - 1) o(g) - 1) or (|G| d2 - 1) vanishes");

  if (opt.precision > 0) {
    detail::enclose_degree(out.coefficient, opt.precision, out);
  } else {
    for (mpfr_prec_t prec = 64;; prec *= 2) {
      detail::enclose_degree(out.coefficient, prec, out);
      if (out.alpha_hi - out.alpha_lo <= opt.alpha_width && out.log10_hi - out.log10_lo <= opt.log10_width) break;
      if (prec > (1 << 20)) throw std::runtime_error("theorem_degree failed to converge");
    }
  }

  if (opt.exact) {
    if (out.log10_hi + 1 > static_cast<double>(opt.digit_cap))
      throw InputError("exact n would exceed the digit cap of " + std::to_string(opt.digit_cap));
    auto bits = static_cast<mpfr_prec_t>(out.log10_hi * 3.33) + 128;
    for (int attempt = 0; attempt < 8 && !out.n; ++attempt, bits *= 2) out.n = detail::exact_degree(out.coefficient, bits);
    if (!out.n) throw std::runtime_error("exact n did not stabilize");
  }
  return out;
}

}  // namespace grpi
