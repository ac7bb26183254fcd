// Closed-form counting: isotropic subspace counts N_j, Steinberg dimensions
// D_j = p^(m^2), and the wedge count d(p,r) with its Euler characteristic
// identity. All arithmetic exact over arbitrary-precision integers; the two
// printed forms of the identity are evaluated independently and cross-checked.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace cposet {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(unsigned base, unsigned exp) {
  BigInt r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

// Number of j-dimensional isotropic subspaces of a non-degenerate symplectic
// space of dimension 2r: prod_{t=0}^{j-1} (p^{2r-t} - p^t) / (p^j - p^t).
inline BigInt n_isotropic(unsigned p, unsigned r, unsigned j) {
  if (j > r) throw std::invalid_argument("n_isotropic: j must satisfy 0 <= j <= r");
  BigInt num = 1, den = 1;
  for (unsigned t = 0; t < j; ++t) {
    num *= big_pow(p, 2 * r - t) - big_pow(p, t);
    den *= big_pow(p, j) - big_pow(p, t);
  }
  if (num % den != 0) throw std::logic_error("n_isotropic: non-exact division");
  return num / den;
}

// Dimension of the top homology of the symplectic Tits building of a space
// of dimension 2m: the order p^(m^2) of the unipotent radical of a Borel.
inline BigInt steinberg_dim(unsigned p, unsigned m) { return big_pow(p, m * m); }

struct WedgeCount {
  unsigned p = 0, r = 0;
  BigInt d;      // number of r-spheres in the wedge
  BigInt euler;  // 1 + (-1)^r d
};

inline WedgeCount wedge_count(unsigned p, unsigned r) {
  if (r < 1) throw std::invalid_argument("wedge_count: r >= 1 required");
  const int sign_r = (r % 2 == 0) ? 1 : -1;

  // Closed display: (-1)^r d + 1 = (-1)^r p^{2r+1+r^2}
  //   + sum_{j=1}^r (-1)^{r-j} p^{2r+1-j+(r-j)^2} N_j
  BigInt lhs = sign_r * big_pow(p, 2 * r + 1 + r * r);
  for (unsigned j = 1; j <= r; ++j) {
    const int sign = ((r - j) % 2 == 0) ? 1 : -1;
    lhs += sign * big_pow(p, 2 * r + 1 - j + (r - j) * (r - j)) * n_isotropic(p, r, j);
  }

  // Alternating-sum form: sum_{j=0}^r (-1)^{r-j} |HV/I_j| N_j D_j with
  // |HV/I_j| = p^{2r+1-j} and D_r = 1.
  BigInt chi = 0;
  for (unsigned j = 0; j <= r; ++j) {
    const int sign = ((r - j) % 2 == 0) ? 1 : -1;
    chi += sign * big_pow(p, 2 * r + 1 - j) * n_isotropic(p, r, j) * steinberg_dim(p, r - j);
  }

  if (lhs != chi) throw std::logic_error("wedge_count: the two forms of the Euler identity disagree");

  WedgeCount w;
  w.p = p;
  w.r = r;
  w.euler = chi;
  w.d = sign_r * (chi - 1);
  if (w.d < 0) throw std::logic_error("wedge_count: negative wedge count");
  return w;
}

}  // namespace cposet
