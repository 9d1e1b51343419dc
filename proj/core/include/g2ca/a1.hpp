#pragma once

#include <optional>
#include <utility>

namespace g2ca {

// The rank-1 affine crystal on {(x1, x2) : x1 + x2 = l}, indices {0, 1}.
struct A1 {
  int x1 = 0, x2 = 0;
  int level() const { return x1 + x2; }
  friend bool operator==(const A1&, const A1&) = default;
};

std::optional<A1> a1_raise(A1 a, int i);
std::optional<A1> a1_lower(A1 a, int i);
int a1_eps(A1 a, int i);   // x_{i+1}
int a1_phi(A1 a, int i);   // x_{2-i}

// Combinatorial R on A1 pairs: (x ⊗ y) -> (y' ⊗ x'), and its energy.
std::pair<A1, A1> a1_r_hat(A1 x, A1 y);
int a1_h_hat(A1 x, A1 y);  // -min(y2, x1)

struct AffA1 {
  int exp = 0;  // the power of z
  A1 elem;
  friend bool operator==(const AffA1&, const AffA1&) = default;
};

// Affinized R with an optional additive energy shift:
//   z^m x ⊗ z^n y  ->  z^{n+H} y' ⊗ z^{m-H} x',   H = shift + h_hat(x ⊗ y).
std::pair<AffA1, AffA1> a1_aff_r(const AffA1& x, const AffA1& y, int shift = 0);

}  // namespace g2ca
