#include "g2ca/a1.hpp"

#include <algorithm>

namespace g2ca {
namespace {

std::optional<A1> clamp(A1 a) {
  if (a.x1 < 0 || a.x2 < 0) return std::nullopt;
  return a;
}

}  // namespace

std::optional<A1> a1_raise(A1 a, int i) {
  return clamp(i == 0 ? A1{a.x1 - 1, a.x2 + 1} : A1{a.x1 + 1, a.x2 - 1});
}

std::optional<A1> a1_lower(A1 a, int i) {
  return clamp(i == 0 ? A1{a.x1 + 1, a.x2 - 1} : A1{a.x1 - 1, a.x2 + 1});
}

int a1_eps(A1 a, int i) { return i == 0 ? a.x1 : a.x2; }
int a1_phi(A1 a, int i) { return i == 0 ? a.x2 : a.x1; }

std::pair<A1, A1> a1_r_hat(A1 x, A1 y) {
  const int m1 = std::min(y.x1, x.x2);
  const int m2 = std::min(y.x2, x.x1);
  return {A1{y.x1 + m2 - m1, y.x2 + m1 - m2}, A1{x.x1 + m1 - m2, x.x2 + m2 - m1}};
}

int a1_h_hat(A1 x, A1 y) { return -std::min(y.x2, x.x1); }

std::pair<AffA1, AffA1> a1_aff_r(const AffA1& x, const AffA1& y, int shift) {
  const int h = shift + a1_h_hat(x.elem, y.elem);
  auto [yy, xx] = a1_r_hat(x.elem, y.elem);
  return {AffA1{y.exp + h, yy}, AffA1{x.exp - h, xx}};
}

}  // namespace g2ca
