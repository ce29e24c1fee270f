#include "ifk/coefficients.hpp"

#include <stdexcept>
#include <string>

namespace ifk {
namespace {

void require_k(int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2, got " + std::to_string(k));
  if (k > 1'000'000) throw std::invalid_argument("k is unreasonably large: " + std::to_string(k));
}

}  // namespace

int upper_f_regime_start(int k) { return (k + 3) / 2; }

std::int64_t CoefficientTable::f(int j) const {
  if (j < 1 || j > k) throw std::out_of_range("C_F index " + std::to_string(j));
  return c_f[static_cast<std::size_t>(j)];
}

std::int64_t CoefficientTable::of(const VertexState& s) const {
  switch (s.kind) {
    case StateKind::U: return u(s.j);
    case StateKind::F: return f(s.j);
    case StateKind::I: return c_i;
  }
  return 0;
}

CoefficientTable coefficients(int k) {
  require_k(k);
  CoefficientTable t;
  t.k = k;
  t.c_e = (k % 2 == 0) ? 3 * k - 1 : 3 * k - 2;
  // C_E is odd for every k, so these halves are exact.
  const std::int64_t c_u0 = (3 * t.c_e - 3) / 2;
  t.c_u.resize(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) t.c_u[static_cast<std::size_t>(j)] = c_u0 - 3 * j;
  t.c_i = (t.c_e - 3) / 2;
  t.c_f.assign(static_cast<std::size_t>(k) + 1, 0);
  const int upper = upper_f_regime_start(k);
  for (int j = 1; j <= k; ++j) {
    t.c_f[static_cast<std::size_t>(j)] = j < upper ? t.c_e - 3 * j : 3 * (k - j);
  }
  return t;
}

Rational f_threshold(int k) {
  require_k(k);
  const std::int64_t denom = (k % 2 == 0) ? 3 * k - 1 : 3 * k - 2;
  return Rational(3) - Rational(3, denom);
}

}  // namespace ifk
