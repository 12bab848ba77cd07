#ifndef NILBNIZ_GROUP_HPP
#define NILBNIZ_GROUP_HPP

#include <span>
#include <stdexcept>
#include <vector>

#include "nilbniz/multiindex.hpp"
#include "nilbniz/rational.hpp"
#include "nilbniz/structure_tensor.hpp"

namespace nilbniz {

// Campbell-Hausdorff product at step two:
//   (x o y)_k = x_k + y_k                                     for k <= d1
//   (x o y)_k = x_k + y_k + 1/2 sum_{i,j} a_{i,j,k} x_i y_j   for k > d1
//
// Generic over the coordinate scalar so the same group law drives exact
// points (Rational), numeric points (double) and symbolic coordinates
// (Polynomial). from_rat embeds a structure constant into the scalar type.
template <class S, class FromRational>
std::vector<S> bch_multiply_with(const StructureTensor& t, std::span<const S> x,
                                 std::span<const S> y, FromRational&& from_rat) {
  const auto d = static_cast<std::size_t>(t.dim());
  if (x.size() != d || y.size() != d)
    throw std::invalid_argument("group element length does not match tensor dimension");
  std::vector<S> out;
  out.reserve(d);
  for (std::size_t k = 0; k < d; ++k) out.push_back(x[k] + y[k]);
  for (const auto& [tr, a] : t.entries()) {
    if (is_zero(a)) continue;
    out[static_cast<std::size_t>(tr.k - 1)] +=
        from_rat(a / 2) * x[static_cast<std::size_t>(tr.i - 1)] *
        y[static_cast<std::size_t>(tr.j - 1)];
  }
  return out;
}

std::vector<Rational> bch_multiply(const StructureTensor& t,
                                   std::span<const Rational> x,
                                   std::span<const Rational> y);
std::vector<double> bch_multiply(const StructureTensor& t, std::span<const double> x,
                                 std::span<const double> y);

/// Group inverse: -x (two-step BCH makes negation exact).
template <class S>
std::vector<S> inverse(std::span<const S> x) {
  std::vector<S> out;
  out.reserve(x.size());
  for (const auto& v : x) out.push_back(-v);
  return out;
}

/// Dilation delta_t: coordinates in the degree-1 layer scale by t, the rest by t^2.
std::vector<Rational> dilate(const StructureTensor& t, const Rational& scale,
                             std::span<const Rational> x);
std::vector<double> dilate(const StructureTensor& t, double scale,
                           std::span<const double> x);

}  // namespace nilbniz

#endif
