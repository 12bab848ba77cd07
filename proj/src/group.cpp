#include "nilbniz/group.hpp"

namespace nilbniz {

std::vector<Rational> bch_multiply(const StructureTensor& t,
                                   std::span<const Rational> x,
                                   std::span<const Rational> y) {
  return bch_multiply_with<Rational>(t, x, y, [](const Rational& q) { return q; });
}

std::vector<double> bch_multiply(const StructureTensor& t, std::span<const double> x,
                                 std::span<const double> y) {
  return bch_multiply_with<double>(t, x, y,
                                   [](const Rational& q) { return q.get_d(); });
}

std::vector<Rational> dilate(const StructureTensor& t, const Rational& scale,
                             std::span<const Rational> x) {
  if (!(scale > 0)) throw std::invalid_argument("dilation parameter must be positive");
  if (x.size() != static_cast<std::size_t>(t.dim()))
    throw std::invalid_argument("group element length does not match tensor dimension");
  std::vector<Rational> out(x.begin(), x.end());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] *= (static_cast<int>(i) < t.dim_v1()) ? scale : scale * scale;
  return out;
}

std::vector<double> dilate(const StructureTensor& t, double scale,
                           std::span<const double> x) {
  if (!(scale > 0)) throw std::invalid_argument("dilation parameter must be positive");
  if (x.size() != static_cast<std::size_t>(t.dim()))
    throw std::invalid_argument("group element length does not match tensor dimension");
  std::vector<double> out(x.begin(), x.end());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] *= (static_cast<int>(i) < t.dim_v1()) ? scale : scale * scale;
  return out;
}

}  // namespace nilbniz
