#include "nilbniz/multiindex.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilbniz {

MultiIndex MultiIndex::unit(std::size_t d, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > d)
    throw std::out_of_range("unit multiindex position out of range");
  MultiIndex u(d);
  u.e[static_cast<std::size_t>(k - 1)] = 1;
  return u;
}

long MultiIndex::order() const {
  long s = 0;
  for (int v : e) s += v;
  return s;
}

long MultiIndex::hom_length(int d1) const {
  long s = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    s += (static_cast<int>(i) < d1) ? e[i] : 2L * e[i];
  return s;
}

bool MultiIndex::is_zero() const {
  return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

Integer MultiIndex::factorial() const {
  Integer r(1);
  for (int v : e) r *= nilbniz::factorial(static_cast<unsigned long>(v));
  return r;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) throw std::invalid_argument("multiindex size mismatch");
  MultiIndex r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) throw std::invalid_argument("multiindex size mismatch");
  MultiIndex r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] - b[i];
    if (r[i] < 0) throw std::invalid_argument("multiindex difference is negative");
  }
  return r;
}

bool leq(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) throw std::invalid_argument("multiindex size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool grlex_less(const MultiIndex& a, const MultiIndex& b) {
  const long da = a.order();
  const long db = b.order();
  if (da != db) return da < db;
  return std::lexicographical_compare(a.e.begin(), a.e.end(), b.e.begin(), b.e.end());
}

std::string to_string(const MultiIndex& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a[i]);
  }
  s += ')';
  return s;
}

std::pair<long, long> lengths(const MultiIndex& alpha, int d1) {
  return {alpha.order(), alpha.hom_length(d1)};
}

namespace {

void enumerate_rec(int d, int d1, int budget, std::size_t pos, MultiIndex& cur,
                   std::vector<MultiIndex>& out) {
  if (pos == static_cast<std::size_t>(d)) {
    out.push_back(cur);
    return;
  }
  const int weight = (static_cast<int>(pos) < d1) ? 1 : 2;
  for (int v = 0; v * weight <= budget; ++v) {
    cur[pos] = v;
    enumerate_rec(d, d1, budget - v * weight, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> multiindices_up_to_hom_len(int d, int d1, int max_hom_len) {
  std::vector<MultiIndex> out;
  MultiIndex cur(static_cast<std::size_t>(d));
  enumerate_rec(d, d1, max_hom_len, 0, cur, out);
  std::sort(out.begin(), out.end(), [d1](const MultiIndex& a, const MultiIndex& b) {
    const long la = a.hom_length(d1);
    const long lb = b.hom_length(d1);
    if (la != lb) return la < lb;
    return std::lexicographical_compare(a.e.begin(), a.e.end(), b.e.begin(), b.e.end());
  });
  return out;
}

}  // namespace nilbniz
