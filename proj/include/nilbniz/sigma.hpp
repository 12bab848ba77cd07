#ifndef NILBNIZ_SIGMA_HPP
#define NILBNIZ_SIGMA_HPP

#include <map>
#include <string>

#include "nilbniz/multiindex.hpp"
#include "nilbniz/structure_tensor.hpp"

namespace nilbniz {

/// sigma in N^D: counts how often each bracket coordinate a_{i,j,k}
/// contributes to a term. Keys with count 0 are not stored.
struct SigmaIndex {
  std::map<Triple, int, TripleKijLess> counts;

  long total() const;  // |sigma|

  /// sigma! = prod of count factorials.
  Integer factorial() const;

  // The three projections to N^d: [0] collects onto the target coordinate k,
  // [1] onto the left factor's coordinate i, [2] onto the right factor's j.
  MultiIndex proj0(int d) const;
  MultiIndex proj1(int d) const;
  MultiIndex proj2(int d) const;

  void add(const Triple& t, int count);

  /// sigma with i and j swapped in every key.
  SigmaIndex transposed() const;

  friend bool operator==(const SigmaIndex&, const SigmaIndex&) = default;
};

std::string to_string(const SigmaIndex& s);

/// Key of tau in N^{D^(n)}: bracket coordinate (i,j,k) applied to the factor
/// pair (r,s), 1 <= r < s <= n.
struct Quint {
  int i = 0, j = 0, k = 0, r = 0, s = 0;
  friend bool operator==(const Quint&, const Quint&) = default;
};

struct QuintLess {
  bool operator()(const Quint& a, const Quint& b) const {
    if (a.k != b.k) return a.k < b.k;
    if (a.i != b.i) return a.i < b.i;
    if (a.j != b.j) return a.j < b.j;
    if (a.r != b.r) return a.r < b.r;
    return a.s < b.s;
  }
};

struct TauIndex {
  std::map<Quint, int, QuintLess> counts;

  long total() const;
  Integer factorial() const;

  MultiIndex proj0(int d) const;
  /// tau_[m], m in 1..n: factor m receives the i-coordinate of every key with
  /// r = m and the j-coordinate of every key with s = m.
  MultiIndex proj_factor(int d, int m) const;

  void add(const Quint& q, int count);

  friend bool operator==(const TauIndex&, const TauIndex&) = default;
};

}  // namespace nilbniz

#endif
