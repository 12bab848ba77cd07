#ifndef NILBNIZ_MULTIINDEX_HPP
#define NILBNIZ_MULTIINDEX_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "nilbniz/rational.hpp"

namespace nilbniz {

/// Element of N^d. Also doubles as a monomial exponent vector in the
/// polynomial oracle (where the arity is 2d or nd rather than d).
struct MultiIndex {
  std::vector<int> e;

  MultiIndex() = default;
  explicit MultiIndex(std::size_t d) : e(d, 0) {}
  MultiIndex(std::initializer_list<int> init) : e(init) {}

  std::size_t size() const { return e.size(); }
  int operator[](std::size_t i) const { return e[i]; }
  int& operator[](std::size_t i) { return e[i]; }

  /// Standard basis vector e_k, 1-based position.
  static MultiIndex unit(std::size_t d, int k);

  /// |alpha| = sum of entries.
  long order() const;

  /// l(alpha): entries at 1-based positions <= d1 weigh 1, the rest weigh 2.
  long hom_length(int d1) const;

  bool is_zero() const;

  /// alpha! = prod of entrywise factorials.
  Integer factorial() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
/// Componentwise difference; throws if any entry would go negative.
MultiIndex operator-(const MultiIndex& a, const MultiIndex& b);
/// Componentwise a <= b.
bool leq(const MultiIndex& a, const MultiIndex& b);

/// Graded-lexicographic order: first by |alpha|, ties broken lexicographically.
/// This is the one monomial/term order used throughout.
bool grlex_less(const MultiIndex& a, const MultiIndex& b);

struct GrlexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    return grlex_less(a, b);
  }
};

/// "(a1,a2,...,ad)"
std::string to_string(const MultiIndex& a);

/// (|alpha|, l(alpha)).
std::pair<long, long> lengths(const MultiIndex& alpha, int d1);

/// All alpha in N^d with l(alpha) <= max_hom_len, in a fixed deterministic
/// order (ascending hom length, then lexicographic).
std::vector<MultiIndex> multiindices_up_to_hom_len(int d, int d1, int max_hom_len);

}  // namespace nilbniz

#endif
