#ifndef NILBNIZ_STRUCTURE_TENSOR_HPP
#define NILBNIZ_STRUCTURE_TENSOR_HPP

#include <map>
#include <string>
#include <vector>

#include "nilbniz/rational.hpp"

namespace nilbniz {

/// 1-based index triple (i,j,k) of a structure constant a_{i,j,k}.
struct Triple {
  int i = 0, j = 0, k = 0;
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Canonical triple order (k,i,j): groups the support by target coordinate.
struct TripleKijLess {
  bool operator()(const Triple& a, const Triple& b) const {
    if (a.k != b.k) return a.k < b.k;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

std::string to_string(const Triple& t);

struct Violation {
  enum class Kind { antisymmetry, support, jacobi, zero_entry };
  Kind kind;
  std::vector<int> indices;  // offending triple, or (i,j,l,m) for jacobi
  std::string message;
};

/// Two-step nilpotent Lie algebra given by its structure constants
/// [X_i,X_j] = sum_k a_{i,j,k} X_k, with the graded split dim = d1 + (d-d1).
/// Entries are stored fully materialized (both orientations).
class StructureTensor {
 public:
  using EntryMap = std::map<Triple, Rational, TripleKijLess>;

  /// Builds from i<j entries only; the antisymmetric partner is synthesized.
  /// Throws std::invalid_argument on i>=j, out-of-range indices, duplicate
  /// triples, or zero values.
  static StructureTensor from_lower_entries(
      int dim, int dim_v1, const std::vector<std::pair<Triple, Rational>>& entries);

  /// Stores entries exactly as given, no synthesis and no checks beyond
  /// index range. Exists so the validator can be pointed at broken data.
  static StructureTensor from_raw_entries(
      int dim, int dim_v1, const std::vector<std::pair<Triple, Rational>>& entries);

  int dim() const { return d_; }
  int dim_v1() const { return d1_; }
  const EntryMap& entries() const { return entries_; }

  /// a_{i,j,k} (zero when absent), 1-based.
  Rational at(int i, int j, int k) const;

  /// Support D = {(i,j,k): a_{i,j,k} != 0} in (k,i,j) order.
  std::vector<Triple> support() const;

  /// Checks antisymmetry, the two-step support constraint, canonical
  /// sparsity, and the Jacobi identity. Violations are data, not errors.
  std::vector<Violation> validate() const;

  bool is_valid() const { return validate().empty(); }

 private:
  StructureTensor(int d, int d1) : d_(d), d1_(d1) {}

  int d_;
  int d1_;
  EntryMap entries_;
};

/// Heisenberg algebra h_n: dim 2n+1, d1 = 2n, a_{i,n+i,2n+1} = 1.
StructureTensor heisenberg_tensor(int n);

/// Abelian algebra: empty support.
StructureTensor abelian_tensor(int dim, int dim_v1);

std::string to_string(const Violation& v);

}  // namespace nilbniz

#endif
