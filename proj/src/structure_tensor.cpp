#include "nilbniz/structure_tensor.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace nilbniz {

std::string to_string(const Triple& t) {
  return "(" + std::to_string(t.i) + "," + std::to_string(t.j) + "," +
         std::to_string(t.k) + ")";
}

namespace {

void check_range(int dim, const Triple& t) {
  auto in = [dim](int v) { return v >= 1 && v <= dim; };
  if (!in(t.i) || !in(t.j) || !in(t.k))
    throw std::invalid_argument("structure constant index out of range: " + to_string(t));
}

void check_dims(int dim, int dim_v1) {
  if (dim < 1) throw std::invalid_argument("dim must be positive");
  if (dim_v1 < 1 || dim_v1 > dim)
    throw std::invalid_argument("dim_v1 must satisfy 1 <= dim_v1 <= dim");
}

}  // namespace

StructureTensor StructureTensor::from_lower_entries(
    int dim, int dim_v1, const std::vector<std::pair<Triple, Rational>>& entries) {
  check_dims(dim, dim_v1);
  StructureTensor t(dim, dim_v1);
  for (const auto& [tr, val] : entries) {
    check_range(dim, tr);
    if (tr.i >= tr.j)
      throw std::invalid_argument("only i < j entries may be given, got " + to_string(tr));
    if (is_zero(val))
      throw std::invalid_argument("explicit zero entry at " + to_string(tr));
    if (!t.entries_.emplace(tr, val).second)
      throw std::invalid_argument("duplicate entry at " + to_string(tr));
    t.entries_.emplace(Triple{tr.j, tr.i, tr.k}, -val);
  }
  return t;
}

StructureTensor StructureTensor::from_raw_entries(
    int dim, int dim_v1, const std::vector<std::pair<Triple, Rational>>& entries) {
  check_dims(dim, dim_v1);
  StructureTensor t(dim, dim_v1);
  for (const auto& [tr, val] : entries) {
    check_range(dim, tr);
    if (!t.entries_.emplace(tr, val).second)
      throw std::invalid_argument("duplicate entry at " + to_string(tr));
  }
  return t;
}

Rational StructureTensor::at(int i, int j, int k) const {
  const auto it = entries_.find(Triple{i, j, k});
  return it == entries_.end() ? Rational(0) : it->second;
}

std::vector<Triple> StructureTensor::support() const {
  std::vector<Triple> out;
  out.reserve(entries_.size());
  for (const auto& [tr, val] : entries_)
    if (!is_zero(val)) out.push_back(tr);
  return out;
}

std::vector<Violation> StructureTensor::validate() const {
  std::vector<Violation> out;

  for (const auto& [tr, val] : entries_) {
    if (is_zero(val)) {
      out.push_back({Violation::Kind::zero_entry,
                     {tr.i, tr.j, tr.k},
                     "stored zero entry at " + to_string(tr)});
      continue;
    }
    // a_{i,j,k} = -a_{j,i,k}
    if (at(tr.j, tr.i, tr.k) != -val)
      out.push_back({Violation::Kind::antisymmetry,
                     {tr.j, tr.i, tr.k},
                     "antisymmetry fails at " + to_string({tr.j, tr.i, tr.k}) +
                         ": expected " + nilbniz::to_string(Rational(-val))});
    // two-step homogeneous support: i != j, max(i,j) < k, max(i,j) <= d1, k > d1
    const int m = std::max(tr.i, tr.j);
    if (tr.i == tr.j || m >= tr.k || m > d1_ || tr.k <= d1_)
      out.push_back({Violation::Kind::support,
                     {tr.i, tr.j, tr.k},
                     "support constraint fails at " + to_string(tr)});
  }

  // Jacobi: sum_k (a_{i,j,k}a_{k,l,m} + a_{j,l,k}a_{k,i,m} + a_{l,i,k}a_{k,j,m}) = 0.
  // Vacuous under the support constraint (every a_{k,.,.} with k > d1 is zero),
  // but evaluated anyway on whatever is stored. Only products of stored
  // entries can contribute, so it is enough to scan pairs of entries.
  std::map<std::array<int, 4>, Rational> jacobi;
  for (const auto& [ab, vab] : entries_) {
    for (const auto& [cd, vcd] : entries_) {
      if (cd.i != ab.k) continue;
      const Rational p = vab * vcd;
      // term a_{i,j,k} a_{k,l,m} contributes to J(i,j,l,m), and by the cyclic
      // symmetry of the sum also to J(l,i,j,m) and J(j,l,i,m).
      jacobi[{ab.i, ab.j, cd.j, cd.k}] += p;
      jacobi[{cd.j, ab.i, ab.j, cd.k}] += p;
      jacobi[{ab.j, cd.j, ab.i, cd.k}] += p;
    }
  }
  for (const auto& [idx, sum] : jacobi) {
    // the sum is cyclic in (i,j,l); report each violating class once
    const std::array<int, 4> rot1{idx[1], idx[2], idx[0], idx[3]};
    const std::array<int, 4> rot2{idx[2], idx[0], idx[1], idx[3]};
    if (rot1 < idx || rot2 < idx) continue;
    if (!is_zero(sum)) {
      out.push_back({Violation::Kind::jacobi,
                     {idx[0], idx[1], idx[2], idx[3]},
                     "Jacobi identity fails at (i,j,l,m)=(" + std::to_string(idx[0]) +
                         "," + std::to_string(idx[1]) + "," + std::to_string(idx[2]) +
                         "," + std::to_string(idx[3]) + "): sum = " +
                         nilbniz::to_string(sum)});
    }
  }

  return out;
}

StructureTensor heisenberg_tensor(int n) {
  if (n < 1) throw std::invalid_argument("heisenberg_tensor requires n >= 1");
  std::vector<std::pair<Triple, Rational>> entries;
  entries.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    entries.push_back({Triple{i, n + i, 2 * n + 1}, Rational(1)});
  return StructureTensor::from_lower_entries(2 * n + 1, 2 * n, entries);
}

StructureTensor abelian_tensor(int dim, int dim_v1) {
  return StructureTensor::from_lower_entries(dim, dim_v1, {});
}

std::string to_string(const Violation& v) {
  const char* kind = nullptr;
  switch (v.kind) {
    case Violation::Kind::antisymmetry: kind = "antisymmetry"; break;
    case Violation::Kind::support: kind = "support"; break;
    case Violation::Kind::jacobi: kind = "jacobi"; break;
    case Violation::Kind::zero_entry: kind = "zero-entry"; break;
  }
  return std::string(kind) + ": " + v.message;
}

}  // namespace nilbniz
