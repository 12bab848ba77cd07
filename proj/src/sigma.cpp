#include "nilbniz/sigma.hpp"

#include <stdexcept>

namespace nilbniz {

long SigmaIndex::total() const {
  long s = 0;
  for (const auto& [t, c] : counts) s += c;
  return s;
}

Integer SigmaIndex::factorial() const {
  Integer r(1);
  for (const auto& [t, c] : counts) r *= nilbniz::factorial(static_cast<unsigned long>(c));
  return r;
}

MultiIndex SigmaIndex::proj0(int d) const {
  MultiIndex out(static_cast<std::size_t>(d));
  for (const auto& [t, c] : counts) out[static_cast<std::size_t>(t.k - 1)] += c;
  return out;
}

MultiIndex SigmaIndex::proj1(int d) const {
  MultiIndex out(static_cast<std::size_t>(d));
  for (const auto& [t, c] : counts) out[static_cast<std::size_t>(t.i - 1)] += c;
  return out;
}

MultiIndex SigmaIndex::proj2(int d) const {
  MultiIndex out(static_cast<std::size_t>(d));
  for (const auto& [t, c] : counts) out[static_cast<std::size_t>(t.j - 1)] += c;
  return out;
}

void SigmaIndex::add(const Triple& t, int count) {
  if (count < 0) throw std::invalid_argument("negative sigma count");
  if (count == 0) return;
  counts[t] += count;
}

SigmaIndex SigmaIndex::transposed() const {
  SigmaIndex out;
  for (const auto& [t, c] : counts) out.counts[Triple{t.j, t.i, t.k}] = c;
  return out;
}

std::string to_string(const SigmaIndex& s) {
  if (s.counts.empty()) return "{}";
  std::string out = "{";
  bool first = true;
  for (const auto& [t, c] : s.counts) {
    if (!first) out += ", ";
    first = false;
    out += to_string(t) + ":" + std::to_string(c);
  }
  out += "}";
  return out;
}

long TauIndex::total() const {
  long s = 0;
  for (const auto& [q, c] : counts) s += c;
  return s;
}

Integer TauIndex::factorial() const {
  Integer r(1);
  for (const auto& [q, c] : counts) r *= nilbniz::factorial(static_cast<unsigned long>(c));
  return r;
}

MultiIndex TauIndex::proj0(int d) const {
  MultiIndex out(static_cast<std::size_t>(d));
  for (const auto& [q, c] : counts) out[static_cast<std::size_t>(q.k - 1)] += c;
  return out;
}

MultiIndex TauIndex::proj_factor(int d, int m) const {
  MultiIndex out(static_cast<std::size_t>(d));
  for (const auto& [q, c] : counts) {
    if (q.r == m) out[static_cast<std::size_t>(q.i - 1)] += c;
    if (q.s == m) out[static_cast<std::size_t>(q.j - 1)] += c;
  }
  return out;
}

void TauIndex::add(const Quint& q, int count) {
  if (count < 0) throw std::invalid_argument("negative tau count");
  if (count == 0) return;
  counts[q] += count;
}

}  // namespace nilbniz
