#include "unruhent/fock.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace unruhent::fock {

namespace {
constexpr double kPruneEps = 1e-14;
}

int FockBasisState::occupied_before(Slot s) const {
  const std::uint8_t below = static_cast<std::uint8_t>(bits_ & ((1u << slot_index(s)) - 1u));
  return std::popcount(below);
}

FockBasisState basis_with_slots(std::initializer_list<Slot> slots) {
  FockBasisState b;
  for (Slot s : slots) b = b.with(s);
  return b;
}

StateVector StateVector::vacuum() { return basis(FockBasisState{}); }

StateVector StateVector::basis(FockBasisState b) {
  StateVector v;
  v.amps_[b] = Complex{1.0, 0.0};
  return v;
}

Complex StateVector::amplitude(FockBasisState b) const {
  auto it = amps_.find(b);
  return it == amps_.end() ? Complex{0.0, 0.0} : it->second;
}

StateVector& StateVector::operator+=(const StateVector& other) {
  for (const auto& [b, a] : other.amps_) amps_[b] += a;
  prune();
  return *this;
}

StateVector& StateVector::operator*=(Complex factor) {
  for (auto& [b, a] : amps_) a *= factor;
  prune();
  return *this;
}

double StateVector::norm() const {
  double sq = 0.0;
  for (const auto& [b, a] : amps_) sq += std::norm(a);
  return std::sqrt(sq);
}

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  StateVector v = *this;
  v *= Complex{1.0 / n, 0.0};
  return v;
}

void StateVector::add_term(FockBasisState b, Complex factor) {
  amps_[b] += factor;
}

void StateVector::prune() {
  for (auto it = amps_.begin(); it != amps_.end();) {
    if (std::abs(it->second) < kPruneEps)
      it = amps_.erase(it);
    else
      ++it;
  }
}

StateVector operator+(StateVector a, const StateVector& b) {
  a += b;
  return a;
}

StateVector operator-(StateVector a, const StateVector& b) {
  StateVector nb = b;
  nb *= Complex{-1.0, 0.0};
  a += nb;
  return a;
}

StateVector operator*(Complex c, StateVector v) {
  v *= c;
  return v;
}

StateVector apply_creation(const StateVector& state, Slot slot) {
  StateVector out;
  for (const auto& [b, a] : state.amplitudes()) {
    if (b.occupied(slot)) continue;  // Pauli: amplitude dropped
    const double sign = (b.occupied_before(slot) % 2 == 0) ? 1.0 : -1.0;
    out.add_term(b.with(slot), sign * a);
  }
  return out;
}

StateVector apply_annihilation(const StateVector& state, Slot slot) {
  StateVector out;
  for (const auto& [b, a] : state.amplitudes()) {
    if (!b.occupied(slot)) continue;
    const double sign = (b.occupied_before(slot) % 2 == 0) ? 1.0 : -1.0;
    out.add_term(b.without(slot), sign * a);
  }
  return out;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  // Iterate over the sparser operand.
  const bool a_smaller = a.amplitudes().size() <= b.amplitudes().size();
  const StateVector& lhs = a_smaller ? a : b;
  const StateVector& rhs = a_smaller ? b : a;
  Complex sum{0.0, 0.0};
  for (const auto& [k, v] : lhs.amplitudes()) {
    const Complex other = rhs.amplitude(k);
    sum += a_smaller ? std::conj(v) * other : std::conj(other) * v;
  }
  return sum;
}

}  // namespace unruhent::fock
