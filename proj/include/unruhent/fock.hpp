#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>

namespace unruhent::fock {

using Complex = std::complex<double>;

enum class Subsystem : std::uint8_t { AliceMinkowski = 0, RobRegionI = 1, RobRegionIV = 2 };
enum class Spin : std::uint8_t { Up = 0, Down = 1 };

constexpr Spin opposite(Spin s) { return s == Spin::Up ? Spin::Down : Spin::Up; }

/// One fermionic mode slot in the single-mode setting. The canonical total
/// order
///   (Alice,up) < (Alice,down) < (I,up) < (I,down) < (IV,up) < (IV,down)
/// fixes every anticommutation sign in the project; all signs elsewhere are
/// derived from it, never chosen locally.
struct Slot {
  Subsystem subsystem;
  Spin spin;
};

inline constexpr int kSlotCount = 6;

constexpr int slot_index(Slot s) {
  return 2 * static_cast<int>(s.subsystem) + static_cast<int>(s.spin);
}

constexpr Slot slot_at(int index) {
  return Slot{static_cast<Subsystem>(index / 2), static_cast<Spin>(index % 2)};
}

/// Occupation bit pattern over the six slots; bit i corresponds to
/// slot_at(i). Pauli exclusion is structural: a slot is a single bit.
class FockBasisState {
 public:
  constexpr FockBasisState() = default;
  explicit constexpr FockBasisState(std::uint8_t bits) : bits_(bits) {}

  constexpr bool occupied(Slot s) const { return (bits_ >> slot_index(s)) & 1u; }
  constexpr std::uint8_t bits() const { return bits_; }

  /// Occupied slots strictly preceding `s` in the canonical order; the
  /// fermionic sign of a creation/annihilation at `s` is (-1)^(this).
  int occupied_before(Slot s) const;

  constexpr FockBasisState with(Slot s) const {
    return FockBasisState(static_cast<std::uint8_t>(bits_ | (1u << slot_index(s))));
  }
  constexpr FockBasisState without(Slot s) const {
    return FockBasisState(static_cast<std::uint8_t>(bits_ & ~(1u << slot_index(s))));
  }

  auto operator<=>(const FockBasisState&) const = default;

 private:
  std::uint8_t bits_ = 0;
};

/// Basis state occupied exactly at the given slots.
FockBasisState basis_with_slots(std::initializer_list<Slot> slots);

/// Sparse complex amplitudes over the 64 occupation basis states. Absent keys
/// mean amplitude zero; after arithmetic, amplitudes below 1e-14 in magnitude
/// are pruned. Values are immutable in spirit: every operation returns a new
/// vector.
class StateVector {
 public:
  StateVector() = default;  // the zero vector

  static StateVector vacuum();
  static StateVector basis(FockBasisState b);

  const std::map<FockBasisState, Complex>& amplitudes() const { return amps_; }
  Complex amplitude(FockBasisState b) const;
  bool is_zero() const { return amps_.empty(); }

  StateVector& operator+=(const StateVector& other);
  StateVector& operator*=(Complex factor);

  double norm() const;
  StateVector normalized() const;  // throws std::invalid_argument on the zero vector

  /// Accumulate factor * |b>; used by the operator kernels.
  void add_term(FockBasisState b, Complex factor);
  void prune();

 private:
  std::map<FockBasisState, Complex> amps_;
};

StateVector operator+(StateVector a, const StateVector& b);
StateVector operator-(StateVector a, const StateVector& b);
StateVector operator*(Complex c, StateVector v);

/// c_slot^dagger. Basis states with the slot already filled are annihilated;
/// the rest acquire (-1)^(occupied slots preceding the target).
StateVector apply_creation(const StateVector& state, Slot slot);

/// c_slot; adjoint of apply_creation under inner_product, same sign rule.
StateVector apply_annihilation(const StateVector& state, Slot slot);

/// <a|b>, conjugate-linear in the first argument.
Complex inner_product(const StateVector& a, const StateVector& b);

}  // namespace unruhent::fock
