#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "unruhent/fock.hpp"

using namespace unruhent::fock;
using testsupport::state_distance;

namespace {

constexpr Slot kAliceUp{Subsystem::AliceMinkowski, Spin::Up};
constexpr Slot kIUp{Subsystem::RobRegionI, Spin::Up};
constexpr Slot kIDown{Subsystem::RobRegionI, Spin::Down};
constexpr Slot kIVUp{Subsystem::RobRegionIV, Spin::Up};
constexpr Slot kIVDown{Subsystem::RobRegionIV, Spin::Down};

StateVector basis_of(std::initializer_list<Slot> slots) {
  return StateVector::basis(basis_with_slots(slots));
}

}  // namespace

TEST_CASE("slot order is Alice < I < IV with up before down") {
  CHECK(slot_index(kAliceUp) == 0);
  CHECK(slot_index(Slot{Subsystem::AliceMinkowski, Spin::Down}) == 1);
  CHECK(slot_index(kIUp) == 2);
  CHECK(slot_index(kIDown) == 3);
  CHECK(slot_index(kIVUp) == 4);
  CHECK(slot_index(kIVDown) == 5);
  for (int i = 0; i < kSlotCount; ++i) CHECK(slot_index(slot_at(i)) == i);
}

TEST_CASE("creation into an empty region-IV slot carries no sign") {
  const StateVector out = apply_creation(StateVector::vacuum(), kIVDown);
  CHECK(state_distance(out, basis_of({kIVDown})) == doctest::Approx(0.0));
}

TEST_CASE("creation past an occupied earlier slot flips sign") {
  // d+_{IV,down} |up>_I |0>_IV = -|up>_I |down>_IV
  const StateVector start = basis_of({kIUp});
  const StateVector out = apply_creation(start, kIVDown);
  CHECK(out.amplitude(basis_with_slots({kIUp, kIVDown})) == Complex{-1.0, 0.0});
}

TEST_CASE("creating twice on the same slot annihilates") {
  for (int i = 0; i < kSlotCount; ++i) {
    const Slot s = slot_at(i);
    CHECK(apply_creation(apply_creation(StateVector::vacuum(), s), s).is_zero());
  }
  CHECK(apply_creation(basis_of({kIUp}), kIUp).is_zero());
}

TEST_CASE("annihilation undoes the first creation") {
  const StateVector out = apply_annihilation(basis_of({kIUp}), kIUp);
  CHECK(state_distance(out, StateVector::vacuum()) == doctest::Approx(0.0));
  for (int i = 0; i < kSlotCount; ++i)
    CHECK(apply_annihilation(StateVector::vacuum(), slot_at(i)).is_zero());
}

TEST_CASE("annihilation is the adjoint of creation") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const StateVector a = testsupport::random_sparse_state(rng);
    const StateVector v = testsupport::random_sparse_state(rng);
    for (int i = 0; i < kSlotCount; ++i) {
      const Slot s = slot_at(i);
      const Complex lhs = inner_product(a, apply_creation(v, s));
      const Complex rhs = inner_product(apply_annihilation(a, s), v);
      CHECK(std::abs(lhs - rhs) < 1e-12);
    }
  }
}

TEST_CASE("anticommutators hold exactly on all 64 basis states") {
  for (int bits = 0; bits < 64; ++bits) {
    const StateVector v = StateVector::basis(FockBasisState(static_cast<std::uint8_t>(bits)));
    for (int i = 0; i < kSlotCount; ++i) {
      for (int j = 0; j < kSlotCount; ++j) {
        const Slot si = slot_at(i), sj = slot_at(j);
        // {c_i, c_j} = 0
        const StateVector cc =
            apply_annihilation(apply_annihilation(v, sj), si) +
            apply_annihilation(apply_annihilation(v, si), sj);
        CHECK(cc.is_zero());
        // {c_i, c+_j} = delta_ij
        const StateVector mixed =
            apply_annihilation(apply_creation(v, sj), si) +
            apply_creation(apply_annihilation(v, si), sj);
        if (i == j)
          CHECK(state_distance(mixed, v) == doctest::Approx(0.0));
        else
          CHECK(mixed.is_zero());
      }
    }
  }
}

TEST_CASE("{c, c+} = 1 on random sparse states") {
  std::mt19937 rng(202);
  for (int trial = 0; trial < 10; ++trial) {
    const StateVector v = testsupport::random_sparse_state(rng);
    for (int i = 0; i < kSlotCount; ++i) {
      const Slot s = slot_at(i);
      const StateVector sum = apply_annihilation(apply_creation(v, s), s) +
                              apply_creation(apply_annihilation(v, s), s);
      CHECK(state_distance(sum, v) < 1e-12);
    }
  }
}

TEST_CASE("reordering two distinct creations flips the sign") {
  for (int i = 0; i < kSlotCount; ++i) {
    for (int j = 0; j < kSlotCount; ++j) {
      if (i == j) continue;
      const Slot si = slot_at(i), sj = slot_at(j);
      const StateVector ij = apply_creation(apply_creation(StateVector::vacuum(), sj), si);
      const StateVector ji = apply_creation(apply_creation(StateVector::vacuum(), si), sj);
      CHECK((ij + ji).is_zero());
    }
  }
}

TEST_CASE("inner product is conjugate-linear in the first argument") {
  const StateVector u = basis_of({kIUp});
  const StateVector w = basis_of({kIUp}) + basis_of({kIDown});
  const Complex c{0.3, -1.2};
  CHECK(std::abs(inner_product(c * u, w) - std::conj(c) * inner_product(u, w)) < 1e-14);
  CHECK(std::abs(inner_product(u, c * w) - c * inner_product(u, w)) < 1e-14);
}

TEST_CASE("basis states are orthonormal") {
  CHECK(inner_product(StateVector::vacuum(), basis_of({kIUp})) == Complex{0.0, 0.0});
  const StateVector v = (Complex{3.0, 4.0} * basis_of({kIUp})).normalized();
  CHECK(std::abs(inner_product(v, v) - Complex{1.0, 0.0}) < 1e-14);
}

TEST_CASE("cancelling amplitudes are pruned") {
  const StateVector v = basis_of({kIUp, kIVDown});
  CHECK((v - v).is_zero());
  CHECK((Complex{0.0, 0.0} * v).is_zero());
}

TEST_CASE("normalizing the zero vector is rejected") {
  CHECK_THROWS_AS(StateVector().normalized(), std::invalid_argument);
}
