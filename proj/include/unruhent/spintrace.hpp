#pragma once

#include <string>
#include <vector>

#include "unruhent/density.hpp"
#include "unruhent/entanglement.hpp"

namespace unruhent::spintrace {

/// Total-spin label of the Alice+Rob system: singlet, triplet (J=1, Jz) or
/// doublet (J=1/2, Jz).
enum class TotalSpin { Singlet, TripletPlus, TripletZero, TripletMinus, DoubletPlus, DoubletMinus };

std::string spin_label(TotalSpin j);

/// Element of the occupation-number x total-spin basis. Alice holds n_a in
/// {0,1} (the pair level is never populated on her side), Rob n_r in {0,1,2}.
struct OccupationSpinBasisElement {
  int alice_occupation;
  int rob_occupation;
  TotalSpin spin;
};

/// Only specific (n_a, n_r, J) combinations exist: the vacuum and the Rob
/// pair are singlets, a lone particle is a doublet, and the (1,1) sector
/// splits into the three triplets plus the singlet.
bool is_allowed(const OccupationSpinBasisElement& element);

/// The twelve allowed elements, ordered by (n_a, n_r), then by the TotalSpin
/// enumeration. This order is the basis of to_occupation_totalspin's output.
const std::vector<OccupationSpinBasisElement>& occupation_spin_basis();

std::string label(const OccupationSpinBasisElement& element);

/// Unitary change from the 16-dim standard (occupation x individual spin)
/// basis to occupation x total spin:
///   |0,0> = |00>|S>,  |0,s> = |01>|D_s>,  |0,ud> = |02>|S>,  |s,0> = |10>|D_s>,
///   |u,u> = |11>|T+>, |d,d> = |11>|T->,   |s,ud> = |12>|D_s>,
///   |u,d> = (|11>|T0> + |11>|S>)/sqrt(2), |d,u> = (|11>|T0> - |11>|S>)/sqrt(2).
/// Rejects inputs with support on Alice's pair level, which lies outside the
/// dictionary.
density::DensityMatrix to_occupation_totalspin(const density::DensityMatrix& rho_ar);

/// Erase the total-spin information, keeping occupation numbers: sum the
/// (J, Jz)-diagonal blocks into a 6-dim matrix over {00,01,02,10,11,12}.
/// Matrix elements between different occupation sectors are retained only in
/// the singlet channel; the doublet labels of distinct sectors describe
/// different particle contents and do not interfere. Trace is preserved
/// exactly.
density::DensityMatrix trace_out_total_spin(const density::DensityMatrix& rho);

/// Full pipeline to the occupation-number state: general state -> Tr_IV ->
/// basis change -> total-spin erasure.
density::DensityMatrix occupation_rho(const entanglement::StateParams& params,
                                      const rindler::SqueezingParams& p);

/// Closed form of the occupation negativity,
///   N = 2 cos^2 r |mu^2 sin^2 r - mu sqrt(mu^2 sin^4 r + cos^2 r |beta-gamma|^2 / 2)|,
/// equal to the numeric negativity of occupation_rho.
double occupation_negativity(const entanglement::StateParams& params, double r);

/// The six closed-form eigenvalues of the partially transposed occupation
/// state, in the block order mu^2 c^4, mu^2 s^4, (1-mu^2) c^2, (1-mu^2) s^2,
/// c^2 (mu^2 s^2 +- mu sqrt(mu^2 s^4 + c^2 |beta-gamma|^2/2)).
std::vector<double> occupation_pt_spectrum(const entanglement::StateParams& params, double r);

/// The singlet choice mu = 1/sqrt(2), beta = -gamma = 1/2: the state whose
/// spin erasure yields the maximally entangled occupation state at r = 0.
entanglement::StateParams maximally_entangled_occupation_state();

}  // namespace unruhent::spintrace
