// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qec/logical_channel.hpp"

namespace qec::oracle {

/// Reference computation of the syndrome-averaged logical channel by dense
/// 2^7-dimensional simulation: encode, apply the per-qubit channels from the
/// defining expansion E(rho) = sum chi_ij P_i rho P_j, project onto every
/// syndrome subspace, apply the recovery, and read the logical action back
/// off the code space. Independent of the coset-sum engine: no phi phases,
/// no correctable-set bookkeeping.
ChiMatrix logical_chi_dense(const StabilizerCode& code, const DecoderTable& dec,
                            const NoiseAssignment& noise);

/// Average of the channel conjugated by each of the four Pauli frames,
/// computed through dense 2x2 channel actions. Equals twirl() exactly.
ChiMatrix twirl_frame_average(const ChiMatrix& chi);

}  // namespace qec::oracle
