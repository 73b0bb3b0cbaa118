// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>
#include <vector>

#include "qec/chi_matrix.hpp"
#include "qec/decoder.hpp"

namespace qec {

/// Ordered per-qubit noise for one code block. Entries may differ.
struct NoiseAssignment {
    std::array<ChiMatrix, 7> per_qubit;

    static NoiseAssignment uniform(const ChiMatrix& chi) {
        NoiseAssignment a;
        a.per_qubit.fill(chi);
        return a;
    }
    NoiseAssignment twirled() const;
    bool operator==(const NoiseAssignment& o) const = default;
};

struct LogicalChannel {
    ChiMatrix chi;
    int level = 1;
    bool twirled_input = false;
};

enum class EnginePath { Auto, General, Rank1, Diagonal };

/// Exact syndrome-averaged logical chi-matrix of the code under per-qubit
/// noise:
///
///   chi_bar(l,m) = sum over syndromes s, correctable E, E' with s(E)=s(E')=s
///                  of phi(E,l) conj(phi(E',m)) chi(|E P_l|, |P_m E'|)
///
/// where the 7-qubit chi entry is the product of per-qubit entries. The coset
/// structure (E = |R_s S_i|) and the phases phi are tabulated once at
/// construction; evaluation is pure and thread-safe.
///
/// Three algebraically identical evaluation routes are kept: the general
/// triple sum, a factorized route for rank-1 (unitary) per-qubit chi, and a
/// diagonal route for Pauli channels. Auto dispatches on input structure.
class LogicalEngine {
  public:
    LogicalEngine(const StabilizerCode& code, const DecoderTable& decoder);

    ChiMatrix logical_chi(const NoiseAssignment& noise, EnginePath path = EnginePath::Auto) const;
    double logical_infidelity(const NoiseAssignment& noise,
                              EnginePath path = EnginePath::Auto) const;

    /// 1 - chi_bar(0,0) with the coset sums accumulated in 128-bit floats.
    /// Independent precision cross-check for the trace-complement deficit
    /// used by gain_ladder; exact to deficits ~1e-25 for physical inputs.
    double logical_deficit_hp(const NoiseAssignment& noise) const;

    const StabilizerCode& code() const { return code_; }
    const DecoderTable& decoder() const { return decoder_; }

    /// Tolerance for the output invariant check (Hermitian/trace/PSD).
    static constexpr double kOutputTol = 1e-9;

  private:
    struct Row {
        std::array<uint8_t, 7> letters;  // per-qubit letter of |E P_l|
        uint8_t phase_exp;               // phi(E, l) = i^phase_exp
    };

    ChiMatrix eval_general(const NoiseAssignment& noise) const;
    ChiMatrix eval_rank1(const std::array<Eigen::Vector4cd, 7>& coeffs) const;
    ChiMatrix eval_diagonal(const NoiseAssignment& noise) const;

    const StabilizerCode& code_;
    const DecoderTable& decoder_;
    // rows_[l][s][i] describes the i-th correctable error of syndrome s,
    // lifted by logical representative l.
    std::vector<std::array<std::array<Row, 64>, 64>> rows_;
};

/// Free-function forms matching the operation contracts; they build a static
/// engine for the Steane code on first use.
ChiMatrix logical_chi(const StabilizerCode& code, const DecoderTable& dec,
                      const NoiseAssignment& noise);
double logical_infidelity(const StabilizerCode& code, const DecoderTable& dec,
                          const NoiseAssignment& noise);

/// Hard-decoder concatenation. blocks must hold 7^(levels-1) level-1
/// assignments (one per leaf block); each level's logical channels become the
/// per-qubit inputs one level up. Identical inputs are evaluated once.
LogicalChannel concatenate(const LogicalEngine& engine, const std::vector<NoiseAssignment>& blocks,
                           int levels, bool twirl_inputs = false);
LogicalChannel concatenate(const LogicalEngine& engine, const NoiseAssignment& base, int levels,
                           bool twirl_inputs = false);

enum class GainClass { Gain, Loss, Grey, Undefined };
std::string to_string(GainClass c);

/// One experiment datum: infidelities with and without twirled inputs at one
/// concatenation level, their ratio, and the 10% grey-zone classification.
struct GainRecord {
    std::string model;
    double param = 0.0;   // model-specific noise-strength handle
    double r_phys = 0.0;  // mean physical process infidelity across qubits
    uint64_t seed = 0;
    int64_t sample = -1;
    int level = 1;
    double r_raw = 0.0;
    double r_twirled = 0.0;
    double delta = 0.0;
    GainClass classification = GainClass::Undefined;
};

GainClass classify_gain(double r_raw, double r_twirled);

/// Deficits below this are treated as indistinguishable from the identity and
/// the gain record is flagged Undefined instead of classified.
inline constexpr double kInfidelityFloor = 1e-25;

/// The infidelity deficit read off the trace complement chi(1,1) + chi(2,2) +
/// chi(3,3). Identical to 1 - chi(0,0) for a trace-preserving channel, but
/// each term is a sum of small positive-magnitude products, so the deficit
/// keeps full relative precision arbitrarily close to the identity (far
/// below the 1e-16 quantization of 1 - chi(0,0)).
double deficit_by_trace_complement(const ChiMatrix& chi);

/// Runs the concatenation twice (raw inputs, twirled inputs) and emits one
/// record per level from 1 to levels.
std::vector<GainRecord> gain_ladder(const LogicalEngine& engine,
                                    const std::vector<NoiseAssignment>& blocks, int levels);
GainRecord gain_delta(const LogicalEngine& engine, const std::vector<NoiseAssignment>& blocks,
                      int levels);

}  // namespace qec
