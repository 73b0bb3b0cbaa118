// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace qec {

/// Level-1 closed forms for i.i.d. Z-rotation noise on the Steane code.
/// Evaluated in the cancellation-free sin^2 form, algebraically equal to
///   r(E1)   = (32 - 21 cos w - 14 cos 3w + 3 cos 7w) / 64
///   r(E1^T) = (256 - 231 cos w - 49 cos 3w + 21 cos 5w + 3 cos 7w) / 512
///   chi03   = -(i/8) sin^3 w (9 cos 2w + 3 cos 4w + 2)
struct ZRotClosedForms {
    double r_raw_l1;
    double r_twirled_l1;
    std::complex<double> chi03_l1;
};
ZRotClosedForms zrot_closed_forms(double omega);

/// The per-entry recursion polynomials, exactly as printed:
///   f00(z) = z^2 (63 - 434 z + 1260 z^2 - 1848 z^3 + 1344 z^4 - 384 z^5)
///   f03(z) = -2 z^3 (7 + 84 z^2 + 192 z^4)
///   g00(z) = z^2 (21 - 98 z + 210 z^2 - 252 z^3 + 168 z^4 - 48 z^5)
/// f00 and g00 are self-conjugate under z -> 1-z, so the same coefficients
/// recurse the infidelity deficit d = 1 - z directly.
double zrot_f00(double z);
std::complex<double> zrot_f03(std::complex<double> z);
double zrot_g00(double z);

/// One step of the printed recursion on (chi00, chi03). Twirled channels are
/// diagonal: g00 is applied and chi03 forced to zero.
std::pair<double, std::complex<double>> zrot_recursion_step(double z00,
                                                            std::complex<double> z03,
                                                            bool twirled);

/// Per-level Z-rotation data in deficit variables: d = 1 - chi00 and
/// m = -Im chi03 (chi03 = -i m along the Z-rotation trajectory).
struct ZRotLevel {
    int level;
    double r_raw;       // deficit of the un-twirled channel
    double r_twirled;   // deficit of the twirled channel
    double delta;       // r_raw / r_twirled
    double m_offdiag;   // off-diagonal magnitude of the un-twirled channel
};

/// Exact: the level recursion of the full coset-sum engine, specialized to
/// the Z sector and rewritten in deficit variables (underflow-free at any
/// level). d' couples to the off-diagonal at fourth order:
///   d' = d^2 (21 - 98 d + 210 d^2 - 252 d^3 + 168 d^4 - 48 d^5)
///        + m^4 (42 - 252 d + 504 d^2 - 336 d^3)
///   m' = m^3 (14 - 168 d + 504 d^2 - 672 d^3 + 336 d^4) + 48 m^7
/// LeadingOrder: the printed f00/f03/g00 single-entry iteration, a
/// leading-order approximation of the above: it drops the decoherence of
/// the off-diagonal by assuming the rank-1 relation m^2 = d(1-d) at every
/// level.
enum class ZLadderMethod { Exact, LeadingOrder };

std::vector<ZRotLevel> zrot_gain_ladder(double omega, int max_level,
                                        ZLadderMethod method = ZLadderMethod::Exact);

}  // namespace qec
