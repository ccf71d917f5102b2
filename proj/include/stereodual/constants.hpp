#pragma once

namespace stereodual {

/// Normalization c in the reduced monopole bracket
///
///   {p_i, p_j} = c * s * eps_ijk u_k / |u|^3,    s = J/2,
///
/// for the KS variables u = z sigma zbar, p = (z sigma pi + pibar sigma zbar)/(2 z zbar)
/// under the bracket sign {pi_a, z^b} = delta_a^b.
///
/// Measured once by brute force: five-point finite-difference brackets of the
/// KS component functions at the seed-7 sample point give
/// {p1,p2} |u|^3 / (s u3) = 1.0000000000 (and the same for the cyclic pairs).
/// tests/test_duality.cpp re-measures it.
inline constexpr double kMonopoleBracketConstant = 1.0;

}  // namespace stereodual
