#pragma once

#include "z4rm/code.hpp"

namespace z4rm {

enum class InnerProductKind { standard, kronecker };

/// Standard inner product over the ring: sum of u_i * v_i mod 4.
std::uint8_t standard_inner(const Z4Vector& u, const Z4Vector& v);

/// Diagonal of K_N, the log2(N)-fold Kronecker power of diag(1, 3). Entry i
/// is 3^popcount(i) mod 4; the diagonal is componentwise self-inverse.
/// N must be a power of two (N = 1 gives the empty product, diagonal (1)).
Z4Vector kronecker_diagonal(std::size_t length);

/// Kronecker inner product u . K_N . v^t = sum of u_i * k_i * v_i mod 4.
std::uint8_t kronecker_inner(const Z4Vector& u, const Z4Vector& v);

std::uint8_t inner_product(const Z4Vector& u, const Z4Vector& v, InnerProductKind kind);

/// Dual code {u : <u,v> = 0 for all v in C}. The standard dual is the kernel
/// of the generator matrix; the Kronecker dual is the standard dual with each
/// word multiplied componentwise by the K_N diagonal. |C| * |C-dual| = 4^N.
QuaternaryCode dual_code(const QuaternaryCode& code, InnerProductKind kind);

/// True iff every generator row of a is orthogonal to every generator row of
/// b under the given product and log4(|a| * |b|) = N.
bool verify_dual_pair(const QuaternaryCode& a, const QuaternaryCode& b, InnerProductKind kind);

/// Lee weight enumerator transform: with counts c_w over weights 0..2N the
/// transformed coefficients are those of sum_w c_w (x+y)^(2N-w) (x-y)^w
/// divided by the code size. By the MacWilliams identity this equals the
/// dual's Lee weight distribution.
std::vector<std::uint64_t> macwilliams_transform(const LeeWeightDistribution& dist,
                                                 std::uint64_t code_size);

/// Checks the dual's enumerated Lee weight distribution against the
/// MacWilliams transform of the code's, and (for power-of-two lengths) that
/// the standard and Kronecker duals share one distribution.
bool macwilliams_check(const QuaternaryCode& code, InnerProductKind kind,
                       std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace z4rm
