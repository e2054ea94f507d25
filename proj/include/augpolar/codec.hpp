#pragma once

#include "augpolar/construction.hpp"

namespace augpolar {

// x = u * F^{kron n} over GF(2), F = [[1,0],[1,1]], natural order
// (no bit-reversal permutation), n butterfly stages in place.
void encode_inplace(Bits& u);
Bits encode(Bits u);

// Explicit vector-matrix product against the materialized Kronecker power.
// O(N^2); refuses N > 4096. Kept as an independent check of the butterfly.
Bits encode_matrix_oracle(const Bits& u);

// Places info bits on info_set and semi bits on semi_set (both in ascending
// index order); frozen positions are zero.
Bits assemble_input(const CodeSpec& spec, const Bits& info_bits, const Bits& semi_bits);

}  // namespace augpolar
