#pragma once

#include <cstddef>
#include <cstdint>

namespace b3::gf3 {

// Componentwise arithmetic on byte arrays of residues mod 3. Operands must be
// canonical (every byte 0, 1 or 2) and results are canonical. These loops sit
// under every basis sift and every group multiplication, so each operation has
// a scalar reference implementation and an AVX2 variant picked at runtime.
struct KernelTable {
  const char* name;
  void (*acc_add)(std::uint8_t* dst, const std::uint8_t* src, std::size_t n);  // dst += src
  void (*acc_sub)(std::uint8_t* dst, const std::uint8_t* src, std::size_t n);  // dst -= src
  void (*negate)(std::uint8_t* v, std::size_t n);                              // v = -v
};

const KernelTable& scalar_kernels();

// Null when the build target or the running CPU has no AVX2.
const KernelTable* avx2_kernels();

// Best table for this machine, chosen once. Setting B3_KERNEL=scalar or
// B3_KERNEL=avx2 in the environment forces the choice (unsupported forces
// fall back to scalar).
const KernelTable& active_kernels();

}  // namespace b3::gf3
