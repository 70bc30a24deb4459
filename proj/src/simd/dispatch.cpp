#include <atomic>

#include "vwa/simd/kernels.hpp"

namespace vwa::simd {

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detect_isa() {
  if (isa_supported(Isa::Avx2)) return Isa::Avx2;
  if (isa_supported(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

const KernelTable& kernels_for(Isa isa) {
  switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
    case Isa::Avx2: return avx2_kernels();
#endif
#if defined(__aarch64__)
    case Isa::Neon: return neon_kernels();
#endif
    default: return scalar_kernels();
  }
}

namespace {

struct Selection {
  std::atomic<Isa> isa;
  std::atomic<const KernelTable*> table;

  Selection() : isa(detect_isa()), table(&kernels_for(isa.load())) {}
};

Selection& selection() {
  static Selection s;
  return s;
}

}  // namespace

Isa active_isa() { return selection().isa.load(std::memory_order_relaxed); }

bool set_active_isa(Isa isa) {
  if (!isa_supported(isa)) return false;
  auto& s = selection();
  s.table.store(&kernels_for(isa), std::memory_order_relaxed);
  s.isa.store(isa, std::memory_order_relaxed);
  return true;
}

const KernelTable& active_kernels() {
  return *selection().table.load(std::memory_order_relaxed);
}

}  // namespace vwa::simd
