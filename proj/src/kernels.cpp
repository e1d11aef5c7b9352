#include "ntewt/kernels.hpp"

#include <atomic>

namespace ntewt::kernels {

#if !(defined(__x86_64__) || defined(_M_X64) || defined(__i386__))
const Ops* avx2() { return nullptr; }
#endif

#if !(defined(__aarch64__) || defined(__ARM_NEON))
const Ops* neon() { return nullptr; }
#endif

namespace {

const Ops* pick_best() {
  if (const Ops* ops = avx2()) return ops;
  if (const Ops* ops = neon()) return ops;
  return &scalar();
}

std::atomic<const Ops*>& active_slot() {
  static std::atomic<const Ops*> slot{pick_best()};
  return slot;
}

}  // namespace

const Ops& active() { return *active_slot().load(std::memory_order_relaxed); }

void set_active(const Ops& ops) {
  active_slot().store(&ops, std::memory_order_relaxed);
}

}  // namespace ntewt::kernels
