#include <cstdlib>
#include <string>

#include "mnhd/kernels.hpp"

namespace mnhd::kernels {

#if defined(MNHD_HAVE_AVX2)
const KernelTable* avx2_table_impl();
#endif
#if defined(MNHD_HAVE_NEON)
const KernelTable* neon_table_impl();
#endif

const KernelTable* avx2_table() {
#if defined(MNHD_HAVE_AVX2)
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  }();
  return supported ? avx2_table_impl() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable* neon_table() {
#if defined(MNHD_HAVE_NEON)
  return neon_table_impl();  // mandatory on AArch64
#else
  return nullptr;
#endif
}

std::vector<const KernelTable*> available_tables() {
  std::vector<const KernelTable*> out{&scalar_table()};
  if (auto* t = avx2_table()) out.push_back(t);
  if (auto* t = neon_table()) out.push_back(t);
  return out;
}

namespace {

const KernelTable* find(std::string_view name) {
  for (const auto* t : available_tables())
    if (t->name == name) return t;
  return nullptr;
}

const KernelTable*& current() {
  static const KernelTable* table = [] {
    if (const char* env = std::getenv("MNHD_KERNELS"))
      if (const auto* t = find(env)) return t;
    return available_tables().back();
  }();
  return table;
}

}  // namespace

const KernelTable& active() { return *current(); }

bool select(std::string_view name) {
  const auto* t = find(name);
  if (t == nullptr) return false;
  current() = t;
  return true;
}

}  // namespace mnhd::kernels
