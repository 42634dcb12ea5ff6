#include <atomic>
#include <cstdlib>
#include <string>

#include "critnum/error.hpp"
#include "critnum/kernels.hpp"

namespace critnum::kernels {

namespace {

const KernelTable* table_for(Backend backend) {
  switch (backend) {
    case Backend::Scalar:
      return &scalar_table();
    case Backend::Avx2:
#if defined(CRITNUM_HAVE_AVX2_TU)
      if (__builtin_cpu_supports("avx2")) return &avx2_table();
#endif
      return nullptr;
    case Backend::Neon:
#if defined(__aarch64__) || defined(_M_ARM64)
      return &neon_table();
#else
      return nullptr;
#endif
  }
  return nullptr;
}

const KernelTable* initial_table() {
  if (const char* forced = std::getenv("CRITNUM_KERNELS")) {
    const std::string name(forced);
    const Backend wanted = name == "avx2" ? Backend::Avx2
                           : name == "neon" ? Backend::Neon
                                            : Backend::Scalar;
    if (const auto* t = table_for(wanted)) return t;
    return &scalar_table();
  }
  for (auto b : {Backend::Avx2, Backend::Neon}) {
    if (const auto* t = table_for(b)) return t;
  }
  return &scalar_table();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

std::string_view to_string(Backend backend) {
  switch (backend) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "unknown";
}

bool available(Backend backend) { return table_for(backend) != nullptr; }

std::vector<Backend> available_backends() {
  std::vector<Backend> out;
  for (auto b : {Backend::Scalar, Backend::Avx2, Backend::Neon}) {
    if (available(b)) out.push_back(b);
  }
  return out;
}

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

Backend active_backend() { return active().backend; }

void set_backend(Backend backend) {
  const auto* t = table_for(backend);
  if (!t) {
    fail(ErrorCode::BackendUnavailable,
         "kernel backend '" + std::string(to_string(backend)) + "' is not available on this CPU");
  }
  current().store(t, std::memory_order_release);
}

ScopedBackend::ScopedBackend(Backend backend) : previous_(active_backend()) { set_backend(backend); }

ScopedBackend::~ScopedBackend() { set_backend(previous_); }

}  // namespace critnum::kernels
