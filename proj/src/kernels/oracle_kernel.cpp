#include <atomic>

#include "f2forms/kernels.hpp"

namespace f2forms::kernels {

namespace serial {

void expand_layer(std::span<const std::uint64_t> frontier, std::span<const std::uint64_t> generators,
                  std::vector<std::uint8_t>& table, std::uint8_t label) {
  for (std::uint64_t f : frontier) {
    for (std::uint64_t g : generators) {
      std::uint8_t& slot = table[f ^ g];
      if (slot == kUnreached) slot = label;
    }
  }
}

}  // namespace serial

namespace parallel {

void expand_layer(std::span<const std::uint64_t> frontier, std::span<const std::uint64_t> generators,
                  std::vector<std::uint8_t>& table, std::uint8_t label, int workers) {
  const int threads = resolve_workers(workers);
  const auto count = static_cast<std::int64_t>(frontier.size());
  // Every writer stores the same label, so the final table does not depend
  // on the interleaving.
#pragma omp parallel for num_threads(threads) schedule(dynamic, 64)
  for (std::int64_t i = 0; i < count; ++i) {
    const std::uint64_t f = frontier[static_cast<std::size_t>(i)];
    for (std::uint64_t g : generators) {
      std::atomic_ref<std::uint8_t> slot(table[f ^ g]);
      if (slot.load(std::memory_order_relaxed) == kUnreached) {
        slot.store(label, std::memory_order_relaxed);
      }
    }
  }
}

}  // namespace parallel

}  // namespace f2forms::kernels
