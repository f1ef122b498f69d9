#pragma once

// Internal: deterministic chunked fan-out/fan-in over a single-consumer
// producer. Workers pull fixed-size chunks under a lock, map them
// independently, and the partials are folded in chunk-index order, so the
// result is bit-identical for every thread count (including 1: the serial
// path runs the same map-then-fold arithmetic).

#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace dsum::detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested == 0) {
    unsigned hw = std::thread::hardware_concurrency();
    requested = hw == 0 ? 1 : hw;
  }
  return requested > 64 ? 64 : requested;
}

template <typename Item, typename Partial, typename Producer, typename MapFn, typename FoldFn>
Partial chunked_reduce(Producer&& produce, std::size_t chunk_size, unsigned threads,
                       MapFn&& map_chunk, Partial init, FoldFn&& fold) {
  if (chunk_size == 0) chunk_size = 1;
  threads = resolve_threads(threads);

  std::mutex produce_mutex;
  std::size_t next_chunk = 0;
  bool exhausted = false;
  std::exception_ptr failure;

  std::mutex results_mutex;
  std::vector<std::optional<Partial>> partials;

  auto worker = [&] {
    std::vector<Item> chunk;
    try {
      while (true) {
        chunk.clear();
        std::size_t index;
        {
          std::lock_guard lk(produce_mutex);
          if (exhausted) return;
          index = next_chunk++;
          while (chunk.size() < chunk_size) {
            auto item = produce();
            if (!item) {
              exhausted = true;
              break;
            }
            chunk.push_back(std::move(*item));
          }
        }
        if (chunk.empty()) return;
        Partial partial = map_chunk(chunk);
        {
          std::lock_guard lk(results_mutex);
          if (partials.size() <= index) partials.resize(index + 1);
          partials[index] = std::move(partial);
        }
      }
    } catch (...) {
      std::lock_guard lk(produce_mutex);
      if (!failure) failure = std::current_exception();
      exhausted = true;  // stop the other workers at their next pull
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  Partial acc = std::move(init);
  for (auto& p : partials)
    if (p) fold(acc, std::move(*p));
  return acc;
}

}  // namespace dsum::detail
