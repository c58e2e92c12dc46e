#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace twyb {

/// Splits [0, count) into at most `jobs` contiguous chunks and runs
/// body(chunk_index, begin, end) for each, on its own thread when jobs > 1.
/// Returns the number of chunks so callers can merge per-chunk results in order.
template <class Body>
std::size_t parallel_chunks(std::size_t count, unsigned jobs, Body&& body) {
  std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(jobs, count));
  if (count == 0) chunks = 1;
  std::size_t step = (count + chunks - 1) / chunks;
  if (chunks == 1) {
    body(std::size_t{0}, std::size_t{0}, count);
    return 1;
  }
  std::vector<std::jthread> workers;
  workers.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    std::size_t begin = std::min(count, c * step);
    std::size_t end = std::min(count, begin + step);
    workers.emplace_back([&body, c, begin, end] { body(c, begin, end); });
  }
  return chunks;
}

}  // namespace twyb
