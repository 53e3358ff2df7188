#pragma once

#include <cstddef>
#include <functional>

namespace bb {

/// Worker count used by per-source loops. 0 means hardware concurrency.
void set_thread_count(std::size_t n);
std::size_t thread_count();

/// Runs body(begin, end) over [0, n) split into fixed blocks of `block`
/// items. Block boundaries do not depend on the worker count, so callers that
/// keep one accumulator per block and merge blocks in order get results that
/// are bit-identical for any thread count.
void parallel_blocks(std::size_t n, std::size_t block,
                     const std::function<void(std::size_t block_index, std::size_t begin, std::size_t end)>& body);

inline std::size_t block_count(std::size_t n, std::size_t block) { return (n + block - 1) / block; }

}  // namespace bb
