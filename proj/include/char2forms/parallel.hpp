#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace char2forms {

/// Worker count: CHAR2FORMS_THREADS when set, hardware concurrency otherwise.
int thread_count();

/// Splits [0, total) into contiguous chunks and runs fn(begin, end) on each
/// worker thread. fn must not share mutable state across chunks.
void parallel_chunks(std::uint64_t total,
                     const std::function<void(std::uint64_t, std::uint64_t)>& fn);

}  // namespace char2forms
