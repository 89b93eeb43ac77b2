#ifndef GHWLAB_PARALLEL_HPP
#define GHWLAB_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace ghwlab {

/// Runs body(chunk) for chunk in [0, chunks) on up to `threads` workers.
/// Exceptions from workers are rethrown on the caller (first chunk wins).
template <typename Body>
void parallel_chunks(std::uint64_t chunks, unsigned threads, Body&& body) {
  threads = std::max(1U, threads);
  if (threads == 1 || chunks <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) body(c);
    return;
  }
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> pool;
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::uint64_t c = w; c < chunks; c += workers) {
        try {
          body(c);
        } catch (...) {
          errors[c] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace ghwlab

#endif  // GHWLAB_PARALLEL_HPP
