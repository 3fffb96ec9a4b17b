#pragma once

#include <functional>
#include <thread>
#include <vector>

#include "ergokit/errors.hpp"

namespace ergokit {

// Runs body(i) for i in [0, count) over `jobs` workers. Each index writes
// only its own preassigned slot, so results are assembled in order and the
// output is identical for any job count.
inline void parallel_for(int count, int jobs,
                         const std::function<void(int)>& body) {
  if (jobs < 1) throw DomainError("job count must be >= 1");
  if (jobs == 1 || count <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  const int workers = std::min(jobs, count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int i = w; i < count; i += workers) body(i);
    });
  for (std::thread& th : pool) th.join();
}

}  // namespace ergokit
