#pragma once

#include <cstddef>
#include <functional>

namespace cwilf {

unsigned default_jobs();

// Runs fn(0..count-1) across up to `jobs` worker threads. Exceptions from
// workers are rethrown on the calling thread.
void parallel_for(unsigned jobs, std::size_t count,
                  const std::function<void(std::size_t)>& fn);

}  // namespace cwilf
