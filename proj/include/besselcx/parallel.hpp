#pragma once

#include <cstddef>
#include <functional>

namespace besselcx {

/// Worker count: BESSELCX_THREADS if set and positive, else the hardware
/// concurrency.
int worker_count();

/// Runs body(i) for i in [0, n). Results must be written to slots indexed by
/// i; the call order across workers is unspecified. The first exception thrown
/// by any body is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace besselcx
