#pragma once

#include <functional>

namespace compsil {

// Resolves a worker count: explicit request > COMPOSITE_SIL_THREADS > hardware.
int resolve_threads(int requested);

// Runs fn(i) for i in [0, n) across up to `threads` workers in contiguous
// blocks. Callers must keep per-i work independent; result assembly stays
// deterministic because each i writes only its own slot.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

}  // namespace compsil
