#pragma once

#include <functional>

namespace hg {

void set_threads(int k);
int threads();

// Runs fn(i) for i in [0, n). Each index writes only its own output slot, so results
// do not depend on the thread count.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace hg
