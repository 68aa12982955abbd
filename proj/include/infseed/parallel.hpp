#pragma once

namespace infseed {

/// Worker threads used by parallel loops. Results never depend on it.
int thread_count();
/// n <= 0 restores the OpenMP default.
void set_thread_count(int n);

}  // namespace infseed
