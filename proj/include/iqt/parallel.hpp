#pragma once

namespace iqt {

/// Worker-count control shared by every parallel kernel.  A count of 1
/// selects the serial reference path; the default honours OMP_NUM_THREADS
/// and the IQT_WORKERS environment variable.
void set_num_workers(int n);
int num_workers();
bool parallel_enabled();

} // namespace iqt
