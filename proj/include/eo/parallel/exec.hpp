#pragma once

namespace eo::parallel {

enum class Exec { serial, parallel };

// Sets the OpenMP team size for later parallel regions; n <= 0 keeps the runtime default.
void set_threads(int n);
int max_threads();

}  // namespace eo::parallel
