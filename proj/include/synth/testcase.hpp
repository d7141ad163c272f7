#pragma once

#include <vector>

namespace synth {

// A concrete input vector: one entry per parameter position. Non-int
// positions hold 0 in int_values, and so on; pointer params get a float
// buffer whose length the size relations determine.
struct TestCase {
    std::vector<long long> int_values;
    std::vector<double> float_values;
    std::vector<std::vector<double>> buffers;
};

}  // namespace synth
