#pragma once

#include <vector>

namespace kharper {

enum class SeriesKind { quantum, classical, noise_averaged };

// Per-kick expectation <p>: entry n-1 holds <p> after kick n.
struct CurrentSeries {
    std::vector<double> values;
    SeriesKind kind = SeriesKind::quantum;

    std::size_t kicks() const { return values.size(); }
};

}  // namespace kharper
