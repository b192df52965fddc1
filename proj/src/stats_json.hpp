#pragma once

#include "coauthnet/report.hpp"
#include "json_writer.hpp"

namespace coauthnet::detail {

/// Object with keys range, nodes, components, clusters, mean_distance,
/// modularity; absent statistics are null.
void write_stats_row(JsonWriter& w, const StatsRow& row);

} // namespace coauthnet::detail
