#pragma once

#include <string>
#include <utility>
#include <vector>

#include "unitgraph/finite_ring.hpp"
#include "unitgraph/invariants.hpp"
#include "unitgraph/structure.hpp"

namespace unitgraph {

/// Ordered key/value pairs; values never contain tabs or newlines.
using Record = std::vector<std::pair<std::string, std::string>>;

Record structure_record(const FiniteRing& ring, const StructureReport& report);
Record invariant_record(const FiniteRing& ring, const InvariantReport& report);

/// "key: value" lines.
std::string render_human(const Record& record);
/// "key<TAB>value" lines.
std::string render_records(const Record& record);

}  // namespace unitgraph
