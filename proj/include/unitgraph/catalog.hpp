#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace unitgraph {

struct CatalogEntry {
    std::string spec;   // canonical DSL text
    std::string notes;  // which checks the ring exercises
};

/// The fixed default catalog, in run order.
const std::vector<CatalogEntry>& default_catalog();

/// Entries whose realized order is at most max_order.
std::vector<CatalogEntry> catalog_up_to(std::uint64_t max_order);

/// Looks a spec up by canonical form ("Z3xZ5" finds "Z3 x Z5").
std::optional<CatalogEntry> find_catalog_entry(std::string_view spec_text);

}  // namespace unitgraph
