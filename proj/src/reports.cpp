#include "unitgraph/reports.hpp"

namespace unitgraph {

namespace {

std::string flag(bool b) { return b ? "true" : "false"; }

std::string optional_flag(const std::optional<bool>& b) { return b ? flag(*b) : "unknown"; }

std::string parts_text(const FiniteRing& ring, const std::vector<std::vector<Vertex>>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i != 0) out += '|';
        out += format_elements(ring, parts[i]);
    }
    return out;
}

std::string render(const Record& record, std::string_view separator) {
    std::string out;
    for (const auto& [key, value] : record) {
        out += key;
        out += separator;
        out += value;
        out += '\n';
    }
    return out;
}

}  // namespace

Record structure_record(const FiniteRing& ring, const StructureReport& report) {
    Record r;
    r.emplace_back("ring", ring.name());
    r.emplace_back("order", std::to_string(report.order));
    r.emplace_back("units", std::to_string(report.unit_count));
    r.emplace_back("commutative", flag(report.is_commutative));
    r.emplace_back("two_is_unit", flag(report.two_is_unit));
    r.emplace_back("radical", format_set(ring, report.radical.elements));
    r.emplace_back("radical_size", std::to_string(report.radical.size()));
    r.emplace_back("nilpotency_index", std::to_string(report.radical_nilpotency_index));
    if (report.maximal_left_ideals) {
        r.emplace_back("maximal_left_ideals", std::to_string(report.maximal_left_ideals->size()));
        std::string listing;
        for (const auto& m : *report.maximal_left_ideals) {
            if (!listing.empty()) listing += ' ';
            listing += format_set(ring, m.elements);
        }
        r.emplace_back("maximal_left_ideal_sets", listing);
    } else {
        r.emplace_back("maximal_left_ideals", "unknown");
    }
    r.emplace_back("local", optional_flag(report.is_local));
    r.emplace_back("residue_field_order",
                   report.residue_field_order ? std::to_string(*report.residue_field_order) : "-");
    r.emplace_back("division", flag(report.is_division));
    r.emplace_back("field", flag(report.is_field));
    return r;
}

Record invariant_record(const FiniteRing& ring, const InvariantReport& report) {
    Record r;
    r.emplace_back("ring", ring.name());
    r.emplace_back("vertices", std::to_string(ring.order()));
    r.emplace_back("omega", std::to_string(report.omega.size));
    r.emplace_back("omega_exact", flag(report.omega.exact));
    r.emplace_back("omega_witness", format_elements(ring, report.omega.witness));
    r.emplace_back("alpha", std::to_string(report.alpha.size));
    r.emplace_back("alpha_exact", flag(report.alpha.exact));
    r.emplace_back("alpha_witness", format_elements(ring, report.alpha.witness));
    if (report.chi.exact) {
        r.emplace_back("chi", std::to_string(report.chi.upper));
    } else {
        r.emplace_back("chi", "[" + std::to_string(report.chi.lower) + "," +
                                  std::to_string(report.chi.upper) + "]");
    }
    r.emplace_back("chi_exact", flag(report.chi.exact));
    r.emplace_back("bipartite", flag(report.bipartite.bipartite));
    if (!report.bipartite.bipartite) {
        r.emplace_back("odd_cycle", format_elements(ring, report.bipartite.odd_cycle));
    }
    r.emplace_back("complete_multipartite", flag(report.multipartite.complete));
    if (report.multipartite.complete) {
        r.emplace_back("r", std::to_string(report.multipartite.r()));
        r.emplace_back("parts", parts_text(ring, report.multipartite.parts));
    } else if (report.multipartite.violation) {
        const auto& t = *report.multipartite.violation;
        r.emplace_back("violation", ring.label(t[0]) + "~" + ring.label(t[1]) + "~" + ring.label(t[2]));
    }
    r.emplace_back("exact", flag(report.exact()));
    return r;
}

std::string render_human(const Record& record) { return render(record, ": "); }

std::string render_records(const Record& record) { return render(record, "\t"); }

}  // namespace unitgraph
