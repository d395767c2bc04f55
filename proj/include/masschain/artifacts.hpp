#pragma once

// Emission of figure artifacts: CSV/JSON are the authoritative data, SVG is
// rendered deterministically from the same in-memory values.

#include <iosfwd>

#include <json.hpp>

#include "masschain/config.hpp"

namespace masschain {

struct FigureArtifact {
    std::string kind;
    std::vector<std::string> data_files;
    std::string svg_file;
};

FigureArtifact emit_response(const RunConfig& rc);
FigureArtifact emit_contour(const RunConfig& rc);
FigureArtifact emit_nyquist(const RunConfig& rc);
FigureArtifact emit_stability(const RunConfig& rc, std::ostream& out);
FigureArtifact emit_bound(const RunConfig& rc, std::ostream& out);
FigureArtifact emit_fixed_point(const RunConfig& rc, std::ostream& out);
FigureArtifact emit_dseq(const RunConfig& rc, std::ostream& out);

nlohmann::json stability_to_json(const StabilityReport& rep);
nlohmann::json bound_to_json(const BoundReport& rep);

// Scientific notation with 13 significant digits (CSV convention).
std::string csv_num(double v);

} // namespace masschain
