#pragma once

#include "skewcalc/blowup.hpp"
#include "skewcalc/oracle.hpp"
#include "skewcalc/pipeline.hpp"

#include <string>

#include "json.hpp"

namespace skewcalc {

using json = nlohmann::ordered_json;

json to_json(const ChowClass& c);
json to_json(const TensorClass& t);
json to_json(const EClass& e);
json to_json(const BlowupClass& b);
json to_json(const PairCount& pc);
json to_json(const ScrollTest& st);

/// Parse {"ambient": N, "coords": [["p/q", ...], ...]} into a curve.
RationalCurve curve_from_json(const json& j);
/// Parse {"ambient": N, "curve1": [...], "curve2": [...]}.
ScrollSpec scroll_from_json(const json& j);

/// Full pipeline report keyed by anchor names, for the count command.
json count_report(int ambient, long d, long g, bool emit_intermediates);
json classify_report(bool show_candidates);

} // namespace skewcalc
