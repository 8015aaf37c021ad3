#pragma once

#include <json.hpp>

#include "critgraph/constructions.hpp"
#include "critgraph/criticality.hpp"
#include "critgraph/planarity.hpp"
#include "critgraph/schedules.hpp"
#include "critgraph/search.hpp"

namespace critgraph {

/// JSON views of the verification reports. Output depends only on the
/// report contents (no timestamps or timings), so identical runs produce
/// identical documents.

nlohmann::json to_json(const Coloring& c);
nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const CriticalityReport& r, const LabeledGraph* labels = nullptr);
nlohmann::json to_json(const PlanarityVerdict& v, const Graph& g);
nlohmann::json to_json(const DensityStats& d);
nlohmann::json to_json(const ScheduleReport& r);
nlohmann::json to_json(const Lemma1Report& r);
nlohmann::json to_json(const ExtremalResult& r);
nlohmann::json to_json(const Table1Report& r);

}  // namespace critgraph
