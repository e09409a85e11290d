#pragma once

// JSON views of the main objects. Key order is fixed by nlohmann::json's
// sorted objects, so equal inputs dump to equal bytes.

#include <nlohmann/json.hpp>

#include "threepage/binding.hpp"
#include "threepage/nsis.hpp"
#include "threepage/pipeline.hpp"
#include "threepage/presentation.hpp"
#include "threepage/spanning.hpp"

namespace threepage {

nlohmann::json to_json(const CellComplex& cx);
nlohmann::json to_json(const ExtendedSpanningTree& y);
nlohmann::json to_json(const FaceSearchResult& r);
nlohmann::json to_json(const BindingSequence& seq);
nlohmann::json to_json(const ThreePagePresentation& p);
nlohmann::json to_json(const NsisResult& r);
nlohmann::json to_json(const ProbeReport& r);
nlohmann::json to_json(const Certificate& c);

/// Inverse of to_json(ThreePagePresentation). Throws ParseError on bad shape.
ThreePagePresentation presentation_from_json(const nlohmann::json& j);

}  // namespace threepage
