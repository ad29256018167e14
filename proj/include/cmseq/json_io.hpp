#pragma once

#include "cmseq/genfun.hpp"
#include "cmseq/hausdorff.hpp"
#include "cmseq/seqcore.hpp"
#include "cmseq/spectra.hpp"

#include <json.hpp>

namespace cmseq {

using Json = nlohmann::json;

/// Exact scalars serialize as "num/den" (or integer) strings; floating
/// ones as JSON numbers. Parsing inverts both forms.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, ScalarKind mode = ScalarKind::exact);

Json sequence_to_json(const Sequence& c);
Sequence sequence_from_json(const Json& j);

Json report_to_json(const MonotonicityReport& rep);
MonotonicityReport report_from_json(const Json& j);

Json pick_report_to_json(const PickScanReport& rep);

Json estimate_to_json(const DistributionEstimate& est);

Json spectra_to_json(const SpectraConfig& cfg, const std::vector<MomentEstimate>& moments);
std::vector<MomentEstimate> spectra_moments_from_json(const Json& j);

}  // namespace cmseq
