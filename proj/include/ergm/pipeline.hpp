#pragma once

#include "ergm/config.hpp"
#include "ergm/degeneracy.hpp"
#include "ergm/geometry.hpp"
#include "ergm/likelihood.hpp"

#include "json.hpp"

namespace ergm {

/// JSON renderings shared by reports and by the error payloads the CLI
/// prints when an analysis fails. Rationals are "p/q" strings, floats are
/// %.17g strings, optionals appear only when set.
nlohmann::json certificate_to_json(const RintCertificate& cert);
nlohmann::json fit_result_to_json(const FitResult& fit);
nlohmann::json degeneracy_to_json(const DegeneracyReport& report);

/// Runs one configured analysis end to end: enumerate (through the cache),
/// geometry, then the mode's own sections. The returned report is a pure
/// function of the configuration except for its "timings" block, which is
/// wall-clock and excluded from any determinism guarantee.
///
/// Mode `all` never throws on a decided verdict: it fits when the target is
/// interior, explains (certificate only) on the boundary, and attaches the
/// degeneracy trajectory when the target is outside. The single-purpose
/// modes throw instead: fit raises NoMleError off the interior, degeneracy
/// raises NotSeparable inside the hull.
nlohmann::json run_pipeline(const RunConfig& config);

}  // namespace ergm
