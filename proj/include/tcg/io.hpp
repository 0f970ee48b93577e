#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "tcg/cheeger.hpp"
#include "tcg/counterexample.hpp"
#include "tcg/graph.hpp"
#include "tcg/group.hpp"
#include "tcg/spectra.hpp"
#include "tcg/sweep.hpp"
#include "tcg/verify.hpp"

namespace tcg {

using Json = nlohmann::json;

// Group table text: "n", then n rows of n space-separated indices, then an
// optional "# label" line. Throws ParseError with a 1-based position for
// malformed text and Error(validation) for a table that is not a group.
GroupTable parse_group_table(std::string_view text);
FiniteGroup parse_group(std::string_view text);
std::string format_group(const FiniteGroup& g);

/// Two-space indented JSON with a trailing newline.
std::string dump(const Json& j);
/// Throws Error(parse) on malformed JSON.
Json parse_json(std::string_view text);

Json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

Json to_json(const RegularMultigraph& g);
RegularMultigraph graph_from_json(const Json& j);

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const SpectrumResult& s);
SpectrumResult spectrum_from_json(const Json& j);

Json to_json(const CheegerReport& c);
CheegerReport cheeger_from_json(const Json& j);

Json to_json(const VerificationRecord& r);
VerificationRecord record_from_json(const Json& j);

/// Rejects unknown keys with Error(usage).
Json to_json(const SweepConfig& c);
SweepConfig sweep_config_from_json(const Json& j);

Json to_json(const SweepReport& r);
SweepReport sweep_report_from_json(const Json& j);

Json to_json(const ScanReport& r);
ScanReport scan_report_from_json(const Json& j);

}  // namespace tcg
