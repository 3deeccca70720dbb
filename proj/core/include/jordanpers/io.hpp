#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jordanpers/distances.hpp"
#include "jordanpers/jordan.hpp"
#include "jordanpers/module.hpp"
#include "jordanpers/multirank.hpp"
#include "jordanpers/slices.hpp"

namespace jordanpers {

/// Point keys as used by the JSON schema: "x1,x2,..." for grids, "k" for
/// zigzag vertices, the element label for general posets.
std::string point_key(const Point& p, const Poset& poset);
Point parse_point_key(const std::string& key, const Poset& poset);

struct ParsedInput {
  PersModule module;
  std::optional<SliceSequence> slices;
};

/// Parses a module file:
///   {"prime": p, "poset": {...}, "dims": {...}, "maps": {...}, "slices": [...]}.
/// poset is {"type":"grid","shape":[...]}, {"type":"zigzag","n":..,
/// "orientation":"FFB..."} or {"type":"poset","elements":[...],
/// "covering":[[a,b],...]}. dims maps point keys to dimensions (missing
/// keys are 0); maps keys are "src->dst" over Hasse arrows with row-major
/// integer matrices, reduced mod p on load (omitted maps are zero).
/// prime_override takes precedence over the file's prime.
/// Throws SchemaError with field context on malformed input.
ParsedInput parse_module_text(const std::string& text,
                              std::optional<std::uint64_t> prime_override = std::nullopt);

std::string module_to_json_text(const PersModule& m,
                                const SliceSequence* slices = nullptr,
                                int indent = 2);

/// Accepts a bare JSON array of slices or an object {"slices": [...]}.
SliceSequence parse_slices_text(const std::string& text, const Poset& poset);

/// Certificate file {"epsilon": e, "phi": {key: matrix}, "psi": {key: matrix}};
/// phi components are keyed by points of m, psi by points of n.
InterleavingCertificate parse_certificate_text(const std::string& text,
                                               const PersModule& m,
                                               const PersModule& n);

// JSON renderings of results (deterministic: object keys are sorted).
std::string jordan_type_to_json(const JordanType& jt, int indent = 2);
std::string multirank_to_json(const MultirankVector& r, int indent = 2);
std::string barcode_to_json(const Barcode& b, int indent = 2);
std::string filtered_rank_to_json(const std::vector<RankInvariantTable>& tables,
                                  const Poset& poset, int indent = 2);
std::string erosion_report_to_json(const std::vector<DegreeErosion>& profile,
                                   ExtNat total, int indent = 2);
std::string stability_report_to_json(const StabilityReport& rep, int indent = 2);
std::string validation_report_to_json(const ValidationReport& rep,
                                      const std::vector<std::string>& warnings,
                                      int indent = 2);

}  // namespace jordanpers
