#pragma once

#include <string>
#include <vector>

#include "toric/geometry.hpp"
#include "toric/reeb.hpp"

namespace toric {

/// Plain-text profile document:
///
///   family: ellipsoid
///   params: 1 4 1
///   vertex: 1 0
///   vertex: 0 4
///   segment_tag: 0 arc 0.5 0.5 0.25
///
/// Numbers are written with 17 significant digits and read back bit-exactly.
/// Untagged segments are straight; `#` starts a comment.
std::string write_profile(const MomentProfile& p);
MomentProfile read_profile(const std::string& text);

void save_profile(const MomentProfile& p, const std::string& path);
MomentProfile load_profile(const std::string& path);

/// `ellipsoid:a,b[,n]`, `ball:c[,n]`, `polydisk:a,b`, `fc:b,c[,n]`.
MomentProfile parse_family_spec(const std::string& spec);

/// A path to an existing profile file, otherwise a family spec.
MomentProfile resolve_profile(const std::string& arg);

std::string orbits_csv(const std::vector<OrbitDatum>& orbits);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace toric
