#pragma once

#include <string>

#include "negbounds/states.hpp"

namespace negbounds::io {

/// State files are JSON documents:
///   { "dim_a": m, "dim_b": n, "amplitudes": [[re, im], ...] }
/// with dim_a*dim_b amplitude pairs in row-major basis order (index i*n+j).
/// Loading rejects vectors whose pre-normalization norm deviates from 1 by
/// more than 1e-6 unless renormalize is set.
states::PureState load_state(const std::string& path, bool renormalize = false);
states::PureState parse_state(const std::string& text, bool renormalize = false);

std::string serialize_state(const states::PureState& s);
void save_state(const states::PureState& s, const std::string& path);

}  // namespace negbounds::io
