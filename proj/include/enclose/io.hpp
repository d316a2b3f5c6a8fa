#pragma once

#include <string>
#include <string_view>

#include "enclose/decomp.hpp"
#include "enclose/detach.hpp"
#include "enclose/extend.hpp"

namespace enclose::io {

/// Reads {"n", "lambda", "k", "classes": [[[u, v], ...], ...]}; repeated pairs
/// are parallel edges. Throws PreconditionError on malformed input, loops, or
/// classes that do not partition lambda K_n.
Decomposition parse_instance(std::string_view text);
Decomposition read_instance_file(const std::string& path);

// Same schema; `lambda` is the multiplicity of the base complete multigraph.
std::string serialize_instance(const Decomposition& d, int lambda);

std::string serialize_trace(const ExtensionTrace& trace, const DetachStats& stats, int recolor_steps);
ExtensionTrace parse_trace(std::string_view text);

void write_file(const std::string& path, const std::string& content);

}  // namespace enclose::io
