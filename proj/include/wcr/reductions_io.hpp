#pragma once

#include <string_view>

#include "wcr/io.hpp"
#include "wcr/reductions.hpp"
#include "wcr/sat.hpp"

namespace wcr::io {

/// {"dialect":"max2sat-3occ"|"3sat22","variables":n,"clauses":[[1,-2],...],"t":5}
Json to_json(const sat::Formula& f);
sat::Formula formula_from(const JsonReader& in);
sat::Formula read_formula(std::string_view text);

/// Signed literals, one per variable: [1,-2,3] sets x1 and x3 true.
Json assignment_json(const sat::Assignment& value);
sat::Assignment assignment_from(const JsonReader& in, int variables);

Json meta_json(const reductions::MinNumMeta& meta);
Json meta_json(const reductions::VHMeta& meta);
Json meta_json(const reductions::MinMaxMeta& meta);

/// "minnum", "vh" or "minmax".
std::string construction_of(const JsonReader& meta);

/// Rebuilds a construction from its meta file and checks the stored maps
/// against the rebuilt ones (Error{not_gadget_instance} on mismatch).
reductions::MinNumReduction minnum_reduction_from(const JsonReader& meta);
reductions::VHReduction vh_reduction_from(const JsonReader& meta);
reductions::MinMaxReduction minmax_reduction_from(const JsonReader& meta);

}  // namespace wcr::io
