#ifndef QHANKEL_JSON_IO_HPP
#define QHANKEL_JSON_IO_HPP

#include <filesystem>
#include <optional>

#include <json.hpp>

#include "qhankel/hankel.hpp"
#include "qhankel/lrr.hpp"
#include "qhankel/qmatrix.hpp"
#include "qhankel/rank.hpp"
#include "qhankel/sequence.hpp"

namespace qhankel::io {

using nlohmann::json;

// Quaternions are 4-tuples [w, x, y, z]. Exact components are written as
// strings ("3/2", "-1"), float components as JSON numbers. On input a
// quaternion may also be given as a text literal such as "1+2i-k".

json quaternion_to_json(const Quaternion& q);
Quaternion quaternion_from_json(const json& j, Regime regime);

/// {"rows": F, "cols": G, "data": [[w,x,y,z], ...]} (row-major).
/// Without a "regime" key the regime is inferred: any string component
/// means exact, all-numeric means float.
json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const json& j);

/// {"regime": "exact"|"float", "entries": [[w,x,y,z], ...]}. A missing
/// regime defaults to exact.
json sequence_to_json(const QSequence& h);
QSequence sequence_from_json(const json& j);

/// {"side": "left"|"right"|"double", "order": S, "left_coeffs": [...],
///  "right_coeffs": [...]}. Absent coefficient vectors are omitted.
json spec_to_json(const LrrSpec& spec);
LrrSpec spec_from_json(const json& j);

json analysis_to_json(const HankelAnalysis& a);
HankelAnalysis analysis_from_json(const json& j);

json rank_report_to_json(const RankReport& r);

/// Reads and parses a JSON file; ParseError on failure.
json read_json_file(const std::filesystem::path& path);

}  // namespace qhankel::io

#endif  // QHANKEL_JSON_IO_HPP
