#include "qhankel/json_io.hpp"

#include <fstream>
#include <string>

#include "qhankel/error.hpp"

namespace qhankel::io {

namespace {

Scalar scalar_from_json(const json& j, Regime regime) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>(), regime);
  if (j.is_number_integer()) {
    const long v = j.get<long>();
    return regime == Regime::Exact ? Scalar::exact(v) : Scalar(static_cast<double>(v));
  }
  if (j.is_number()) return Scalar(j.get<double>()).to_regime(regime);
  throw ParseError("quaternion component must be a string or number, got " + j.dump());
}

json scalar_to_json(const Scalar& s) {
  if (s.is_exact()) return s.str();
  return s.to_double();
}

bool has_string_component(const json& entries) {
  for (const auto& q : entries) {
    if (q.is_string()) return true;
    if (q.is_array())
      for (const auto& c : q)
        if (c.is_string()) return true;
  }
  return false;
}

Regime regime_of(const json& j, const json& entries, Regime fallback_numeric) {
  if (j.contains("regime")) return parse_regime(j.at("regime").get<std::string>());
  return has_string_component(entries) ? Regime::Exact : fallback_numeric;
}

QVector vector_from_json(const json& j, Regime regime) {
  if (!j.is_array()) throw ParseError("expected an array of quaternions");
  QVector out;
  out.reserve(j.size());
  for (const auto& q : j) out.push_back(quaternion_from_json(q, regime));
  return out;
}

json vector_to_json(std::span<const Quaternion> v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(quaternion_to_json(q));
  return out;
}

std::size_t count_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<long>() < 0)
    throw ParseError(std::string("missing or invalid '") + key + "'");
  return j.at(key).get<std::size_t>();
}

Regime coeff_regime(const json& j) {
  json all = json::array();
  for (const char* key : {"left_coeffs", "right_coeffs"})
    if (j.contains(key))
      for (const auto& q : j.at(key)) all.push_back(q);
  return regime_of(j, all, Regime::Float);
}

}  // namespace

json quaternion_to_json(const Quaternion& q) {
  return json::array({scalar_to_json(q.w()), scalar_to_json(q.x()), scalar_to_json(q.y()),
                      scalar_to_json(q.z())});
}

Quaternion quaternion_from_json(const json& j, Regime regime) {
  if (j.is_string()) return Quaternion::parse(j.get<std::string>(), regime);
  if (!j.is_array() || j.size() != 4)
    throw ParseError("quaternion must be a 4-element array, got " + j.dump());
  return {scalar_from_json(j[0], regime), scalar_from_json(j[1], regime),
          scalar_from_json(j[2], regime), scalar_from_json(j[3], regime)};
}

json matrix_to_json(const QMatrix& m) {
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", vector_to_json(m.data())}};
}

QMatrix matrix_from_json(const json& j) {
  try {
    if (!j.is_object()) throw ParseError("matrix JSON must be an object");
    const std::size_t rows = count_field(j, "rows");
    const std::size_t cols = count_field(j, "cols");
    const json& data = j.at("data");
    const Regime regime = regime_of(j, data, Regime::Float);
    return QMatrix(rows, cols, vector_from_json(data, regime), regime);
  } catch (const json::exception& e) {
    throw ParseError(std::string("matrix JSON: ") + e.what());
  } catch (const DimensionError& e) {
    throw ParseError(std::string("matrix JSON: ") + e.what());
  }
}

json sequence_to_json(const QSequence& h) {
  return {{"regime", std::string(to_string(h.regime()))}, {"entries", vector_to_json(h.entries())}};
}

QSequence sequence_from_json(const json& j) {
  try {
    if (!j.is_object()) throw ParseError("sequence JSON must be an object");
    const json& entries = j.at("entries");
    const Regime regime = regime_of(j, entries, Regime::Exact);
    QVector v = vector_from_json(entries, regime);
    if (v.empty()) throw ParseError("sequence must have at least one entry");
    return QSequence(std::move(v));
  } catch (const json::exception& e) {
    throw ParseError(std::string("sequence JSON: ") + e.what());
  }
}

json spec_to_json(const LrrSpec& spec) {
  json out = {{"side", std::string(to_string(spec.side))}, {"order", spec.order}};
  if (!spec.left_coeffs.empty()) out["left_coeffs"] = vector_to_json(spec.left_coeffs);
  if (!spec.right_coeffs.empty()) out["right_coeffs"] = vector_to_json(spec.right_coeffs);
  return out;
}

LrrSpec spec_from_json(const json& j) {
  try {
    if (!j.is_object()) throw ParseError("recurrence JSON must be an object");
    LrrSpec spec;
    spec.side = parse_lrr_side(j.at("side").get<std::string>());
    spec.order = count_field(j, "order");
    const Regime regime = coeff_regime(j);
    if (j.contains("left_coeffs")) spec.left_coeffs = vector_from_json(j.at("left_coeffs"), regime);
    if (j.contains("right_coeffs")) spec.right_coeffs = vector_from_json(j.at("right_coeffs"), regime);
    spec.validate();
    return spec;
  } catch (const json::exception& e) {
    throw ParseError(std::string("recurrence JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("recurrence JSON: ") + e.what());
  }
}

json analysis_to_json(const HankelAnalysis& a) {
  json shapes = json::array();
  for (const auto& s : a.per_shape)
    shapes.push_back({{"F", s.rows},
                      {"G", s.cols},
                      {"rank_left", s.rank_left},
                      {"rank_right", s.rank_right},
                      {"predicted", s.predicted},
                      {"match", s.matches()}});
  auto lrr = [](const std::optional<QVector>& c) -> json {
    return c ? vector_to_json(*c) : json(nullptr);
  };
  return {{"N", a.length},         {"m_left", a.m_left},     {"m_right", a.m_right},
          {"per_shape", shapes},   {"lrr_left", lrr(a.lrr_left)}, {"lrr_right", lrr(a.lrr_right)},
          {"consistent", a.consistent()}};
}

HankelAnalysis analysis_from_json(const json& j) {
  try {
    HankelAnalysis a;
    a.length = count_field(j, "N");
    a.m_left = count_field(j, "m_left");
    a.m_right = count_field(j, "m_right");
    for (const auto& s : j.at("per_shape"))
      a.per_shape.push_back({count_field(s, "F"), count_field(s, "G"), count_field(s, "rank_left"),
                             count_field(s, "rank_right"), count_field(s, "predicted")});
    auto lrr = [&](const char* key) -> std::optional<QVector> {
      const json& c = j.at(key);
      if (c.is_null()) return std::nullopt;
      return vector_from_json(c, has_string_component(c) ? Regime::Exact : Regime::Float);
    };
    a.lrr_left = lrr("lrr_left");
    a.lrr_right = lrr("lrr_right");
    return a;
  } catch (const json::exception& e) {
    throw ParseError(std::string("analysis JSON: ") + e.what());
  }
}

json rank_report_to_json(const RankReport& r) {
  json methods = json::array();
  for (const auto& m : r.per_method)
    methods.push_back({{"method", std::string(to_string(m.method))},
                       {"rank_left", m.rank_left},
                       {"rank_right", m.rank_right}});
  return {{"rank_left", r.rank_left},
          {"rank_right", r.rank_right},
          {"method_used", std::string(to_string(r.method_used))},
          {"agree", r.agree},
          {"methods", methods}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

}  // namespace qhankel::io
