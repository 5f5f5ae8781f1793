#include "qhankel/cli.hpp"

#include <iomanip>
#include <ostream>
#include <string>

#include "qhankel/error.hpp"
#include "qhankel/hankel.hpp"
#include "qhankel/json_io.hpp"
#include "qhankel/lrr.hpp"

namespace qhankel::cli {

void Config::validate() const {
  if (!(tol > 0.0 && tol < 1.0)) throw DomainError("--tol must lie in (0, 1)");
  if (!(scale > 0.0)) throw DomainError("--scale must be positive");
}

namespace {

// Maps library exceptions onto the exit-code contract.
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const UnderdeterminedError& e) {
    err << "error: " << e.what() << '\n';
    return kUnderdetermined;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kDisagreement;
  }
}

std::string join(std::span<const Quaternion> v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + v[k].str();
  return out;
}

QSequence load_sequence(const std::filesystem::path& file, std::ostream& err) {
  QSequence h = io::sequence_from_json(io::read_json_file(file));
  if (h.regime() == Regime::Float) {
    err << "note: float input converted to exact rationals\n";
    h = h.to_regime(Regime::Exact);
  }
  return h;
}

void require_exact_config(const Config& config, const char* command) {
  if (config.regime == Regime::Float)
    throw RegimeError(std::string(command) + " runs in the exact regime only");
}

std::vector<Side> selected_sides(SideSelection s) {
  switch (s) {
    case SideSelection::Left: return {Side::Left};
    case SideSelection::Right: return {Side::Right};
    case SideSelection::Both: break;
  }
  return {Side::Left, Side::Right};
}

}  // namespace

int cmd_rank(const std::filesystem::path& matrix_file, const Config& config, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    QMatrix a = io::matrix_from_json(io::read_json_file(matrix_file));
    if (config.regime) a = a.to_regime(*config.regime);

    std::vector<RankMethod> methods = config.methods;
    if (methods.empty()) {
      if (a.regime() == Regime::Exact)
        methods = {RankMethod::Elimination, RankMethod::ComplexAdjoint, RankMethod::RealAdjoint};
      else
        methods = {RankMethod::NumericSVD};
    }
    for (RankMethod m : methods)
      if (is_exact_method(m) && a.regime() == Regime::Float)
        throw RegimeError("method '" + std::string(to_string(m)) + "' needs exact input");

    RankReport report;
    for (RankMethod m : methods) {
      const QMatrix& input = a;
      if (m == RankMethod::NumericSVD && a.regime() == Regime::Exact) {
        const QMatrix twin = a.to_regime(Regime::Float);
        report.per_method.push_back({m, rank_numeric(twin, Side::Left, config.tol),
                                     rank_numeric(twin, Side::Right, config.tol)});
      } else {
        report.per_method.push_back(
            {m, rank_by(m, input, Side::Left, config.tol), rank_by(m, input, Side::Right, config.tol)});
      }
    }
    const auto& first = report.per_method.front();
    report.rank_left = first.rank_left;
    report.rank_right = first.rank_right;
    report.method_used = first.method;
    for (const auto& m : report.per_method)
      report.agree = report.agree && m.rank_left == first.rank_left && m.rank_right == first.rank_right;

    if (config.output == Output::Json) {
      out << io::rank_report_to_json(report).dump(2) << '\n';
    } else {
      std::string line;
      for (Side side : selected_sides(config.side)) {
        if (!line.empty()) line += ' ';
        line += side == Side::Left ? "rank_left=" + std::to_string(report.rank_left)
                                   : "rank_right=" + std::to_string(report.rank_right);
      }
      out << line << '\n';
      for (const auto& m : report.per_method)
        out << "  " << std::left << std::setw(13) << to_string(m.method) << std::right
            << " left=" << m.rank_left << " right=" << m.rank_right << '\n';
      out << (report.agree ? "methods agree" : "METHODS DISAGREE") << '\n';
    }
    return report.agree ? kOk : kDisagreement;
  });
}

int cmd_analyze(const std::filesystem::path& sequence_file, const Config& config, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    require_exact_config(config, "analyze");
    const QSequence h = load_sequence(sequence_file, err);
    const HankelAnalysis a = analyze(h);

    if (config.output == Output::Json) {
      out << io::analysis_to_json(a).dump(2) << '\n';
    } else {
      out << "N=" << a.length << " m_left=" << a.m_left << " m_right=" << a.m_right << '\n';
      out << std::setw(4) << "F" << std::setw(5) << "G" << std::setw(8) << "rank_L" << std::setw(8)
          << "rank_R" << std::setw(11) << "predicted" << std::setw(7) << "match" << '\n';
      for (const auto& s : a.per_shape)
        out << std::setw(4) << s.rows << std::setw(5) << s.cols << std::setw(8) << s.rank_left
            << std::setw(8) << s.rank_right << std::setw(11) << s.predicted << std::setw(7)
            << (s.matches() ? "yes" : "NO") << '\n';
      auto print_lrr = [&](const char* label, const std::optional<QVector>& c) {
        out << label << ": ";
        if (c)
          out << "order " << c->size() << " coefficients (" << join(*c) << ")\n";
        else
          out << "none\n";
      };
      print_lrr("lrr_left", a.lrr_left);
      print_lrr("lrr_right", a.lrr_right);
      out << "theorem checks: " << (a.consistent() ? "pass" : "FAIL") << '\n';
    }
    return a.consistent() ? kOk : kDisagreement;
  });
}

int cmd_fit(const std::filesystem::path& sequence_file, std::size_t order, const Config& config,
            std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    require_exact_config(config, "fit");
    const QSequence h = load_sequence(sequence_file, err);
    const auto sides = selected_sides(config.side);

    std::vector<std::pair<Side, SolveResult>> fits;
    for (Side side : sides) fits.emplace_back(side, fit(h, order, side));

    if (config.output == Output::Json) {
      auto one = [&](Side side, const SolveResult& r) {
        io::json j = {{"solvable", r.solvable}};
        if (r.solvable) j.update(io::spec_to_json(LrrSpec::one_sided(side, r.coefficients)));
        else j["order"] = order;
        return j;
      };
      io::json j;
      if (fits.size() == 1) {
        j = one(fits[0].first, fits[0].second);
      } else {
        for (const auto& [side, r] : fits) j[std::string(to_string(side))] = one(side, r);
      }
      out << j.dump(2) << '\n';
    } else {
      for (const auto& [side, r] : fits) {
        if (r.solvable)
          out << to_string(side) << " LRR of order " << order << ": coefficients ("
              << join(r.coefficients) << ")\n";
        else
          out << "no LRR of order " << order << " (" << to_string(side) << ")\n";
      }
    }
    return kOk;
  });
}

int cmd_extend(const std::filesystem::path& sequence_file,
               const std::optional<std::filesystem::path>& spec_file, std::size_t count,
               const Config& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    QSequence h = io::sequence_from_json(io::read_json_file(sequence_file));
    if (config.regime) h = h.to_regime(*config.regime);

    QSequence result = h;
    if (spec_file) {
      LrrSpec spec = io::spec_from_json(io::read_json_file(*spec_file));
      for (auto* coeffs : {&spec.left_coeffs, &spec.right_coeffs})
        for (auto& c : *coeffs) c = c.to_regime(h.regime());
      if (h.size() < spec.order)
        throw DimensionError("sequence shorter than the recurrence order");
      const QSequence seed(QVector(h.entries().end() - static_cast<std::ptrdiff_t>(spec.order),
                                   h.entries().end()));
      const QSequence tail = generate(seed, spec, count);
      result = h.appended(tail.entries().subspan(spec.order));
    } else {
      if (h.regime() == Regime::Float) throw RegimeError("minimal extension runs in the exact regime only");
      const Side side = config.side == SideSelection::Right ? Side::Right : Side::Left;
      result = extend_minimal(h, side, count);
    }

    if (config.output == Output::Json)
      out << io::sequence_to_json(result).dump(2) << '\n';
    else
      out << join(result.entries()) << '\n';
    return kOk;
  });
}

int cmd_selfcheck(const Config& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    SelfCheckOptions options;
    options.seed = config.seed;
    options.regime = config.regime.value_or(Regime::Exact);
    options.sizes = SweepSizes{}.scaled(config.scale);
    const auto results = run_selfcheck(options);

    bool all_pass = true;
    if (config.output == Output::Json) {
      io::json arr = io::json::array();
      for (const auto& r : results) {
        arr.push_back({{"name", r.name},
                       {"status", r.skipped ? "skip" : (r.passed() ? "pass" : "fail")},
                       {"instances", r.instances},
                       {"failures", r.failures},
                       {"first_failure", r.first_failure}});
        all_pass = all_pass && r.passed();
      }
      out << io::json{{"seed", config.seed}, {"properties", arr}, {"pass", all_pass}}.dump(2) << '\n';
    } else {
      out << "seed=" << config.seed << " regime=" << to_string(options.regime) << '\n';
      for (const auto& r : results) {
        const char* status = r.skipped ? "SKIP" : (r.passed() ? "PASS" : "FAIL");
        out << status << "  " << std::left << std::setw(32) << r.name << std::right;
        if (r.skipped)
          out << " (exact-only)";
        else
          out << std::setw(6) << r.instances << " instances";
        out << '\n';
        if (!r.passed()) out << "      " << r.failures << " failing; " << r.first_failure << '\n';
        all_pass = all_pass && r.passed();
      }
      out << (all_pass ? "all properties pass" : "SOME PROPERTIES FAIL") << '\n';
    }
    return all_pass ? kOk : kDisagreement;
  });
}

}  // namespace qhankel::cli
