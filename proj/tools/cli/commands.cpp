#include "cli/commands.hpp"

#include <cmath>
#include <filesystem>
#include <stdexcept>
#include <vector>

#include "bornsim/born.hpp"
#include "bornsim/spin.hpp"
#include "cli/exit_codes.hpp"
#include "cli/svg.hpp"
#include "cli/writers.hpp"

namespace bornsim::cli {

namespace {

constexpr double kSelfCheckTolerance = 1e-4;

std::string out_path(const CommonOptions& common, const std::string& name) {
  std::filesystem::create_directories(common.out_dir);
  return (std::filesystem::path(common.out_dir) / name).string();
}

bool wants_csv(const CommonOptions& c) { return c.format != "json"; }
bool wants_json(const CommonOptions& c) { return c.format != "csv"; }

const char* mode_name(BranchMode mode) {
  return mode == BranchMode::naive ? "naive" : "weighted";
}

void write_params(JsonWriter& w, const SgParams& p, double sigma0) {
  w.key("params").begin_object();
  w.key_value("mass", p.mass);
  w.key_value("coupling", p.coupling);
  w.key_value("field_b0", p.field_b0);
  w.key_value("gradient", p.gradient);
  w.key_value("grid_length", p.grid_length);
  w.key_value("grid_points", static_cast<std::int64_t>(p.grid_points));
  w.key_value("dt", p.dt);
  w.key_value("t_final", p.t_final);
  w.key_value("sigma0", sigma0);
  w.end_object();
}

void write_distribution_report(JsonWriter& w, const DistributionReport& r) {
  w.key("report").begin_object();
  if (r.theta) {
    w.key_value("theta_radians", *r.theta);
  } else {
    w.key("theta_radians").null();
  }
  w.key_value("q", r.q);
  w.key_value("N", r.runs);
  w.double_array("predicted", r.predicted);
  w.double_array("naive", r.naive);
  if (r.empirical) {
    w.double_array("empirical", *r.empirical);
  } else {
    w.key("empirical").null();
  }
  w.key_value("tv_naive_weighted", r.tv_naive_weighted);
  w.key_value("peak_weighted", r.peak_weighted);
  w.key_value("peak_naive", r.peak_naive);
  w.key_value("born_peak", r.born_peak);
  w.key_value("narratives_disagree", r.narratives_disagree ? 1 : 0);
  w.key_value("samples", r.samples);
  w.key_value("seed", r.seed);
  if (r.empirical_plus_frequency) {
    w.key_value("empirical_plus_frequency", *r.empirical_plus_frequency);
    w.key_value("plus_frequency_abs_error", *r.plus_frequency_abs_error);
    w.key_value("plus_frequency_stderr3", *r.plus_frequency_stderr3);
    w.key_value("max_abs_dev_from_predicted", *r.max_abs_dev_from_predicted);
  } else {
    w.key("empirical_plus_frequency").null();
    w.key("plus_frequency_abs_error").null();
    w.key("plus_frequency_stderr3").null();
    w.key("max_abs_dev_from_predicted").null();
  }
  w.end_object();
}

}  // namespace

void parse_branch_weight(const std::string& text, double& q,
                         std::optional<BigRational>& q_exact) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt num, den;
    try {
      num = BigInt(text.substr(0, slash));
      den = BigInt(text.substr(slash + 1));
    } catch (const std::exception&) {
      throw std::domain_error("invalid rational weight: " + text);
    }
    if (den <= 0) throw std::domain_error("weight denominator must be > 0");
    BigRational r(num, den);
    if (r < 0 || r > 1) {
      throw std::domain_error("weight must lie in [0, 1]: " + text);
    }
    q_exact = r;
    q = r.convert_to<double>();
    return;
  }
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::domain_error("invalid weight: " + text);
  }
  if (used != text.size()) throw std::domain_error("invalid weight: " + text);
  q = clamp_unit_interval(value);
  q_exact.reset();
}

int cmd_evolve(const EvolveOptions& opts, const CommonOptions& common) {
  const long long total_steps =
      std::llround(opts.params.t_final / opts.params.dt);
  PacketState state =
      init_packet(make_skew_state(opts.theta), opts.sigma0, opts.params);

  std::string csv = "t,mean_y_plus,mean_y_minus,pop_plus,pop_minus,overlap,norm\n";
  std::vector<double> ts, means_plus, means_minus;
  long long rows = 0;
  auto record = [&] {
    const SplitDiagnostics d = diagnostics(state);
    csv += format_double(state.time()) + ',' + format_double(d.mean_y_plus) +
           ',' + format_double(d.mean_y_minus) + ',' +
           format_double(d.pop_plus) + ',' + format_double(d.pop_minus) + ',' +
           format_double(d.spatial_overlap) + ',' +
           format_double(state.norm()) + '\n';
    ts.push_back(state.time());
    means_plus.push_back(d.mean_y_plus);
    means_minus.push_back(d.mean_y_minus);
    ++rows;
  };

  record();
  long long done = 0;
  while (done < total_steps) {
    const long long chunk =
        std::min<long long>(opts.record_every, total_steps - done);
    state = evolve(std::move(state), opts.params,
                   static_cast<double>(chunk) * opts.params.dt);
    done += chunk;
    record();
  }

  if (wants_csv(common)) write_file(out_path(common, "evolve.csv"), csv);
  if (wants_json(common)) {
    const SplitDiagnostics d = diagnostics(state);
    JsonWriter w;
    w.begin_object();
    w.key_value("command", "evolve");
    w.key_value("theta_radians", opts.theta);
    write_params(w, opts.params, opts.sigma0);
    w.key_value("rows", static_cast<std::int64_t>(rows));
    w.key("final").begin_object();
    w.key_value("t", state.time());
    w.key_value("mean_y_plus", d.mean_y_plus);
    w.key_value("mean_y_minus", d.mean_y_minus);
    w.key_value("pop_plus", d.pop_plus);
    w.key_value("pop_minus", d.pop_minus);
    w.key_value("overlap", d.spatial_overlap);
    w.key_value("norm", state.norm());
    w.end_object();
    w.end_object();
    write_file(out_path(common, "evolve.json"), w.take());
  }
  if (common.svg) {
    write_file(out_path(common, "evolve.svg"),
               svg_line_chart("component mean positions", "t", "<y>",
                              {{"mean_y_plus", ts, means_plus},
                               {"mean_y_minus", ts, means_minus}}));
  }
  return kExitOk;
}

int cmd_branch(const BranchOptions& opts, const CommonOptions& common) {
  const BranchConfig config{opts.runs, opts.q, opts.mode, opts.q_exact};
  const HistoryTally tally =
      opts.enumerate ? enumerate_tree(config) : closed_form(config);
  const int peak_p = peak(config);

  if (wants_csv(common)) {
    std::string csv = "p,count_exact_num,count_exact_den,count_float,normalized\n";
    for (int p = 0; p <= opts.runs; ++p) {
      const auto idx = static_cast<std::size_t>(p);
      csv += std::to_string(p) + ',';
      if (tally.exact()) {
        csv += boost::multiprecision::numerator(tally.counts_exact[idx]).str() +
               ',' +
               boost::multiprecision::denominator(tally.counts_exact[idx]).str();
      } else {
        csv += ',';
      }
      csv += ',' + format_double(tally.counts[idx]) + ',' +
             format_double(std::ldexp(tally.counts[idx], -opts.runs)) + '\n';
    }
    write_file(out_path(common, "branch.csv"), csv);
  }

  if (wants_json(common)) {
    JsonWriter w;
    w.begin_object();
    w.key_value("command", "branch");
    w.key_value("N", opts.runs);
    w.key_value("mode", mode_name(opts.mode));
    w.key_value("q", opts.q);
    if (opts.q_exact) {
      w.key_value("q_exact",
                  boost::multiprecision::numerator(*opts.q_exact).str() + "/" +
                      boost::multiprecision::denominator(*opts.q_exact).str());
    } else {
      w.key("q_exact").null();
    }
    w.key_value("enumerated", opts.enumerate ? 1 : 0);
    w.key_value("total", tally.total);
    if (tally.exact()) {
      w.key_value("total_exact", tally.total_exact.convert_to<BigInt>().str());
    } else {
      w.key("total_exact").null();
    }
    w.key_value("peak", peak_p);
    w.key_value("born_peak", static_cast<double>(opts.runs) * opts.q);
    w.end_object();
    write_file(out_path(common, "branch.json"), w.take());
  }

  if (common.svg) {
    std::vector<double> normalized(static_cast<std::size_t>(opts.runs) + 1);
    for (std::size_t p = 0; p < normalized.size(); ++p) {
      normalized[p] = std::ldexp(tally.counts[p], -opts.runs);
    }
    write_file(out_path(common, "branch.svg"),
               svg_bar_chart("history multiplicity / 2^N", "p (plus count)",
                             "share", normalized));
  }
  return kExitOk;
}

int cmd_compare(const CompareOptions& opts, const CommonOptions& common) {
  const DistributionReport report =
      opts.samples > 0
          ? born_convergence(opts.theta, opts.runs, opts.samples, common.seed)
          : compare_narratives(opts.runs, opts.theta);

  JsonWriter w;
  w.begin_object();
  w.key_value("command", "compare");
  write_distribution_report(w, report);
  w.end_object();
  write_file(out_path(common, "compare.json"), w.take());

  if (common.svg) {
    std::vector<double> ps(static_cast<std::size_t>(opts.runs) + 1);
    for (std::size_t p = 0; p < ps.size(); ++p) ps[p] = static_cast<double>(p);
    std::vector<Series> series = {{"weighted", ps, report.predicted},
                                  {"naive", ps, report.naive}};
    if (report.empirical) series.push_back({"empirical", ps, *report.empirical});
    write_file(out_path(common, "compare.svg"),
               svg_line_chart("history distributions", "p (plus count)",
                              "probability", series));
  }
  return kExitOk;
}

int cmd_end_to_end(const EndToEndOptions& opts, const CommonOptions& common) {
  EndToEndReport result = end_to_end(opts.theta, opts.params, opts.sigma0,
                                     opts.runs, opts.samples, common.seed);
  if (opts.selfcheck_fault != 0.0) {
    result.q_numeric =
        clamp_unit_interval(result.q_numeric + opts.selfcheck_fault);
    result.q_abs_error = std::abs(result.q_numeric - result.q_analytic);
    result.report =
        report_for_weight(opts.runs, result.q_numeric, opts.samples, common.seed);
    result.report.theta = opts.theta;
  }
  const bool selfcheck_ok = result.q_abs_error <= kSelfCheckTolerance;

  JsonWriter w;
  w.begin_object();
  w.key_value("command", "end_to_end");
  w.key_value("theta_radians", result.theta);
  write_params(w, opts.params, opts.sigma0);
  w.key_value("q_numeric", result.q_numeric);
  w.key_value("q_analytic", result.q_analytic);
  w.key_value("q_abs_error", result.q_abs_error);
  w.key_value("selfcheck_tolerance", kSelfCheckTolerance);
  w.key_value("selfcheck_passed", selfcheck_ok ? 1 : 0);
  w.key_value("actual_time", result.actual_time);
  w.key("final_state").begin_object();
  w.key_value("mean_y_plus", result.final_state.mean_y_plus);
  w.key_value("mean_y_minus", result.final_state.mean_y_minus);
  w.key_value("pop_plus", result.final_state.pop_plus);
  w.key_value("pop_minus", result.final_state.pop_minus);
  w.key_value("overlap", result.final_state.spatial_overlap);
  w.end_object();
  write_distribution_report(w, result.report);
  w.end_object();
  write_file(out_path(common, "end_to_end.json"), w.take());

  return selfcheck_ok ? kExitOk : kExitSelfCheckFailed;
}

}  // namespace bornsim::cli
