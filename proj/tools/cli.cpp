#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <future>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperpack/error.hpp"

namespace hyperpack::cli {

namespace {

using nlohmann::ordered_json;

std::string fixed(double value, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, value);
  return buf;
}

// The double nearest to the printed decimal, so JSON carries exactly what the
// text formats show.
double at_precision(double value, int precision) { return std::strtod(fixed(value, precision).c_str(), nullptr); }

struct Column {
  const char* name;
  bool numeric;
  std::optional<std::string> (*get)(const OutputRecord&, int precision);
};

template <class T>
std::optional<std::string> opt_fixed(const std::optional<T>& v, int p) {
  if (!v) return std::nullopt;
  return fixed(*v, p);
}

const std::vector<Column>& columns() {
  static const std::vector<Column> cols = {
      {"u", true, [](const OutputRecord& r, int p) -> std::optional<std::string> { return fixed(r.u, p); }},
      {"v", true, [](const OutputRecord& r, int p) -> std::optional<std::string> { return fixed(r.v, p); }},
      {"w", true, [](const OutputRecord& r, int p) -> std::optional<std::string> { return fixed(r.w, p); }},
      {"mode", false, [](const OutputRecord& r, int) -> std::optional<std::string> { return r.mode; }},
      {"h", true, [](const OutputRecord& r, int p) { return opt_fixed(r.h, p); }},
      {"h0", true, [](const OutputRecord& r, int p) { return opt_fixed(r.h0, p); }},
      {"h3", true, [](const OutputRecord& r, int p) { return opt_fixed(r.h3, p); }},
      {"x", true, [](const OutputRecord& r, int p) { return opt_fixed(r.x, p); }},
      {"case", false, [](const OutputRecord& r, int) { return r.case_label; }},
      {"base", true,
       [](const OutputRecord& r, int) -> std::optional<std::string> {
         if (!r.base) return std::nullopt;
         return std::to_string(*r.base);
       }},
      {"piece_volume_sum", true,
       [](const OutputRecord& r, int p) -> std::optional<std::string> { return fixed(r.piece_volume_sum, p); }},
      {"orthoscheme_volume", true,
       [](const OutputRecord& r, int p) -> std::optional<std::string> { return fixed(r.orthoscheme_volume, p); }},
      {"density", true,
       [](const OutputRecord& r, int p) -> std::optional<std::string> { return fixed(r.density, p); }},
  };
  return cols;
}

ordered_json record_json(const OutputRecord& r, int p) {
  ordered_json j;
  j["u"] = at_precision(r.u, p);
  j["v"] = at_precision(r.v, p);
  j["w"] = at_precision(r.w, p);
  j["mode"] = r.mode;
  if (r.h) j["h"] = at_precision(*r.h, p);
  if (r.h0) j["h0"] = at_precision(*r.h0, p);
  if (r.h3) j["h3"] = at_precision(*r.h3, p);
  if (r.x) j["x"] = at_precision(*r.x, p);
  if (r.case_label) j["case"] = *r.case_label;
  if (r.base) j["base"] = *r.base;
  j["piece_volume_sum"] = at_precision(r.piece_volume_sum, p);
  j["orthoscheme_volume"] = at_precision(r.orthoscheme_volume, p);
  j["density"] = at_precision(r.density, p);
  return j;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHyperbolic:
    case ErrorKind::NotDoublyTruncated:
    case ErrorKind::AmbiguousClassification:
    case ErrorKind::DomainError:
    case ErrorKind::SymmetryUnavailable:
      return 2;
    case ErrorKind::FeasibilityError:
      return 3;
    case ErrorKind::EmptyScan:
      return 4;
    case ErrorKind::InternalInconsistency:
    case ErrorKind::NotUnimodal:
    case ErrorKind::ToleranceNotMet:
      return 5;
  }
  return 1;
}

void report(std::ostream& err, int code, std::string_view name, std::string_view message) {
  ordered_json j;
  j["code"] = code;
  j["name"] = name;
  j["message"] = message;
  err << j.dump() << '\n';
}

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  return Format::Pretty;
}

unsigned resolve_threads(unsigned flag) {
  if (const char* env = std::getenv("HYPERPACK_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n >= 0) return static_cast<unsigned>(n);
  }
  return flag;
}

// Evaluates f over items on up to `threads` workers; results keep item order.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, unsigned threads, F f) {
  using R = decltype(f(items.front()));
  std::vector<R> out(items.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<void>> jobs;
  for (unsigned t = 0; t < threads; ++t) {
    jobs.push_back(std::async(std::launch::async, [&, t] {
      for (std::size_t i = t; i < items.size(); i += threads) out[i] = f(items[i]);
    }));
  }
  for (auto& j : jobs) j.get();
  return out;
}

// Accepts x values rounded to five decimals just past an interval end.
constexpr double kInputSlack = 1e-5;

bool near_interval(const CaseFamily& f, double x) {
  return x >= f.x_lo - kInputSlack && x <= f.x_hi + kInputSlack;
}

const std::map<std::string, int> kModes = {
    {"two-congruent", 0}, {"one-hyperball", 1}, {"noncongruent", 2}, {"noncongruent-opt", 3}};

std::optional<CaseLabel> parse_case(const std::string& s) {
  if (s == "1a") return CaseLabel::Case1a;
  if (s == "1b") return CaseLabel::Case1b;
  if (s == "2a") return CaseLabel::Case2a;
  if (s == "2b") return CaseLabel::Case2b;
  return std::nullopt;
}

const CaseFamily& pick_family(const std::vector<CaseFamily>& families,
                              const std::string& requested, std::optional<double> x) {
  if (!requested.empty()) {
    const auto label = parse_case(requested);
    for (const CaseFamily& f : families) {
      if (label && f.label == *label) return f;
    }
    throw Error(ErrorKind::FeasibilityError,
                "case " + requested + " does not apply to these parameters");
  }
  if (x) {
    for (const CaseFamily& f : families) {
      if (f.contains(*x)) return f;
    }
    for (const CaseFamily& f : families) {
      if (near_interval(f, *x)) return f;
    }
    throw Error(ErrorKind::FeasibilityError,
                "x = " + fixed(*x, 6) + " lies outside every blow-up interval");
  }
  return families.front();
}

}  // namespace

OutputRecord to_record(const DensityResult& r, std::string_view mode_name) {
  OutputRecord rec;
  rec.u = r.params.u;
  rec.v = r.params.v;
  rec.w = r.params.w;
  rec.mode = std::string(mode_name);
  switch (r.mode) {
    case DensityMode::TwoCongruent:
      rec.h = r.heights.h;
      break;
    case DensityMode::OneHyperball:
      rec.h0 = r.heights.h0;
      rec.h3 = r.heights.h3;
      rec.base = r.base;
      break;
    case DensityMode::NonCongruent:
      if (r.config) {
        rec.h0 = r.config->h0;
        rec.h3 = r.config->h3;
        rec.x = r.config->x;
        rec.case_label = std::string(to_string(r.config->case_label));
      }
      break;
  }
  rec.piece_volume_sum = r.piece_volume_sum();
  rec.orthoscheme_volume = r.orthoscheme_volume;
  rec.density = r.density;
  return rec;
}

void write_records(std::ostream& out, const std::vector<OutputRecord>& records, Format format,
                   int precision) {
  if (format == Format::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : records) arr.push_back(record_json(r, precision));
    out << arr.dump(2) << '\n';
    return;
  }

  std::vector<const Column*> used;
  for (const Column& c : columns()) {
    const bool present = std::any_of(records.begin(), records.end(),
                                     [&](const OutputRecord& r) { return c.get(r, precision).has_value(); });
    if (present) used.push_back(&c);
  }
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : records) {
    auto& row = cells.emplace_back();
    for (const Column* c : used) row.push_back(c->get(r, precision).value_or(""));
  }

  if (format == Format::Csv) {
    for (std::size_t i = 0; i < used.size(); ++i) out << (i ? "," : "") << used[i]->name;
    out << '\n';
    for (const auto& row : cells) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
      out << '\n';
    }
    return;
  }

  std::vector<std::size_t> width(used.size());
  for (std::size_t i = 0; i < used.size(); ++i) {
    width[i] = std::string_view(used[i]->name).size();
    for (const auto& row : cells) width[i] = std::max(width[i], row[i].size());
  }
  auto line = [&](auto cell_of) {
    for (std::size_t i = 0; i < used.size(); ++i) {
      if (i) out << "  ";
      out << std::setw(static_cast<int>(width[i])) << (used[i]->numeric ? std::right : std::left)
          << cell_of(i);
    }
    out << '\n';
  };
  line([&](std::size_t i) { return std::string(used[i]->name); });
  for (const auto& row : cells) line([&](std::size_t i) { return row[i]; });
}

std::vector<SchlafliParams> table_rows(int table) {
  auto make = [](std::initializer_list<std::array<int, 3>> triples) {
    std::vector<SchlafliParams> v;
    for (const auto& t : triples) v.push_back({double(t[0]), double(t[1]), double(t[2])});
    return v;
  };
  switch (table) {
    case 1:
      return make({{7, 3, 7}, {7, 3, 8}, {7, 3, 9}, {7, 3, 50},
                   {8, 3, 8}, {8, 3, 9}, {8, 3, 10}, {8, 3, 50},
                   {5, 4, 5}, {5, 4, 6}, {5, 4, 7}, {5, 4, 50},
                   {4, 5, 4}, {4, 5, 5}, {4, 5, 6}, {4, 5, 50}});
    case 2:
      return make({{7, 3, 8}, {7, 3, 9}, {7, 3, 50},
                   {8, 3, 9}, {8, 3, 10}, {8, 3, 50},
                   {5, 4, 5}, {5, 4, 6}, {5, 4, 7}, {5, 4, 50},
                   {4, 5, 4}, {4, 5, 5}, {4, 5, 6}, {4, 5, 50},
                   {4, 6, 4}, {4, 6, 5}, {4, 6, 6}, {4, 6, 50}});
    case 3:
      return make({{7, 3, 7}, {7, 3, 8}, {7, 3, 9}, {7, 3, 50},
                   {8, 3, 8}, {8, 3, 9}, {8, 3, 10}, {8, 3, 50},
                   {5, 4, 5}, {5, 4, 6}, {5, 4, 7}, {5, 4, 50},
                   {4, 5, 4}, {4, 5, 5}, {4, 5, 6}, {4, 5, 50},
                   {5, 5, 5}});
    default:
      throw Error(ErrorKind::DomainError, "table must be 1, 2 or 3");
  }
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hyperball packing densities of doubly truncated Coxeter orthoschemes"};
  app.require_subcommand(1);

  std::string format_name = "pretty";
  unsigned threads_flag = 0;
  double tol = kDefaultTolerance;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"pretty", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--threads", threads_flag, "Worker threads (0 = all); HYPERPACK_THREADS overrides");
  app.add_option("--tol", tol, "Optimizer x-tolerance")->capture_default_str();
  app.fallthrough();

  // density
  auto* density = app.add_subcommand("density", "Density of one (u,v,w) triple");
  double u = 0, v = 0, w = 0;
  std::string mode = "two-congruent";
  std::optional<double> x;
  std::string case_name;
  density->add_option("--u", u)->required();
  density->add_option("--v", v)->required();
  density->add_option("--w", w)->required();
  density->add_option("--mode", mode)
      ->check(CLI::IsMember({"two-congruent", "one-hyperball", "noncongruent", "noncongruent-opt"}))
      ->capture_default_str();
  density->add_option("--x", x, "Blow-up parameter (mode noncongruent)");
  density->add_option("--case", case_name, "Blow-up family: 1a, 1b, 2a or 2b")
      ->check(CLI::IsMember({"1a", "1b", "2a", "2b"}));

  // table
  auto* table = app.add_subcommand("table", "Densities for the standard triples of table 1, 2 or 3");
  int table_no = 1;
  table->add_option("name", table_no, "Table number")->required()->check(CLI::Range(1, 3));

  // scan
  auto* scan = app.add_subcommand("scan", "Exhaustive integer scan, ranked by density");
  std::string scan_mode = "two-congruent";
  int scan_min = 3, scan_max = 50;
  std::size_t top = 10;
  scan->add_option("--mode", scan_mode)
      ->check(CLI::IsMember({"two-congruent", "one-hyperball", "noncongruent-opt"}))
      ->capture_default_str();
  scan->add_option("--min", scan_min, "Lower bound of every parameter")->capture_default_str();
  scan->add_option("--max", scan_max, "Upper bound of every parameter")->capture_default_str();
  scan->add_option("--top", top, "Number of results to print")->capture_default_str();

  // optimize-p
  auto* optp = app.add_subcommand("optimize-p", "Maximize the two-ball density of {p,3,p}, 6 < p <= 7");
  double p_lo = 6.001, p_hi = 6.999;
  optp->add_option("--p-lo", p_lo)->capture_default_str();
  optp->add_option("--p-hi", p_hi)->capture_default_str();

  // plot-data
  auto* plot = app.add_subcommand("plot-data", "Two-column CSV for plotting");
  std::string kind;
  int samples = 100;
  double pu = 0, pv = 0, pw = 0;
  std::string plot_case;
  plot->add_option("--kind", kind)->required()->check(CLI::IsMember({"density-vs-x", "density-vs-p"}));
  plot->add_option("--samples", samples)->capture_default_str();
  plot->add_option("--u", pu);
  plot->add_option("--v", pv);
  plot->add_option("--w", pw);
  plot->add_option("--case", plot_case)->check(CLI::IsMember({"1a", "1b", "2a", "2b"}));
  plot->add_option("--p-lo", p_lo)->capture_default_str();
  plot->add_option("--p-hi", p_hi)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code;
  }

  const Format format = parse_format(format_name);
  const unsigned threads = resolve_threads(threads_flag);

  try {
    if (*density) {
      const OrthoschemeData od = analyze(SchlafliParams::make(u, v, w));
      DensityResult r;
      switch (kModes.at(mode)) {
        case 0: r = density_two_congruent(od); break;
        case 1: r = density_one_hyperball(od); break;
        case 2: {
          if (!x) throw Error(ErrorKind::DomainError, "mode noncongruent requires --x");
          const auto families = noncongruent_cases(od);
          const CaseFamily& f = pick_family(families, case_name, x);
          if (!near_interval(f, *x)) {
            throw Error(ErrorKind::FeasibilityError,
                        "x = " + fixed(*x, 6) + " is outside the interval of case " +
                            std::string(to_string(f.label)));
          }
          r = density_noncongruent(od, f.at(std::clamp(*x, f.x_lo, f.x_hi)));
          break;
        }
        default: r = optimize_noncongruent(od, tol); break;
      }
      write_records(out, {to_record(r, mode)}, format);
    } else if (*table) {
      const auto rows = table_rows(table_no);
      const auto results = parallel_map(rows, threads, [&](const SchlafliParams& p) {
        const OrthoschemeData od = analyze(p);
        switch (table_no) {
          case 1: return to_record(density_two_congruent(od), "two-congruent");
          case 2: return to_record(density_one_hyperball(od), "one-hyperball");
          default: return to_record(optimize_noncongruent(od, tol), "noncongruent-opt");
        }
      });
      write_records(out, results, format);
    } else if (*scan) {
      ScanOptions opts;
      opts.mode = scan_mode == "two-congruent"   ? DensityMode::TwoCongruent
                  : scan_mode == "one-hyperball" ? DensityMode::OneHyperball
                                                 : DensityMode::NonCongruent;
      opts.u = opts.v = opts.w = IntRange{scan_min, scan_max};
      opts.threads = threads;
      opts.tol = tol;
      const auto results = scan_integer(opts);
      std::vector<OutputRecord> records;
      for (std::size_t i = 0; i < std::min(top, results.size()); ++i) {
        records.push_back(to_record(results[i], scan_mode));
      }
      write_records(out, records, format);
    } else if (*optp) {
      const RealScanResult best = scan_real_p(p_lo, p_hi, tol);
      const DensityResult r = density_two_congruent(SchlafliParams::make(best.p_opt, 3, best.p_opt));
      write_records(out, {to_record(r, "two-congruent")}, format);
    } else if (*plot) {
      std::vector<std::pair<double, double>> series;
      const char* axis = "x";
      if (kind == "density-vs-x") {
        const OrthoschemeData od = analyze(SchlafliParams::make(pu, pv, pw));
        const auto families = noncongruent_cases(od);
        std::string chosen = plot_case;
        if (chosen.empty()) {
          chosen = std::string(to_string(optimize_noncongruent(od, tol).config->case_label));
        }
        series = density_along_case(od, pick_family(families, chosen, std::nullopt), samples);
      } else {
        axis = "p";
        series = density_profile_p(p_lo, p_hi, samples);
      }
      out << axis << ",density\n";
      for (const auto& [a, d] : series) out << fixed(a, 6) << ',' << fixed(d, 6) << '\n';
    }
  } catch (const Error& e) {
    const int code = exit_code(e.kind());
    report(err, code, e.name(), e.what());
    return code;
  } catch (const std::exception& e) {
    report(err, 1, "Failure", e.what());
    return 1;
  }
  return 0;
}

}  // namespace hyperpack::cli
