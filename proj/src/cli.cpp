#include "sheetpow/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>

#include "sheetpow/julia.hpp"
#include "sheetpow/multivalued.hpp"
#include "sheetpow/netpbm.hpp"
#include "sheetpow/polar.hpp"
#include "sheetpow/surface.hpp"
#include "sheetpow/translate.hpp"

namespace sheetpow {

namespace {

/// Bad or missing flags; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string z, c, alpha, region, mode = "principal", algo = "ccc", format = "text", out;
  std::uint32_t n = 0;
  std::int64_t p = 0, q = 1, m = 0, mc = 0;
  std::uint32_t max_iter = 256, width = 512, height = 512;
  std::size_t samples = 0;
  double bailout = 4.0, epsilon = 0.0;
  std::uint64_t seed = 0;
};

RectComplex complex_flag(const std::string& name, const std::string& text) {
  try {
    return parse_complex(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

std::int64_t parse_integer(std::string_view s, const std::string& text) {
  std::int64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw UsageError("--alpha: malformed exponent '" + text + "'");
  }
  return v;
}

/// "p/q" gives an exact exponent, a decimal gives only its value.
Exponent alpha_flag(const std::string& text) {
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    const std::string_view s{text};
    const std::int64_t p = parse_integer(s.substr(0, slash), text);
    const std::int64_t q = parse_integer(s.substr(slash + 1), text);
    if (q <= 0) {
      throw UsageError("--alpha: denominator must be positive");
    }
    return RationalExponent{p, q};
  }
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || res.ec != std::errc{} || res.ptr != text.data() + text.size() ||
      !std::isfinite(v)) {
    throw UsageError("--alpha: malformed exponent '" + text + "'");
  }
  return v;
}

SurfaceSpec surface_flag(const std::string& text) {
  const Exponent e = alpha_flag(text);
  if (!e.exact) {
    throw UsageError("--alpha must be a fraction p/q for surface operations");
  }
  return SurfaceSpec{*e.exact};
}

void require(const CLI::App* cmd, std::initializer_list<const char*> names) {
  for (const char* name : names) {
    if (cmd->get_option(name)->count() == 0) {
      throw UsageError(std::string(name) + " is required");
    }
  }
}

bool csv(const Flags& f) { return f.format == "csv"; }

void print_value_set(std::ostream& out, const Flags& f, const ValueSet& set) {
  if (csv(f)) {
    out << "k,re,im,modulus,argument\n";
  }
  for (std::size_t k = 0; k < set.size(); ++k) {
    const RectComplex v = set.values[k];
    if (csv(f)) {
      out << set.k_index[k] << ',' << format_real(v.re()) << ',' << format_real(v.im()) << ','
          << format_real(set.modulus) << ',' << format_real(set.arguments[k]) << '\n';
    } else {
      out << "k=" << set.k_index[k] << ' ' << format_complex(v) << '\n';
    }
  }
}

void print_sheeted(std::ostream& out, const Flags& f, const SheetedPoint& a) {
  if (csv(f)) {
    out << "re,im,sheet\n"
        << format_real(a.z.re()) << ',' << format_real(a.z.im()) << ',' << a.m << '\n';
  } else {
    out << format_complex(a.z) << " sheet=" << a.m << '\n';
  }
}

void run_pow(const CLI::App* cmd, const Flags& f, std::ostream& out) {
  require(cmd, {"--z"});
  const RectComplex z = complex_flag("z", f.z);
  const bool has_n = cmd->get_option("--n")->count() > 0;
  const bool has_alpha = cmd->get_option("--alpha")->count() > 0;
  if (has_n == has_alpha) {
    throw UsageError("pow needs exactly one of --n or --alpha");
  }
  const RectComplex w = has_n ? int_pow_rect(z, f.n) : principal_pow(z, alpha_flag(f.alpha).value);
  if (csv(f)) {
    out << "re,im\n" << format_real(w.re()) << ',' << format_real(w.im()) << '\n';
  } else {
    out << format_complex(w) << '\n';
  }
}

void run_roots(const CLI::App* cmd, const Flags& f, std::ostream& out) {
  require(cmd, {"--z", "--n"});
  if (f.n == 0) {
    throw UsageError("--n must be positive");
  }
  print_value_set(out, f, nth_roots(complex_flag("z", f.z), f.n));
}

void run_rpow(const CLI::App* cmd, const Flags& f, std::ostream& out) {
  require(cmd, {"--z", "--p", "--q"});
  if (f.q <= 0) {
    throw UsageError("--q must be positive");
  }
  print_value_set(out, f, rational_pow_values(complex_flag("z", f.z), RationalExponent{f.p, f.q}));
}

void run_smul(const CLI::App* cmd, const Flags& f, std::ostream& out) {
  require(cmd, {"--z", "--c", "--alpha"});
  const SurfaceSpec surf = surface_flag(f.alpha);
  const SheetedPoint a = lift(complex_flag("z", f.z), f.m, surf);
  const SheetedPoint b = lift(complex_flag("c", f.c), f.mc, surf);
  print_sheeted(out, f, smul(a, b, surf));
}

void run_spow(const CLI::App* cmd, const Flags& f, std::ostream& out) {
  require(cmd, {"--z", "--alpha"});
  const SurfaceSpec surf = surface_flag(f.alpha);
  print_sheeted(out, f, spow(lift(complex_flag("z", f.z), f.m, surf), surf));
}

void run_sadd(const CLI::App* cmd, const Flags& f, std::ostream& out, std::ostream& err) {
  require(cmd, {"--z", "--c", "--alpha"});
  const SurfaceSpec surf = surface_flag(f.alpha);
  const SheetedPoint a = lift(complex_flag("z", f.z), f.m, surf);
  const SheetedPoint b = lift(complex_flag("c", f.c), f.mc, surf);
  SheetedPoint w;
  if (f.algo == "ccc") {
    if (b.m != 0) {
      err << "note: --algo ccc adds (c, 0); --mc is ignored\n";
    }
    w = add_ccc(a, b.z, surf);
  } else if (f.algo == "sign") {
    w = add_sign(a, b, surf);
  } else {
    w = add_general(a, b, surf);
  }
  print_sheeted(out, f, w);
}

void run_probe(const CLI::App* cmd, const Flags& f, std::ostream& out) {
  require(cmd, {"--c", "--alpha", "--epsilon"});
  const SurfaceSpec surf = surface_flag(f.alpha);
  ProbeOptions opts;
  opts.epsilon = f.epsilon;
  opts.samples = f.samples == 0 ? 1024 : f.samples;
  opts.seed = f.seed;
  opts.input_sheet = cmd->get_option("--m")->count() > 0 ? f.m : 1;
  const ShearEvidence ev = probe_discontinuity(complex_flag("c", f.c), surf, opts);
  if (csv(f)) {
    out << "x,y,out_sheet\n";
    for (const ProbeSample& s : ev.samples) {
      out << format_real(s.input.re()) << ',' << format_real(s.input.im()) << ',' << s.out_sheet
          << '\n';
    }
    return;
  }
  out << "z0=" << format_complex(ev.z0) << " epsilon=" << format_real(ev.epsilon)
      << " input_sheet=" << ev.input_sheet << '\n'
      << "sheets=" << ev.sheet_labels[0] << ',' << ev.sheet_labels[1]
      << " split_fraction=" << format_real(ev.split_fraction)
      << " split_by_ray=" << (ev.split_by_ray ? "yes" : "no") << " samples=" << ev.samples.size()
      << '\n';
}

std::array<double, 4> region_flag(const std::string& text) {
  std::array<double, 4> v{};
  std::istringstream in(text);
  std::string part;
  std::size_t k = 0;
  while (std::getline(in, part, ',')) {
    double x = 0.0;
    const auto res = std::from_chars(part.data(), part.data() + part.size(), x);
    if (k >= 4 || part.empty() || res.ec != std::errc{} || res.ptr != part.data() + part.size()) {
      throw UsageError("--region must be xmin,xmax,ymin,ymax");
    }
    v[k++] = x;
  }
  if (k != 4) {
    throw UsageError("--region must be xmin,xmax,ymin,ymax");
  }
  return v;
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void run_render(const CLI::App* cmd, const Flags& f, std::ostream& out) {
  RenderConfig cfg;
  if (cmd->get_option("--alpha")->count() > 0) {
    cfg.alpha = alpha_flag(f.alpha);
  }
  if (cmd->get_option("--c")->count() > 0) {
    cfg.c = complex_flag("c", f.c);
  }
  if (cmd->get_option("--region")->count() > 0) {
    const auto r = region_flag(f.region);
    cfg.x_min = r[0];
    cfg.x_max = r[1];
    cfg.y_min = r[2];
    cfg.y_max = r[3];
  }
  cfg.width = f.width;
  cfg.height = f.height;
  cfg.max_iter = f.max_iter;
  cfg.bailout = f.bailout;
  cfg.mode = f.mode == "ccc"    ? IterationMode::kCcc
             : f.mode == "sign" ? IterationMode::kSign
                                : IterationMode::kPrincipal;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const EscapeGrid grid = render(cfg);

  if (!f.out.empty()) {
    std::ofstream file(f.out, std::ios::binary);
    if (!file) {
      throw UsageError("cannot open --out file '" + f.out + "'");
    }
    if (ends_with(f.out, ".ppm")) {
      write_ppm(file, grid);
    } else if (ends_with(f.out, ".csv")) {
      write_grid_csv(file, grid);
    } else {
      write_pgm(file, grid);
    }
    return;
  }
  if (csv(f)) {
    write_grid_csv(out, grid);
    return;
  }
  std::size_t interior = 0;
  for (const std::uint32_t count : grid.counts) {
    interior += count == cfg.max_iter ? 1 : 0;
  }
  out << cfg.width << 'x' << cfg.height << " max_iter=" << cfg.max_iter
      << " interior=" << interior << " escaped=" << grid.counts.size() - interior << '\n';
}

void run_trace(const CLI::App* cmd, const Flags& f, std::ostream& out) {
  require(cmd, {"--z", "--epsilon", "--alpha"});
  const RectComplex center = complex_flag("z", f.z);
  if (center.im() != 0.0 || !(center.re() < 0.0)) {
    throw DomainError("--z must be a point -r on the negative real axis");
  }
  const std::size_t n = f.samples == 0 ? 64 : f.samples;
  const auto traces = trace_disk_chain(-center.re(), f.epsilon, alpha_flag(f.alpha).value, n);
  if (csv(f)) {
    write_trace_csv(out, traces);
    return;
  }
  for (const DiskTrace& t : traces) {
    const RectComplex edge = t.points[t.edge_begin];
    out << to_string(t.stage) << ' ' << to_string(t.half) << ": " << t.edge_begin << " arc + "
        << t.points.size() - t.edge_begin << " edge points, first edge point "
        << format_complex(edge) << '\n';
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multivalued complex powers, sheet-tracked arithmetic and Julia renders", "sheetpow"};
  app.require_subcommand(1);
  Flags f;

  const std::vector<std::string> formats{"text", "csv"};
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", f.format, "text or csv")->check(CLI::IsMember(formats));
  };

  auto* pow = app.add_subcommand("pow", "integer power (--n, repeated multiplication) or principal power (--alpha)");
  pow->add_option("--z", f.z, "base, e.g. 2+3i");
  pow->add_option("--n", f.n, "non-negative integer exponent");
  pow->add_option("--alpha", f.alpha, "real exponent, p/q or decimal");
  add_format(pow);

  auto* roots = app.add_subcommand("roots", "all n-th roots");
  roots->add_option("--z", f.z);
  roots->add_option("--n", f.n);
  add_format(roots);

  auto* rpow = app.add_subcommand("rpow", "all q values of z^(p/q)");
  rpow->add_option("--z", f.z);
  rpow->add_option("--p", f.p);
  rpow->add_option("--q", f.q);
  add_format(rpow);

  auto* smul_cmd = app.add_subcommand("smul", "sheet-tracked product (z, m)(c, mc)");
  auto* spow_cmd = app.add_subcommand("spow", "sheet-tracked power (z, m)^alpha");
  auto* sadd = app.add_subcommand("sadd", "sheet-tracked sum (z, m) + (c, mc)");
  for (CLI::App* cmd : {smul_cmd, spow_cmd, sadd}) {
    cmd->add_option("--z", f.z);
    cmd->add_option("--m", f.m, "sheet of z");
    cmd->add_option("--alpha", f.alpha, "exponent p/q of the surface");
    add_format(cmd);
  }
  for (CLI::App* cmd : {smul_cmd, sadd}) {
    cmd->add_option("--c", f.c);
    cmd->add_option("--mc", f.mc, "sheet of c");
  }
  sadd->add_option("--algo", f.algo, "ccc, sign or general")
      ->check(CLI::IsMember({"ccc", "sign", "general"}));

  auto* probe = app.add_subcommand("probe", "shear witness for translation by c");
  probe->add_option("--c", f.c);
  probe->add_option("--alpha", f.alpha, "exponent p/q of the surface");
  probe->add_option("--epsilon", f.epsilon, "disk radius, below |c|/2");
  probe->add_option("--samples", f.samples, "number of samples (default 1024)");
  probe->add_option("--seed", f.seed, "sampling seed");
  probe->add_option("--m", f.m, "sheet of the disk (default 1)");
  add_format(probe);

  auto* render_cmd = app.add_subcommand("render", "escape-time raster of z^alpha + c");
  render_cmd->add_option("--alpha", f.alpha, "exponent (default 2.5)");
  render_cmd->add_option("--c", f.c, "parameter (default 0+0.5i)");
  render_cmd->add_option("--region", f.region, "xmin,xmax,ymin,ymax (default -2,2,-2,2)");
  render_cmd->add_option("--width", f.width);
  render_cmd->add_option("--height", f.height);
  render_cmd->add_option("--max-iter", f.max_iter);
  render_cmd->add_option("--bailout", f.bailout);
  render_cmd->add_option("--mode", f.mode)->check(CLI::IsMember({"principal", "ccc", "sign"}));
  render_cmd->add_option("--out", f.out, ".pgm (default), .ppm or .csv");
  add_format(render_cmd);

  auto* trace = app.add_subcommand("trace", "half-disk images along Log, alpha Log, exp");
  trace->add_option("--z", f.z, "disk centre -r on the negative real axis");
  trace->add_option("--epsilon", f.epsilon, "disk radius");
  trace->add_option("--alpha", f.alpha);
  trace->add_option("--samples", f.samples, "points per boundary piece (default 64)");
  add_format(trace);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsageError;
  }

  try {
    if (pow->parsed()) {
      run_pow(pow, f, out);
    } else if (roots->parsed()) {
      run_roots(roots, f, out);
    } else if (rpow->parsed()) {
      run_rpow(rpow, f, out);
    } else if (smul_cmd->parsed()) {
      run_smul(smul_cmd, f, out);
    } else if (spow_cmd->parsed()) {
      run_spow(spow_cmd, f, out);
    } else if (sadd->parsed()) {
      run_sadd(sadd, f, out, err);
    } else if (probe->parsed()) {
      run_probe(probe, f, out);
    } else if (render_cmd->parsed()) {
      run_render(render_cmd, f, out);
    } else if (trace->parsed()) {
      run_trace(trace, f, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const DegenerateInput& e) {
    err << "degenerate input: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const ProbeFailed& e) {
    err << "probe failed: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsageError;
  }
  return kExitOk;
}

}  // namespace sheetpow
