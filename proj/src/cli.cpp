#include "zolo/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "zolo/errors.hpp"
#include "zolo/report.hpp"

namespace zolo {

namespace {

constexpr const char* kVersion = "1.0";

Int parse_int(const std::string& text, const std::string& flag) {
  Int v = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && text[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw InvalidArgument(flag + " expects a decimal integer, got '" + text + "'");
  }
  return v;
}

double parse_tol(const std::string& text) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !(v > 0)) {
    throw InvalidArgument("--tol expects a positive number, got '" + text + "'");
  }
  return v;
}

void require_at_least(Int v, Int lo, const std::string& flag) {
  if (v < lo) throw InvalidArgument(flag + " must be >= " + std::to_string(lo));
}

struct Options {
  std::string n, L, kappa = "1", m, N, bound;
  std::string format = "json";
  std::string out_path;
  std::string tol;
  std::string terms;
  std::string dmax;
  std::string f_inline, f_file;
  bool no_header = false;
};

struct Output {
  std::string body;
  int code = 0;
};

std::string header_line(const std::string& sub, const std::vector<std::pair<std::string, std::string>>& params,
                        const std::string& format) {
  std::string line = (format == "dot" ? "// zolo " : "# zolo ") + std::string(kVersion) + " " + sub;
  for (const auto& [k, v] : params) line += " " + k + "=" + v;
  return line + " format=" + format + "\n";
}

void allow_formats(const std::string& format, std::initializer_list<const char*> allowed, const std::string& sub) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw InvalidArgument("format '" + format + "' is not available for " + sub);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Output cmd_graph(const Options& o) {
  allow_formats(o.format, {"json", "dot", "text"}, "graph");
  const Int n = parse_int(o.n, "--n"), L = parse_int(o.L, "--L");
  require_at_least(n, 1, "--n");
  require_at_least(L, 1, "--L");
  const ZolotarevGraph g = build(n, L);
  const NodeCounts c = counts(g);
  std::ostringstream s;
  if (o.format == "dot") {
    s << "// counts roots=" << c.roots << " leaves=" << c.leaves << " branches=" << c.branches
      << " components=" << g.component_count() << "\n";
    s << to_dot(g);
  } else if (o.format == "json") {
    s << dump(graph_json(g));
  } else {
    s << "Z(" << n << "," << L << ")\n";
    s << "roots " << c.roots << "\nleaves " << c.leaves << "\nbranches " << c.branches << "\ncomponents "
      << g.component_count() << "\n";
  }
  return {s.str(), 0};
}

Output cmd_census(const Options& o) {
  allow_formats(o.format, {"json", "csv", "text"}, "census");
  const Int n = parse_int(o.n, "--n"), L = parse_int(o.L, "--L");
  require_at_least(n, 1, "--n");
  require_at_least(L, 1, "--L");
  const CensusComparison c = compare_census(n, L);
  std::string body;
  if (o.format == "json") {
    body = dump(to_json(c));
  } else if (o.format == "csv") {
    body = census_csv(c, !o.no_header);
  } else {
    std::ostringstream s;
    for (auto [j, b] : c.formula.entries) s << "b_" << j << " = " << b << "\n";
    s << (c.agree() ? "agree\n" : "DISAGREE\n");
    body = s.str();
  }
  return {body, c.agree() ? 0 : 3};
}

Output cmd_spectrum(const Options& o) {
  allow_formats(o.format, {"json", "text"}, "spectrum");
  const Int n = parse_int(o.n, "--n"), N = parse_int(o.N, "--N"), kappa = parse_int(o.kappa, "--kappa");
  const Int bound = o.bound.empty() ? 1000 : parse_int(o.bound, "--bound");
  require_at_least(kappa, 1, "--kappa");
  const auto w = spectrum_search(n, N, kappa, bound);
  if (o.format == "text") {
    if (!w) return {"no level L <= " + std::to_string(bound) + "\n", 0};
    return {"L " + std::to_string(w->L) + "\nm " + std::to_string(w->m) + "\n", 0};
  }
  Json j;
  j["n"] = n;
  j["N"] = N;
  j["kappa"] = kappa;
  j["bound"] = bound;
  j["witness"] = w ? to_json(*w) : Json(nullptr);
  j["phi_image"] = in_phi_image(N);
  return {dump(j), 0};
}

Output cmd_kernel(const Options& o) {
  allow_formats(o.format, {"json", "text"}, "kernel");
  const Int n = parse_int(o.n, "--n"), L = parse_int(o.L, "--L"), kappa = parse_int(o.kappa, "--kappa");
  const double tol = o.tol.empty() ? kDefaultRankTolerance : parse_tol(o.tol);
  const KernelReport k = kernel(n, L, kappa, true, tol);
  const DiagonalizabilityReport d = diagonalizable(n, L);
  const Int dim_s = s_dimension(n, L, kappa);
  if (o.format == "text") {
    return {"dim_ker " + std::to_string(k.dim) + "\ndim_S " + std::to_string(dim_s) + "\ndiagonalizable " +
                (d.verdict ? "yes" : "no") + "\n",
            0};
  }
  Json j = to_json(k);
  j["dim_S"] = dim_s;
  j["diagonalizability"] = to_json(d);
  return {dump(j), 0};
}

Output cmd_basis(const Options& o) {
  allow_formats(o.format, {"json", "text"}, "basis");
  const Int n = parse_int(o.n, "--n"), L = parse_int(o.L, "--L"), kappa = parse_int(o.kappa, "--kappa"),
            m = parse_int(o.m, "--m");
  const double tol = o.tol.empty() ? kDefaultRankTolerance : parse_tol(o.tol);
  const EigenReport r = eigenbasis(n, L, kappa, m, true, tol);
  if (o.format == "text") return {"dim " + std::to_string(r.dim_formula) + "\n", 0};
  return {dump(to_json(r)), 0};
}

Output cmd_simult(const Options& o) {
  allow_formats(o.format, {"json", "text"}, "simult");
  const Int L = parse_int(o.L, "--L"), kappa = parse_int(o.kappa, "--kappa");
  const double tol = o.tol.empty() ? kDefaultRankTolerance : parse_tol(o.tol);
  const VBasisReport r = v_basis(L, kappa, tol);
  if (o.format == "text") return {"dim " + std::to_string(r.dim_product) + "\n", 0};
  return {dump(to_json(r)), 0};
}

Output cmd_artin(const Options& o) {
  allow_formats(o.format, {"json", "csv", "text"}, "artin");
  const Int n = parse_int(o.n, "--n"), bound = parse_int(o.bound, "--bound");
  const ArtinReport r = artin_scan(n, bound);
  if (o.format == "csv") return {artin_csv(r, !o.no_header), 0};
  if (o.format == "text") {
    std::ostringstream s;
    for (Int p : r.primes) s << p << "\n";
    s << "density " << r.density << "\n";
    return {s.str(), 0};
  }
  return {dump(to_json(r)), 0};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Output cmd_dissect(const Options& o) {
  allow_formats(o.format, {"json", "text"}, "dissect");
  if (o.f_inline.empty() == o.f_file.empty()) throw InvalidArgument("give exactly one of --f and --file");
  const RationalFunction f = parse_rational_function(o.f_inline.empty() ? read_file(o.f_file) : o.f_inline);
  const Int n = parse_int(o.n, "--n");
  require_at_least(n, 1, "--n");
  std::optional<std::size_t> terms;
  if (!o.terms.empty()) {
    const Int t = parse_int(o.terms, "--terms");
    require_at_least(t, 1, "--terms");
    terms = static_cast<std::size_t>(t);
  }
  const Int dmax = o.dmax.empty() ? kDefaultCyclotomicBound : parse_int(o.dmax, "--dmax");
  require_at_least(dmax, 1, "--dmax");

  const RationalFunction g = apply_un(f, n, terms);
  if (o.format == "text") return {format_rational_function(g) + "\n", 0};

  Json j;
  j["input"] = to_json(f);
  j["n"] = n;
  j["result"] = to_json(g);
  j["result_taylor"] = series_json(taylor(g, 16));
  j["level_weight"] = g.is_zero() ? Json(nullptr) : to_json(level_weight(g, dmax));

  // U_n f = lambda f with lambda rational, when it holds
  Json eigen = nullptr;
  if (!f.is_zero()) {
    if (g.is_zero()) {
      eigen = "0";
    } else {
      const Series sf = taylor(f, 64), sg = taylor(g, 64);
      for (std::size_t k = 0; k < sf.size(); ++k) {
        if (sgn(sf[k]) == 0) continue;
        const Rational lambda = sg[k] / sf[k];
        if (f * lambda == g) eigen = lambda.get_str();
        break;
      }
    }
  }
  j["eigenvalue"] = eigen;
  try {
    const PeriodicSeries<Rational> p = to_periodic(f, dmax);
    Json a = Json::array();
    for (const auto& c : p.coeffs) a.push_back(c.get_str());
    Json periodic{{"L", p.level}, {"kappa", p.weight}, {"a", a}};
    const auto w = verify_eigen(p, n);
    periodic["omega"] = w ? Json{{"numerator", w->numerator}, {"order", w->order}} : Json(nullptr);
    j["periodic"] = periodic;
  } catch (const NotInRLkappa&) {
    j["periodic"] = nullptr;
  }
  return {dump(j), 0};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zolotarev graphs and the dissection operators U_n", "zolo"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", kVersion);
  Options o;

  const auto common = [&](CLI::App* sub, const char* formats) {
    sub->add_option("--format", o.format, formats);
    sub->add_option("--out", o.out_path, "write output to PATH instead of stdout");
    sub->add_flag("--no-header", o.no_header, "omit the metadata header line");
  };

  auto* graph = app.add_subcommand("graph", "render Z(n, L)");
  graph->add_option("--n", o.n, "multiplier")->required();
  graph->add_option("--L", o.L, "modulus")->required();
  common(graph, "json (default), dot or text");

  auto* census = app.add_subcommand("census", "cycle census b_j by three methods");
  census->add_option("--n", o.n, "multiplier")->required();
  census->add_option("--L", o.L, "modulus")->required();
  common(census, "json (default), csv or text");

  auto* spectrum = app.add_subcommand("spectrum", "smallest L with N | ord_L(n)");
  spectrum->add_option("--n", o.n, "multiplier")->required();
  spectrum->add_option("--N", o.N, "eigenvalue order")->required();
  spectrum->add_option("--kappa", o.kappa, "weight (default 1)");
  spectrum->add_option("--bound", o.bound, "search bound on L (default 1000)");
  common(spectrum, "json (default) or text");

  auto* kern = app.add_subcommand("kernel", "kernel, dim S and diagonalizability of U_n on R(L, kappa)");
  kern->add_option("--n", o.n, "multiplier")->required();
  kern->add_option("--L", o.L, "level")->required();
  kern->add_option("--kappa", o.kappa, "weight (default 1)");
  kern->add_option("--tol", o.tol, "rank tolerance (default 1e-8)");
  common(kern, "json (default) or text");

  auto* basis = app.add_subcommand("basis", "eigenbasis of U_n for eigenvalue n^(kappa-1) e^(2 pi i/m)");
  basis->add_option("--n", o.n, "multiplier")->required();
  basis->add_option("--L", o.L, "level")->required();
  basis->add_option("--m", o.m, "order of omega")->required();
  basis->add_option("--kappa", o.kappa, "weight (default 1)");
  basis->add_option("--tol", o.tol, "rank tolerance (default 1e-8)");
  common(basis, "json (default) or text");

  auto* simult = app.add_subcommand("simult", "character-series basis of V(L, kappa)");
  simult->add_option("--L", o.L, "level")->required();
  simult->add_option("--kappa", o.kappa, "weight (default 1)");
  simult->add_option("--tol", o.tol, "rank tolerance (default 1e-8)");
  common(simult, "json (default) or text");

  auto* artin = app.add_subcommand("artin", "primes p <= bound with n a primitive root");
  artin->add_option("--n", o.n, "base")->required();
  artin->add_option("--bound", o.bound, "largest prime scanned")->required();
  common(artin, "json (default), csv or text");

  auto* dissect_cmd = app.add_subcommand("dissect", "U_n of a rational function");
  dissect_cmd->add_option("--f", o.f_inline, "rational function, e.g. \"(1) / (1 - x)\"");
  dissect_cmd->add_option("--file", o.f_file, "file holding the rational function");
  dissect_cmd->add_option("--n", o.n, "dissection step")->required();
  dissect_cmd->add_option("--terms", o.terms, "Taylor term budget (default automatic)");
  dissect_cmd->add_option("--dmax", o.dmax, "largest cyclotomic index tried (default 200)");
  common(dissect_cmd, "json (default) or text");

  std::vector<std::string> storage{"zolo"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  Output result;
  try {
    if (name == "graph") result = cmd_graph(o);
    else if (name == "census") result = cmd_census(o);
    else if (name == "spectrum") result = cmd_spectrum(o);
    else if (name == "kernel") result = cmd_kernel(o);
    else if (name == "basis") result = cmd_basis(o);
    else if (name == "simult") result = cmd_simult(o);
    else if (name == "artin") result = cmd_artin(o);
    else result = cmd_dissect(o);
  } catch (const InternalViolation& e) {
    err << "internal violation: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::vector<std::pair<std::string, std::string>> params;
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help" || opt->get_name() == "--out" ||
        opt->get_name() == "--format" || opt->get_name() == "--no-header") {
      continue;
    }
    params.emplace_back(opt->get_name().substr(2), opt->results().front());
  }
  std::string text = (o.no_header ? "" : header_line(name, params, o.format)) + result.body;

  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file || !(file << text)) {
      err << "error: cannot write " << o.out_path << "\n";
      return 2;
    }
  }
  if (result.code == 3) err << "census methods disagree\n";
  return result.code;
}

}  // namespace zolo
