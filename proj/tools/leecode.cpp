// leecode: construct, analyze and tabulate Manhattan/Lee-metric lattice codes
// and apply the Hadamard sphere-to-box transforms.
//
// Exit codes: 0 success, 2 invalid arguments, 3 input format error,
// 4 inconclusive computation (raise a cap), 1 internal error.

#include <CLI11.hpp>
#include <leecode/leecode.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using leecode::Integer;
using leecode::Lattice;
using leecode::ordered_json;

constexpr int kExitInvalid = 2;
constexpr int kExitFormat = 3;
constexpr int kExitInconclusive = 4;

std::unique_ptr<std::istream> open_input(const std::string& path) {
  if (path == "-") return std::make_unique<std::istream>(std::cin.rdbuf());
  auto f = std::make_unique<std::ifstream>(path);
  if (!*f) throw leecode::ParseError("cannot open '" + path + "'");
  return f;
}

Lattice load_lattice(const std::string& path) {
  auto in = open_input(path);
  return leecode::read_matrix(*in);
}

struct ConstructArgs {
  std::string family;
  long n = 0;
  long d = 0;
  long i = 0;
  long j = 0;
  long order = 0;
  unsigned times = 1;
  std::string in;
  std::string a;
  std::string b;
  std::string out;
  bool matrix_only = false;
  bool verify = false;
  std::int64_t min_dist_cap = 64;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw leecode::PreconditionError(what);
}

leecode::HadamardMatrix hadamard_of_order(long order) {
  require(order >= 1, "hadamard: --order is required");
  if ((order & (order - 1)) == 0) {
    unsigned k = 0;
    while ((1L << k) < order) ++k;
    return leecode::sylvester(k);
  }
  return leecode::paley(static_cast<std::uint64_t>(order - 1));
}

int run_construct(const ConstructArgs& args) {
  const std::string& f = args.family;
  std::optional<Lattice> lat;
  std::optional<Integer> nominal_d;
  ordered_json extra;
  if (f == "hadamard") {
    lat = leecode::hadamard_code(hadamard_of_order(args.order));
    nominal_d = Integer(args.order);
  } else if (f == "gij") {
    require(args.i >= 2 && args.j >= 2, "gij: --i and --j must be at least 2");
    lat = leecode::g_matrix(static_cast<unsigned>(args.i), static_cast<unsigned>(args.j));
    nominal_d = leecode::pow(Integer(2), static_cast<unsigned long>(args.j));
  } else if (f == "minkowski3") {
    lat = leecode::minkowski3(args.d);
    nominal_d = Integer(args.d);
  } else if (f == "dim4") {
    lat = leecode::dim4(args.d);
    extra = leecode::to_json(leecode::dim4_reconciliation(args.d, args.min_dist_cap));
  } else if (f == "n2perfect") {
    lat = leecode::n2_perfect(args.d);
    nominal_d = Integer(args.d);
  } else if (f == "gn") {
    require(args.n >= 2, "gn: --n must be at least 2");
    lat = leecode::gn(static_cast<std::size_t>(args.n));
    nominal_d = 4;
  } else if (f == "double") {
    require(!args.in.empty(), "double: --in is required");
    lat = leecode::double_code(load_lattice(args.in), args.times);
    nominal_d = 4;
  } else if (f == "scaled") {
    require(args.n >= 2, "scaled: --n must be at least 2");
    lat = leecode::scaled_diameter_code(static_cast<std::size_t>(args.n), args.d);
    nominal_d = Integer(args.d);
  } else if (f == "gw") {
    require(args.n >= 1, "gw: --n must be at least 1");
    lat = leecode::gw_perfect(static_cast<std::size_t>(args.n));
    nominal_d = 3;
  } else if (f == "kronecker") {
    require(!args.a.empty() && !args.b.empty(), "kronecker: --a and --b are required");
    lat = leecode::kronecker(load_lattice(args.a), load_lattice(args.b));
  } else if (f == "puncture") {
    require(!args.in.empty(), "puncture: --in is required");
    Lattice src = load_lattice(args.in);
    lat = leecode::puncture(Lattice(leecode::upper_hnf(src.integer_generator())));
  } else {
    throw leecode::PreconditionError("unknown family '" + f + "'");
  }

  if (!args.out.empty()) {
    std::ofstream o(args.out);
    if (!o) throw leecode::PreconditionError("cannot write '" + args.out + "'");
    leecode::write_matrix(o, *lat);
  }
  if (args.matrix_only) {
    leecode::write_matrix(std::cout, *lat);
    return 0;
  }

  Integer d;
  std::string source;
  if (nominal_d && !args.verify) {
    d = *nominal_d;
    source = "construction";
  } else {
    d = leecode::min_distance_auto(*lat, nominal_d ? nominal_d->get_si() : 1, args.min_dist_cap);
    source = "search";
  }
  leecode::CodeParams p = leecode::reduce_mod_period(*lat, d);

  ordered_json doc;
  doc["family"] = f;
  doc["n"] = p.n;
  doc["d"] = p.d.get_str();
  doc["d_source"] = source;
  doc["volume"] = p.v.get_str();
  doc["q"] = p.q.get_str();
  doc["density"] = leecode::rational_json(p.density);
  doc["scale"] = leecode::to_fraction_string(lat->scale());
  ordered_json gen = ordered_json::array();
  for (std::size_t r = 0; r < lat->dim(); ++r) {
    ordered_json row = ordered_json::array();
    for (const auto& v : lat->gen().row(r)) row.push_back(v.get_str());
    gen.push_back(row);
  }
  doc["generator"] = gen;
  if (!extra.is_null()) doc["reconciliation"] = extra;
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int run_analyze(const std::string& path, const leecode::AnalyzeOptions& opt) {
  Lattice lat = load_lattice(path);
  std::cout << leecode::to_json(leecode::analyze(lat, opt)).dump(2) << "\n";
  return 0;
}

std::vector<leecode::Point> read_points(std::istream& in, std::size_t length) {
  std::vector<leecode::Point> pts;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    leecode::Point p;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw leecode::ParseError("line " + std::to_string(line_no) + ": bad integer '" + tok + "'");
      p.push_back(v);
    }
    if (p.empty()) continue;
    if (p.size() != length)
      throw leecode::ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(length) +
                                " coordinates, got " + std::to_string(p.size()));
    pts.push_back(std::move(p));
  }
  return pts;
}

int run_transform(long d, const std::string& mode, const std::string& path) {
  require(d == 2 || d == 4, "transform: --d must be 2 or 4");
  require(mode == "cont" || mode == "disc", "transform: --mode must be cont or disc");
  auto in = open_input(path);
  if (mode == "cont") {
    leecode::HadamardMatrix h = leecode::sylvester(d == 2 ? 2 : 4);
    for (const auto& p : read_points(*in, h.order())) {
      auto values = *leecode::t_apply(h, p).rational();
      for (std::size_t k = 0; k < values.size(); ++k) {
        const auto& v = values[k];
        std::cout << (k ? " " : "") << (v.get_den() == 1 ? v.get_num().get_str() : leecode::to_fraction_string(v));
      }
      std::cout << "\n";
    }
    return 0;
  }
  leecode::TransformSpec spec = leecode::TransformSpec::sylvester_spec(d);
  for (const auto& p : read_points(*in, spec.dim())) leecode::write_point(std::cout, leecode::discrete_transform(spec, p));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice codes in the Manhattan and Lee metrics"};
  app.require_subcommand(1);

  ConstructArgs cargs;
  auto* construct = app.add_subcommand("construct", "Build a named lattice code and print its parameters");
  construct->add_option("family", cargs.family,
                        "hadamard, gij, minkowski3, dim4, n2perfect, gn, double, scaled, gw, kronecker, puncture")
      ->required();
  construct->add_option("--n", cargs.n, "Length (gn, scaled, gw)");
  construct->add_option("--d", cargs.d, "Target minimum distance");
  construct->add_option("--i", cargs.i, "Length exponent for gij");
  construct->add_option("--j", cargs.j, "Distance exponent for gij");
  construct->add_option("--order", cargs.order, "Hadamard order (2^k or p+1 with p = 3 mod 4)");
  construct->add_option("--in", cargs.in, "Input matrix file for double/puncture ('-' for stdin)");
  construct->add_option("--times", cargs.times, "Number of doublings");
  construct->add_option("--a", cargs.a, "First Kronecker factor matrix file");
  construct->add_option("--b", cargs.b, "Second Kronecker factor matrix file");
  construct->add_option("--out", cargs.out, "Write the generator matrix to this file");
  construct->add_flag("--matrix-only", cargs.matrix_only, "Print only the generator matrix");
  construct->add_flag("--verify", cargs.verify, "Measure the minimum distance by search");
  construct->add_option("--min-dist-cap", cargs.min_dist_cap, "Largest weight searched for the distance");

  std::string analyze_path;
  leecode::AnalyzeOptions aopt;
  auto* analyze = app.add_subcommand("analyze", "Distance, period, covering radius and certificate of a lattice");
  analyze->add_option("matrix", analyze_path, "Matrix file ('-' for stdin)")->required();
  analyze->add_option("--min-dist-cap", aopt.min_dist_cap, "Largest weight searched for the distance");
  analyze->add_option("--coset-cap", aopt.coset_cap, "Largest volume for the coset table");
  analyze->add_flag("--json", "JSON output (the default)");

  std::size_t max_n = 12;
  bool notes = false;
  auto* density = app.add_subcommand("density", "CSV table of the best packing density per length");
  density->add_option("--max-n", max_n, "Largest length (2..12)");
  density->add_flag("--notes", notes, "Append a note column");

  long tdim = 2;
  std::string tmode = "disc";
  std::string tpath = "-";
  auto* transform = app.add_subcommand("transform", "Apply T (cont) or T_{d^2} (disc) to a point stream");
  transform->add_option("--d", tdim, "Square root of the Hadamard order (2 or 4)");
  transform->add_option("--mode", tmode, "cont or disc");
  transform->add_option("--in", tpath, "Point file, one point per line ('-' for stdin)");

  std::string shape;
  long pn = 0;
  long pr = 0;
  auto* points = app.add_subcommand("points", "Dump a Lee sphere or odd anticode, one point per line");
  points->add_option("shape", shape, "sphere or anticode")->required();
  points->add_option("--n", pn, "Dimension")->required();
  points->add_option("--r", pr, "Radius")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*construct) return run_construct(cargs);
    if (*analyze) return run_analyze(analyze_path, aopt);
    if (*density) {
      leecode::write_density_csv(std::cout, leecode::density_table(max_n), notes);
      return 0;
    }
    if (*transform) return run_transform(tdim, tmode, tpath);
    if (*points) {
      require(pn >= 1 && pr >= 0, "points: need --n >= 1 and --r >= 0");
      if (shape == "sphere")
        leecode::write_points(std::cout, leecode::enumerate_sphere(static_cast<std::size_t>(pn), static_cast<std::uint64_t>(pr)));
      else if (shape == "anticode")
        leecode::write_points(std::cout,
                              leecode::enumerate_anticode_odd(static_cast<std::size_t>(pn), static_cast<std::uint64_t>(pr)));
      else
        throw leecode::PreconditionError("points: shape must be sphere or anticode");
      return 0;
    }
  } catch (const leecode::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const leecode::InconclusiveError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const leecode::SizeError& e) {
    std::cerr << "inconclusive: " << e.what() << " (raise the cap)\n";
    return kExitInconclusive;
  } catch (const leecode::InconsistencyError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const leecode::Error& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return kExitInvalid;
  }
  return 0;
}
