#include "hyperarr/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "hyperarr/catalan.hpp"
#include "hyperarr/families.hpp"
#include "hyperarr/finite_field.hpp"
#include "hyperarr/graphs.hpp"
#include "hyperarr/orlik_solomon.hpp"
#include "hyperarr/parking.hpp"
#include "hyperarr/poset.hpp"
#include "hyperarr/regions.hpp"
#include "hyperarr/selftest.hpp"

namespace hyperarr {

namespace {

using ojson = nlohmann::ordered_json;

const char* kUsage =
    "usage: hyperarr <subcommand> [flags]\n"
    "subcommands:\n"
    "  chi (--family <name> | --file <arrangement>) [--method mobius|delcon|finitefield|all]\n"
    "  regions (--family <name> | --file <arrangement>) [--enumerate] [--bounded] [--max-regions <k>]\n"
    "  parking --n <int> [--enumerate] [--labels]\n"
    "  ballot --n <int> [--enumerate]\n"
    "  os (--family <name> | --file <arrangement>)\n"
    "  linial-roots --n <int> [--tol <float>]\n"
    "  graph --file <graph> [--chromatic] [--acyclic]\n"
    "  selftest\n"
    "families: braid, catalan, shi, linial (--n), generic (--n, --d), graphical (--graph <file>)\n"
    "common flags: --json, --max-points <k>, --threads <k>\n";

struct Options {
  std::string subcommand;
  std::string family, graph_file, file, method = "mobius";
  long long n = -1, d = -1;
  long long max_points = kDefaultPointBudget;
  long long max_regions = -1;
  int threads = 1;
  double tol = 1e-6;
  bool enumerate = false, bounded = false, labels = false;
  bool chromatic = false, acyclic = false, json = false;
  bool has_n = false, has_d = false;
};

long long parse_int(const std::string& flag, const std::string& v) {
  try {
    size_t pos = 0;
    long long r = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return r;
  } catch (const ParseError&) {
    throw;
  } catch (...) {
    throw ParseError(flag + " expects an integer, got '" + v + "'");
  }
}

double parse_float(const std::string& flag, const std::string& v) {
  try {
    size_t pos = 0;
    double r = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return r;
  } catch (...) {
    throw ParseError(flag + " expects a number, got '" + v + "'");
  }
}

Options parse_args(const std::vector<std::string>& args) {
  if (args.empty()) throw ParseError("missing subcommand");
  Options o;
  o.subcommand = args[0];
  const std::set<std::string> subs = {"chi",    "regions",      "parking", "ballot",
                                      "os",     "linial-roots", "graph",   "selftest"};
  if (!subs.count(o.subcommand))
    throw ParseError("unknown subcommand '" + o.subcommand + "'");

  for (size_t i = 1; i < args.size(); ++i) {
    const std::string& a = args[i];
    auto value = [&]() -> const std::string& {
      if (i + 1 >= args.size()) throw ParseError(a + " expects a value");
      return args[++i];
    };
    if (a == "--family")
      o.family = value();
    else if (a == "--graph")
      o.graph_file = value();
    else if (a == "--file")
      o.file = value();
    else if (a == "--method")
      o.method = value();
    else if (a == "--n") {
      o.n = parse_int(a, value());
      o.has_n = true;
    } else if (a == "--d") {
      o.d = parse_int(a, value());
      o.has_d = true;
    } else if (a == "--max-points")
      o.max_points = parse_int(a, value());
    else if (a == "--max-regions")
      o.max_regions = parse_int(a, value());
    else if (a == "--threads")
      o.threads = static_cast<int>(parse_int(a, value()));
    else if (a == "--tol")
      o.tol = parse_float(a, value());
    else if (a == "--enumerate")
      o.enumerate = true;
    else if (a == "--bounded")
      o.bounded = true;
    else if (a == "--labels")
      o.labels = true;
    else if (a == "--chromatic")
      o.chromatic = true;
    else if (a == "--acyclic")
      o.acyclic = true;
    else if (a == "--json")
      o.json = true;
    else
      throw ParseError("unknown flag '" + a + "'");
  }
  return o;
}

long long require_n(const Options& o) {
  if (!o.has_n) throw ParseError(o.subcommand + " requires --n");
  return o.n;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_graph(in);
}

Arrangement resolve_arrangement(const Options& o) {
  if (!o.file.empty() && !o.family.empty())
    throw ParseError("--file and --family are mutually exclusive");
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw ParseError("cannot open '" + o.file + "'");
    return read_arrangement(in);
  }
  if (o.family.empty()) throw ParseError("need --file or --family");
  int n = static_cast<int>(o.has_n ? o.n : -1);
  if (o.family == "braid") return make_family(FamilySpec::braid(static_cast<int>(require_n(o))));
  if (o.family == "catalan") return make_family(FamilySpec::catalan(static_cast<int>(require_n(o))));
  if (o.family == "shi") return make_family(FamilySpec::shi(static_cast<int>(require_n(o))));
  if (o.family == "linial") return make_family(FamilySpec::linial(static_cast<int>(require_n(o))));
  if (o.family == "generic") {
    if (!o.has_d) throw ParseError("generic requires --d");
    return make_family(FamilySpec::generic(static_cast<int>(require_n(o)), static_cast<int>(o.d)));
  }
  if (o.family == "graphical") {
    if (o.graph_file.empty()) throw ParseError("graphical requires --graph <file>");
    return make_family(FamilySpec::graphical(load_graph(o.graph_file)));
  }
  (void)n;
  throw ParseError("unknown family '" + o.family + "'");
}

std::vector<std::string> coeff_strings(const Poly& p) {
  std::vector<std::string> out;
  if (p.c.empty()) return {"0"};
  out.reserve(p.c.size());
  for (const Rat& v : p.c) out.push_back(rat_str(v));
  return out;
}

ojson poly_json(const Poly& p, const std::string& var) {
  ojson j;
  j["coefficients"] = coeff_strings(p);
  j["text"] = poly_str(p, var);
  return j;
}

void emit(std::ostream& out, const ojson& j) { out << j.dump(2) << "\n"; }

int run_chi(const Options& o, std::ostream& out) {
  Arrangement a = resolve_arrangement(o);
  std::vector<std::string> methods;
  if (o.method == "all")
    methods = {"mobius", "delcon", "finitefield"};
  else if (o.method == "mobius" || o.method == "delcon" || o.method == "finitefield")
    methods = {o.method};
  else
    throw ParseError("unknown method '" + o.method + "'");

  std::map<std::string, Poly> chi;
  for (const std::string& m : methods) {
    if (m == "mobius")
      chi.emplace(m, chi_via_mobius(a));
    else if (m == "delcon")
      chi.emplace(m, chi_via_deletion_contraction(a));
    else
      chi.emplace(m, chi_via_finite_field(a, o.max_points, o.threads));
  }
  bool agree = true;
  for (const std::string& m : methods)
    if (!(chi.at(m) == chi.at(methods[0]))) agree = false;
  if (!agree) throw std::logic_error("chi methods disagree");

  if (o.json) {
    ojson j;
    j["command"] = "chi";
    j["d"] = a.d;
    j["n"] = a.n();
    j["rank"] = arrangement_rank(a);
    j["methods"] = methods;
    ojson per;
    for (const std::string& m : methods) per[m] = poly_json(chi.at(m), "t");
    j["chi"] = per;
    j["agree"] = agree;
    emit(out, j);
  } else {
    out << "d " << a.d << "\n";
    out << "n " << a.n() << "\n";
    out << "rank " << arrangement_rank(a) << "\n";
    for (const std::string& m : methods)
      out << "chi (" << m << ") = " << poly_str(chi.at(m), "t") << "\n";
    if (methods.size() > 1) out << "agree yes\n";
  }
  return 0;
}

int run_regions(const Options& o, std::ostream& out) {
  Arrangement a = resolve_arrangement(o);
  ZaslavskyCounts z = zaslavsky_counts(a);
  bool list = o.enumerate || o.bounded;

  std::vector<Region> regions;
  if (list) {
    RegionOptions opts;
    opts.max_regions = o.max_regions;
    regions = enumerate_regions(a, opts);
    long long b = 0;
    for (const Region& r : regions)
      if (r.relatively_bounded) ++b;
    if (static_cast<long long>(regions.size()) != z.regions || b != z.bounded)
      throw std::logic_error("enumeration disagrees with Zaslavsky counts");
  }

  if (o.json) {
    ojson j;
    j["command"] = "regions";
    j["d"] = a.d;
    j["n"] = a.n();
    j["rank"] = arrangement_rank(a);
    j["regions"] = z.regions;
    j["bounded"] = z.bounded;
    if (list) {
      ojson arr = ojson::array();
      for (const Region& r : regions) {
        if (o.bounded && !r.relatively_bounded) continue;
        ojson e;
        e["signs"] = signs_str(r.signs);
        e["bounded"] = r.relatively_bounded;
        std::vector<std::string> pt;
        for (const Rat& v : r.sample) pt.push_back(rat_str(v));
        e["sample"] = pt;
        arr.push_back(std::move(e));
      }
      j["list"] = std::move(arr);
    }
    emit(out, j);
  } else {
    out << "d " << a.d << "\n";
    out << "n " << a.n() << "\n";
    out << "rank " << arrangement_rank(a) << "\n";
    out << "regions " << z.regions << "\n";
    out << "bounded " << z.bounded << "\n";
    if (list)
      for (const Region& r : regions) {
        if (o.bounded && !r.relatively_bounded) continue;
        out << "region " << signs_str(r.signs)
            << (r.relatively_bounded ? " bounded" : " unbounded") << " sample";
        for (const Rat& v : r.sample) out << " " << rat_str(v);
        out << "\n";
      }
  }
  return 0;
}

int run_parking(const Options& o, std::ostream& out) {
  int n = static_cast<int>(require_n(o));
  std::vector<std::vector<int>> funcs = enumerate_parking_functions(n);
  std::map<SignVector, std::vector<int>> labels;
  if (o.labels) labels = pak_labeling(n);

  if (o.json) {
    ojson j;
    j["command"] = "parking";
    j["n"] = n;
    j["count"] = funcs.size();
    if (o.enumerate) j["functions"] = funcs;
    if (o.labels) {
      ojson arr = ojson::array();
      for (const auto& [signs, label] : labels) {
        ojson e;
        e["signs"] = signs_str(signs);
        e["label"] = label;
        arr.push_back(std::move(e));
      }
      j["labels"] = std::move(arr);
    }
    emit(out, j);
  } else {
    out << "n " << n << "\n";
    out << "parking functions " << funcs.size() << "\n";
    if (o.enumerate)
      for (const auto& f : funcs) {
        for (size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
        out << "\n";
      }
    if (o.labels) {
      out << "labels " << labels.size() << "\n";
      for (const auto& [signs, label] : labels) {
        out << signs_str(signs);
        for (int v : label) out << " " << v;
        out << "\n";
      }
    }
  }
  return 0;
}

int run_ballot(const Options& o, std::ostream& out) {
  int n = static_cast<int>(require_n(o));
  std::vector<std::vector<int>> seqs = enumerate_ballot_sequences(n);
  if (seqs.size() != catalan_number(n))
    throw std::logic_error("ballot count disagrees with the Catalan number");

  auto compact = [](const std::vector<int>& b) {
    std::string s;
    for (int v : b) s.push_back(v > 0 ? '+' : '-');
    return s;
  };
  if (o.json) {
    ojson j;
    j["command"] = "ballot";
    j["n"] = n;
    j["count"] = seqs.size();
    if (o.enumerate) j["sequences"] = seqs;
    emit(out, j);
  } else {
    out << "n " << n << "\n";
    out << "ballot sequences " << seqs.size() << "\n";
    if (o.enumerate)
      for (const auto& b : seqs) out << compact(b) << "\n";
  }
  return 0;
}

int run_os(const Options& o, std::ostream& out) {
  Arrangement a = resolve_arrangement(o);
  std::vector<long long> dims = graded_dimensions(a);
  Poly hp = hilbert_polynomial(a);
  size_t gens = ideal_generators(a).size();

  if (o.json) {
    ojson j;
    j["command"] = "os";
    j["d"] = a.d;
    j["n"] = a.n();
    j["rank"] = arrangement_rank(a);
    j["dims"] = dims;
    j["hilbert"] = poly_json(hp, "x");
    j["generators"] = gens;
    emit(out, j);
  } else {
    out << "d " << a.d << "\n";
    out << "n " << a.n() << "\n";
    out << "rank " << arrangement_rank(a) << "\n";
    out << "dims";
    for (long long v : dims) out << " " << v;
    out << "\n";
    out << "hilbert " << poly_str(hp, "x") << "\n";
    out << "generators " << gens << "\n";
  }
  return 0;
}

int run_linial_roots(const Options& o, std::ostream& out) {
  int n = static_cast<int>(require_n(o));
  Poly chi = chi_formula_linial(n);
  if (n <= 5) {
    Poly check = chi_via_mobius(make_family(FamilySpec::linial(n)));
    if (!(chi == check)) throw std::logic_error("Linial formula disagrees with poset chi");
  }
  if (chi.c.empty() || rat_sgn(chi.c[0]) != 0)
    throw std::logic_error("Linial chi should vanish at 0");
  Poly quotient(std::vector<Rat>(chi.c.begin() + 1, chi.c.end()));

  std::vector<std::complex<double>> roots;
  if (quotient.degree() > 0) roots = poly_roots_numeric(quotient);
  double center = n / 2.0, maxdev = 0.0;
  for (auto& r : roots) maxdev = std::max(maxdev, std::fabs(r.real() - center));
  bool ok = maxdev < o.tol;

  if (o.json) {
    ojson j;
    j["command"] = "linial-roots";
    j["n"] = n;
    j["tol"] = o.tol;
    j["chi"] = poly_json(chi, "t");
    ojson arr = ojson::array();
    for (auto& r : roots) {
      ojson e;
      e["re"] = r.real();
      e["im"] = r.imag();
      arr.push_back(std::move(e));
    }
    j["roots"] = std::move(arr);
    j["max_deviation"] = maxdev;
    j["ok"] = ok;
    emit(out, j);
  } else {
    out << "n " << n << "\n";
    out << "chi " << poly_str(chi, "t") << "\n";
    out << std::setprecision(12);
    for (auto& r : roots) out << "root " << r.real() << " " << r.imag() << "\n";
    out << "max deviation " << maxdev << "\n";
    out << "verdict " << (ok ? "ok" : "fail") << "\n";
  }
  return ok ? 0 : 1;
}

int run_graph(const Options& o, std::ostream& out) {
  if (o.file.empty()) throw ParseError("graph requires --file");
  Graph g = load_graph(o.file);
  bool want_chromatic = o.chromatic || !o.acyclic;
  bool want_acyclic = o.acyclic || !o.chromatic;

  Poly chrom;
  long long acyclic = 0;
  if (want_chromatic) chrom = chromatic_polynomial(g);
  if (want_acyclic) acyclic = count_acyclic_orientations(g);

  if (o.json) {
    ojson j;
    j["command"] = "graph";
    j["vertices"] = g.n;
    j["edges"] = g.edges.size();
    if (want_chromatic) j["chromatic"] = poly_json(chrom, "t");
    if (want_acyclic) j["acyclic"] = acyclic;
    emit(out, j);
  } else {
    out << "vertices " << g.n << "\n";
    out << "edges " << g.edges.size() << "\n";
    if (want_chromatic) out << "chromatic " << poly_str(chrom, "t") << "\n";
    if (want_acyclic) out << "acyclic orientations " << acyclic << "\n";
  }
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    if (args.empty() || args[0] == "--help" || args[0] == "help") {
      (args.empty() ? err : out) << kUsage;
      return args.empty() ? 2 : 0;
    }
    Options o = parse_args(args);
    if (o.subcommand == "chi") return run_chi(o, out);
    if (o.subcommand == "regions") return run_regions(o, out);
    if (o.subcommand == "parking") return run_parking(o, out);
    if (o.subcommand == "ballot") return run_ballot(o, out);
    if (o.subcommand == "os") return run_os(o, out);
    if (o.subcommand == "linial-roots") return run_linial_roots(o, out);
    if (o.subcommand == "graph") return run_graph(o, out);
    return run_selftest(out) == 0 ? 0 : 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidSpec& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cli_main(args, out, err);
}

}  // namespace hyperarr
