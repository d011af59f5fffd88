// fibquad: command-line front end.
//
// Exit codes: 0 success / all claims pass, 1 a verification claim failed,
// 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fibquad/error.hpp"
#include "fibquad/family.hpp"
#include "fibquad/fibonacci.hpp"
#include "fibquad/plot.hpp"
#include "fibquad/quadratic.hpp"
#include "fibquad/serialize.hpp"
#include "fibquad/triples.hpp"
#include "fibquad/verify.hpp"

using namespace fibquad;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Int parse_int(const std::string& text, const std::string& what) {
  Int v;
  if (text.empty() || v.set_str(text, 10) != 0) throw UsageError(what + ": not an integer: '" + text + "'");
  return v;
}

Index parse_index(const std::string& text, const std::string& what) {
  const Int v = parse_int(text, what);
  if (sgn(v) < 0) throw UsageError(what + " must be >= 0");
  if (!v.fits_ulong_p()) throw UsageError(what + " is too large");
  return v.get_ui();
}

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
}

// fib ----------------------------------------------------------------------

struct FibArgs {
  std::string n;
  std::string mod;
  std::string format = "table";
};

int run_fib(const FibArgs& args) {
  const Index n = parse_index(args.n, "--n");
  std::optional<Int> m;
  if (!args.mod.empty()) m = parse_int(args.mod, "--mod");
  const Int value = m ? fib_mod(n, *m) : fib(n);
  if (args.format == "json") {
    json j = {{"n", std::to_string(n)}, {"value", to_json(value)}};
    if (m) j["mod"] = to_json(*m);
    std::cout << j.dump(2) << '\n';
  } else if (args.format == "csv") {
    std::cout << "n,mod,value\n" << n << ',' << (m ? m->get_str() : "") << ',' << value.get_str() << '\n';
  } else {
    std::cout << value.get_str() << '\n';
  }
  return kExitOk;
}

// triples ------------------------------------------------------------------

struct TriplesArgs {
  std::string from;
  std::string to;
  std::string scale = "1";
  std::string format = "table";
};

int run_triples(const TriplesArgs& args) {
  const Index from = parse_index(args.from, "--from");
  const Index to = parse_index(args.to, "--to");
  const Int k = parse_int(args.scale, "--scale");
  if (from == 0) throw UsageError("--from must be >= 1 (window 0 is degenerate)");
  if (to < from) throw UsageError("--to must be >= --from");
  if (k < 1) throw UsageError("--scale must be >= 1");

  json rows = json::array();
  if (args.format == "csv") std::cout << "i,leg_a,leg_b,hyp,gcd,primitive\n";
  for (Index i = from; i <= to; ++i) {
    const Triple t = scale(triple_from_window(fib_window(i)), k);
    const Primitivity p = primitivity(t);
    if (args.format == "json") {
      json row = to_json(t);
      row["i"] = std::to_string(i);
      rows.push_back(std::move(row));
    } else if (args.format == "csv") {
      std::cout << i << ',' << t.leg_a() << ',' << t.leg_b() << ',' << t.hyp() << ',' << p.g << ','
                << (p.is_primitive ? "true" : "false") << '\n';
    } else {
      std::cout << "i=" << i << "  (" << t.leg_a() << ", " << t.leg_b() << ", " << t.hyp() << ")  gcd " << p.g
                << (p.is_primitive ? "  primitive" : "  not primitive") << '\n';
    }
  }
  if (args.format == "json") std::cout << rows.dump(2) << '\n';
  return kExitOk;
}

// quad ---------------------------------------------------------------------

struct QuadArgs {
  std::string leg;
  std::string hyp;
  bool negative = false;
  std::string a;
  std::string b;
  std::string c;
  std::string format = "table";
};

void print_report(const AnalysisReport& r, const std::string& format) {
  if (format == "json") {
    std::cout << to_json(r).dump(2) << '\n';
    return;
  }
  if (format == "csv") {
    std::cout << kFamilyCsvHeader << '\n' << family_csv_row("", r) << '\n';
    return;
  }
  std::cout << "poly          a = " << r.poly.a() << ", b = " << r.poly.b() << ", c = " << r.poly.c() << '\n'
            << "discriminant  " << r.discriminant << '\n'
            << "roots         " << to_string(r.roots.kind);
  if (r.roots.rational()) std::cout << "  x1 = " << plain(r.roots.x1) << ", x2 = " << plain(r.roots.x2);
  std::cout << '\n' << "vertex        (" << plain(r.vertex.x) << ", " << plain(r.vertex.y) << ")\n";
  if (r.integral_signed) {
    std::cout << "integral      " << plain(*r.integral_signed) << "  (|integral| = " << plain(*r.integral_abs)
              << ")\n"
              << "breakdown     P1 = " << plain(r.breakdown->p1) << ", P2 = " << plain(r.breakdown->p2)
              << ", P3 = " << plain(r.breakdown->p3) << '\n';
  } else {
    std::cout << "integral      none (roots not rational)\n";
  }
}

int run_quad_build(const QuadArgs& args) {
  const Int leg = parse_int(args.leg, "--leg");
  const Int hyp = parse_int(args.hyp, "--hyp");
  print_report(analyze(build_quadratic(leg, hyp, args.negative ? Orientation::negative : Orientation::positive)),
               args.format);
  return kExitOk;
}

int run_quad_analyze(const QuadArgs& args) {
  const Int a = parse_int(args.a, "--a");
  const Int b = parse_int(args.b, "--b");
  const Int c = parse_int(args.c, "--c");
  print_report(analyze(QuadPoly(a, b, c)), args.format);
  return kExitOk;
}

// family -------------------------------------------------------------------

struct FamilyArgs {
  std::string n_max = "0";
  std::string flavor = "both";
  std::string format = "table";
};

int run_family(const FamilyArgs& args) {
  const Index n_max = parse_index(args.n_max, "--n-max");
  struct Member {
    const char* name;
    long leg;
    long other;
    long closed;  // |integral| / (n+1)^4
  };
  std::vector<Member> members;
  if (args.flavor != "g") members.push_back({"f", 3, 4, 256});
  if (args.flavor != "f") members.push_back({"g", 4, 3, 144});

  json rows = json::array();
  if (args.format == "csv") {
    std::cout << kFamilyCsvHeader << ",flavor,leg_a,leg_b,hyp,closed_form,match\n";
  }
  for (Index n = 0; n <= n_max; ++n) {
    const Int m = static_cast<unsigned long>(n + 1);
    for (const Member& mem : members) {
      const Int leg = mem.leg * m;
      const Int other = mem.other * m;
      const Int hyp = 5 * m;
      const AnalysisReport r = analyze(build_quadratic(leg, hyp, Orientation::positive));
      const Int closed = mem.closed * pow(m, 4);
      const bool match = r.integral_abs && *r.integral_abs == Rat(closed);
      if (args.format == "json") {
        json row = to_json(r);
        row["n"] = std::to_string(n);
        row["flavor"] = mem.name;
        row["triple"] = {{"leg_a", to_json(leg)}, {"leg_b", to_json(other)}, {"hyp", to_json(hyp)}};
        row["closed_form"] = to_json(closed);
        row["match"] = match;
        rows.push_back(std::move(row));
      } else if (args.format == "csv") {
        std::cout << family_csv_row(std::to_string(n), r) << ',' << mem.name << ',' << leg << ',' << other << ','
                  << hyp << ',' << closed << ',' << (match ? "true" : "false") << '\n';
      } else {
        std::cout << mem.name << "  n=" << n << "  triple (" << leg << ", " << other << ", " << hyp << ")  poly ("
                  << r.poly.a() << ", " << r.poly.b() << ", " << r.poly.c() << ")  roots (" << plain(r.roots.x1)
                  << ", " << plain(r.roots.x2) << ")  vertex (" << plain(r.vertex.x) << ", " << plain(r.vertex.y)
                  << ")  |integral| " << plain(*r.integral_abs) << "  closed " << closed
                  << (match ? "  match" : "  MISMATCH") << '\n';
      }
    }
  }
  if (args.format == "json") std::cout << rows.dump(2) << '\n';
  return kExitOk;
}

// verify -------------------------------------------------------------------

struct VerifyArgs {
  std::string claim = "all";
  std::string max;
  bool serial = false;
  std::string fault;
  std::string format = "table";
};

// family:index:coefficient:delta, e.g. fib_f:5:b:1
CoefficientFault parse_fault(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 3 && parts.size() != 4) throw UsageError("--inject-fault expects family:index:coef[:delta]");
  const auto family = parse_family_id(parts[0]);
  if (!family) throw UsageError("unknown family '" + parts[0] + "'");
  const Int index = parse_int(parts[1], "fault index");
  Coefficient which{};
  if (parts[2] == "a") which = Coefficient::a;
  else if (parts[2] == "b") which = Coefficient::b;
  else if (parts[2] == "c") which = Coefficient::c;
  else throw UsageError("fault coefficient must be a, b or c");
  const Int delta = parts.size() == 4 ? parse_int(parts[3], "fault delta") : Int(1);
  if (delta == 0) throw UsageError("fault delta must be non-zero");
  return {*family, index.get_si(), which, delta};
}

int run_verify(const VerifyArgs& args) {
  if (args.claim != "all" && !is_known_claim(args.claim)) throw UsageError("unknown claim '" + args.claim + "'");
  SweepConfig config;
  config.exec = args.serial ? Exec::serial : Exec::parallel;
  if (!args.max.empty()) {
    const Int bound = parse_int(args.max, "--max");
    if (bound < 1) throw UsageError("--max must be >= 1");
    if (!bound.fits_slong_p()) throw UsageError("--max is too large");
    config.set_bound(args.claim, bound.get_si());
  }
  if (!args.fault.empty()) config.fault = parse_fault(args.fault);

  std::vector<VerificationReport> reports;
  if (args.claim == "all") reports = run_all_claims(config);
  else reports.push_back(run_claim(args.claim, config));

  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.passed();

  if (args.format == "json") {
    json list = json::array();
    for (const auto& r : reports) list.push_back(to_json(r));
    std::cout << json{{"status", all_pass ? "pass" : "fail"}, {"reports", std::move(list)}}.dump(2) << '\n';
  } else if (args.format == "csv") {
    std::cout << "claim,range,status,counterexamples,elapsed\n";
    for (const auto& r : reports) {
      std::cout << r.claim_id << ",\"" << r.range << "\"," << to_string(r.status) << ',' << r.counterexamples.size()
                << ',' << r.elapsed << '\n';
    }
  } else {
    for (const auto& r : reports) {
      std::cout << (r.passed() ? "PASS  " : "FAIL  ") << r.claim_id << "  [" << r.range << "]  "
                << r.elapsed << " s\n";
      for (const auto& cx : r.counterexamples) std::cout << "      " << to_json(cx).dump() << '\n';
    }
  }
  return all_pass ? kExitOk : kExitClaimFailed;
}

// plot ---------------------------------------------------------------------

struct PlotArgs {
  std::string leg;
  std::string hyp;
  bool negative = false;
  std::string out;
};

int run_plot(const PlotArgs& args) {
  const Int leg = parse_int(args.leg, "--leg");
  const Int hyp = parse_int(args.hyp, "--hyp");
  const QuadPoly q = build_quadratic(leg, hyp, args.negative ? Orientation::negative : Orientation::positive);
  const std::string svg = render_svg(q);
  std::ofstream file(args.out);
  if (!file || !(file << svg) || !file.flush()) throw UsageError("cannot write " + args.out);
  std::cout << "wrote " << args.out << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integer-root quadratics from Pythagorean triples and Fibonacci windows"};
  app.require_subcommand(1);

  FibArgs fib_args;
  auto* fib_cmd = app.add_subcommand("fib", "Print F(n), or F(n) mod m");
  fib_cmd->add_option("--n", fib_args.n, "Index n >= 0")->required();
  fib_cmd->add_option("--mod", fib_args.mod, "Modulus m >= 2");
  add_format(fib_cmd, fib_args.format);

  TriplesArgs tri_args;
  auto* tri_cmd = app.add_subcommand("triples", "Pythagorean triples generated by Fibonacci windows");
  tri_cmd->add_option("--from", tri_args.from, "First window index (>= 1)")->required();
  tri_cmd->add_option("--to", tri_args.to, "Last window index")->required();
  tri_cmd->add_option("--scale", tri_args.scale, "Scale factor k >= 1");
  add_format(tri_cmd, tri_args.format);

  QuadArgs quad_args;
  auto* quad_cmd = app.add_subcommand("quad", "Build or analyze a quadratic");
  quad_cmd->require_subcommand(1);
  auto* build_cmd = quad_cmd->add_subcommand("build", "leg x^2 + 2 leg hyp x + leg^3 from a triple leg");
  build_cmd->add_option("--leg", quad_args.leg)->required();
  build_cmd->add_option("--hyp", quad_args.hyp)->required();
  build_cmd->add_flag("--neg", quad_args.negative, "Mirror orientation q~(x) = -q(-x)");
  add_format(build_cmd, quad_args.format);
  auto* analyze_cmd = quad_cmd->add_subcommand("analyze", "Analyze a x^2 + b x + c");
  analyze_cmd->add_option("--a", quad_args.a)->required();
  analyze_cmd->add_option("--b", quad_args.b)->required();
  analyze_cmd->add_option("--c", quad_args.c)->required();
  add_format(analyze_cmd, quad_args.format);

  FamilyArgs fam_args;
  auto* fam_cmd = app.add_subcommand("family", "Scaled (3,4,5) family table with closed-form checks");
  fam_cmd->add_option("--n-max", fam_args.n_max, "Largest n (>= 0)");
  fam_cmd->add_option("--flavor", fam_args.flavor)->check(CLI::IsMember({"f", "g", "both"}));
  add_format(fam_cmd, fam_args.format);

  VerifyArgs ver_args;
  auto* ver_cmd = app.add_subcommand("verify", "Run verification claims");
  ver_cmd->add_option("claim", ver_args.claim, "Claim id or 'all'");
  ver_cmd->add_option("--max", ver_args.max, "Primary sweep bound for the selected claim(s)");
  ver_cmd->add_flag("--serial", ver_args.serial, "Use the serial reference sweep");
  ver_cmd->add_option("--inject-fault", ver_args.fault, "Corrupt one coefficient: family:index:coef[:delta]");
  add_format(ver_cmd, ver_args.format);

  PlotArgs plot_args;
  auto* plot_cmd = app.add_subcommand("plot", "Write an SVG of the root-to-root area");
  plot_cmd->add_option("--leg", plot_args.leg)->required();
  plot_cmd->add_option("--hyp", plot_args.hyp)->required();
  plot_cmd->add_flag("--neg", plot_args.negative, "Mirror orientation");
  plot_cmd->add_option("--out", plot_args.out, "Output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*fib_cmd) return run_fib(fib_args);
    if (*tri_cmd) return run_triples(tri_args);
    if (*build_cmd) return run_quad_build(quad_args);
    if (*analyze_cmd) return run_quad_analyze(quad_args);
    if (*fam_cmd) return run_family(fam_args);
    if (*ver_cmd) return run_verify(ver_args);
    if (*plot_cmd) return run_plot(plot_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
