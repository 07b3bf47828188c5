// dioid: command-line front end for the dioid library.
//
// Exit status: 0 success, 1 domain/shape/hypothesis error or failed
// verification, 2 parse or usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dioid/interval.hpp"
#include "dioid/matrix.hpp"
#include "dioid/oracle.hpp"
#include "dioid/projector.hpp"
#include "dioid/series.hpp"
#include "dioid/text.hpp"

namespace {

using namespace dioid;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string op;
  std::string type = "maxplus";
  std::vector<std::string> inputs;
  std::string output;
  bool verify = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class T>
Matrix<T> load(const std::string& path) {
  try {
    return parse_matrix<T>(read_file(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + e.what());
  }
}

void require_arity(const Options& o, std::size_t n) {
  if (o.inputs.size() != n)
    throw UsageError(o.op + " expects " + std::to_string(n) + " input file(s), got " + std::to_string(o.inputs.size()));
}

// Oracle reports for Z̄max; each line is a '#' comment so the output stays a
// valid matrix file. Returns false on disagreement.
struct Report {
  std::string text;
  bool ok = true;
  void line(const std::string& what, bool agree) {
    text += "# verify " + what + ": " + (agree ? "agree" : "DISAGREE") + "\n";
    ok = ok && agree;
  }
  void note(const std::string& what) { text += "# verify " + what + "\n"; }
};

using MP = Matrix<MaxPlus>;

MP clamp(const MP& m, bool down, const oracle::Grid& g) {
  MP r = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = down ? g.clamp_down(m(i, j)) : g.clamp_up(m(i, j));
  return r;
}

void verify_residuals(Report& rep, const MP& a, const MP& b) {
  oracle::Grid g;
  rep.line("lres vs greatest_subsolution on [-20,20]",
           clamp(left_residual(a, b), true, g) == oracle::greatest_subsolution(a, b, g));
  rep.line("dualres vs smallest_supersolution on [-20,20]",
           clamp(dual_residual(a, b), false, g) == oracle::smallest_supersolution(a, b, g));
}

void verify_star(Report& rep, const MP& a) {
  rep.line("star vs star_by_powers", kleene_star(a) == oracle::star_by_powers(a, 2 * a.rows() + 2));
}

void verify_project(Report& rep, const MP& a, const MP& b, const MP& x0, const MP& p) {
  oracle::Grid g;
  for (const auto& v : p.data())
    if (!g.contains(v)) return rep.note("project: skipped (result leaves the grid [-20,20])");
  try {
    rep.line("project vs projector_by_enumeration", p == oracle::projector_by_enumeration(a, b, x0, g));
  } catch (const ShapeError&) {
    rep.note("project: skipped (instance too large to enumerate)");
  }
}

template <class T>
std::string format_slopes(const Matrix<T>&) {
  throw UsageError("slope requires --type series");
}

template <>
std::string format_slopes<Series>(const Matrix<Series>& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? "  " : "") + to_string(sigma_inf(m(i, j)));
    out += "\n";
  }
  return out;
}

template <class T>
std::pair<std::string, bool> run(const Options& o) {
  constexpr bool maxplus = std::is_same_v<T, MaxPlus>;
  Report rep;
  std::string out;
  const std::string& op = o.op;
  if (op == "prod" || op == "dualprod" || op == "lres" || op == "rres" || op == "dualres") {
    require_arity(o, 2);
    auto a = load<T>(o.inputs[0]);
    auto b = load<T>(o.inputs[1]);
    Matrix<T> r = op == "prod"       ? mat_otimes(a, b)
                  : op == "dualprod" ? mat_odot(a, b)
                  : op == "lres"     ? left_residual(a, b)
                  : op == "rres"     ? right_residual(a, b)
                                     : dual_residual(a, b);
    out = format_matrix(r);
    if (o.verify) {
      if constexpr (maxplus) {
        if (op == "lres" || op == "dualres")
          verify_residuals(rep, a, b);
        else
          rep.note(op + ": no oracle for this operation");
      }
    }
  } else if (op == "star" || op == "dualstar") {
    require_arity(o, 1);
    auto a = load<T>(o.inputs[0]);
    if (op == "star") {
      out = format_matrix(kleene_star(a));
      if constexpr (maxplus)
        if (o.verify) verify_star(rep, a);
    } else {
      auto w = wedge_closure_report(a);
      out = format_matrix(w.value);
      if (w.diverged) out += "# a dual circuit diverged; affected entries are eps\n";
      if (o.verify && maxplus) rep.note("dualstar: no oracle for this operation");
    }
  } else if (op == "project") {
    require_arity(o, 3);
    auto a = load<T>(o.inputs[0]);
    auto b = load<T>(o.inputs[1]);
    auto x0 = load<T>(o.inputs[2]);
    auto p = project(a, b, x0);
    out = format_matrix(p);
    if constexpr (maxplus)
      if (o.verify) verify_project(rep, a, b, x0, p);
  } else if (op == "verify") {
    if constexpr (!maxplus) {
      throw UsageError("verify supports --type maxplus only");
    } else {
      if (o.inputs.size() == 2) {
        verify_residuals(rep, load<T>(o.inputs[0]), load<T>(o.inputs[1]));
      } else if (o.inputs.size() == 3) {
        auto a = load<T>(o.inputs[0]);
        auto b = load<T>(o.inputs[1]);
        auto x0 = load<T>(o.inputs[2]);
        verify_project(rep, a, b, x0, project(a, b, x0));
      } else {
        throw UsageError("verify expects A B (residuals) or A B X0 (projector)");
      }
    }
  } else if (op == "slope") {
    require_arity(o, 1);
    out = format_slopes(load<T>(o.inputs[0]));
  }
  if (o.verify && !maxplus && op != "verify") rep.note("skipped (oracles cover --type maxplus only)");
  return {out + rep.text, rep.ok};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact linear algebra over max-plus scalars, gamma-series and intervals"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::pair<std::string, std::string>> ops = {
      {"prod", "A (x) X"},
      {"dualprod", "A (.) X, the dual product"},
      {"lres", "A\\B, greatest X with A (x) X <= B"},
      {"rres", "C/A, greatest X with X (x) A <= C"},
      {"dualres", "A dual-residual X, smallest Y with A (.) Y >= X"},
      {"star", "Kleene star A*"},
      {"dualstar", "wedge closure B_*"},
      {"project", "P(X0) for A (x) X <= X <= B (.) X, X <= X0"},
      {"verify", "compare residuals (A B) or the projector (A B X0) with brute-force oracles"},
      {"slope", "asymptotic slope of every entry of a series matrix"},
  };
  for (const auto& [name, help] : ops) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("inputs", o.inputs, "matrix files")->required();
    sub->add_option("-t,--type", o.type, "element type")
        ->check(CLI::IsMember({"maxplus", "series", "interval-maxplus", "interval-series"}));
    sub->add_option("-o,--output", o.output, "write the result here instead of stdout");
    sub->add_flag("--verify", o.verify, "also run the brute-force oracle (maxplus only)");
    sub->callback([&o, name = name] { o.op = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::pair<std::string, bool> res;
    if (o.type == "maxplus")
      res = run<MaxPlus>(o);
    else if (o.type == "series")
      res = run<Series>(o);
    else if (o.type == "interval-maxplus")
      res = run<Interval<MaxPlus>>(o);
    else
      res = run<Interval<Series>>(o);
    if (o.output.empty()) {
      std::cout << res.first;
    } else {
      std::ofstream f(o.output, std::ios::binary);
      if (!f) throw UsageError("cannot write '" + o.output + "'");
      f << res.first;
    }
    return res.second ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "dioid: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "dioid: " << e.what() << "\n";
    return 1;
  }
}
