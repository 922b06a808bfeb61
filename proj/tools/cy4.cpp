// Command-line front end: invariants, series, GV conversions and the verify
// suites. Exit codes: 0 success, 1 an identity failed, 2 bad input.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "cy4/algebra/cy_expr.hpp"
#include "cy4/errors.hpp"
#include "cy4/gvseries.hpp"
#include "cy4/io.hpp"
#include "cy4/jspairs.hpp"
#include "cy4/verify.hpp"

namespace {

using cy4::Json;

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Output {
  std::string path;

  void write(const Json& j) const {
    std::string text = j.dump(2) + "\n";
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw cy4::InvalidInput("cannot write '" + path + "'");
    out << text;
  }
};

Json js_invariant_json(int n, int d, const std::string& method) {
  std::vector<cy4::Method> methods;
  if (method == "all") {
    methods = {cy4::Method::localization, cy4::Method::closed, cy4::Method::predicted};
  } else {
    methods = {*cy4::parse_method(method)};
  }
  bool applicable = (n == 0 && d == 0) || (d > 0 && n % d == 0);
  Json results = Json::object();
  std::optional<cy4::RatFn> first;
  bool agree = true;
  for (cy4::Method m : methods) {
    cy4::RatFn value;
    switch (m) {
      case cy4::Method::localization:
        value = cy4::js_invariant_localization(n, d).value;
        break;
      case cy4::Method::closed:
        value = cy4::js_invariant_closed(n, d).value;
        break;
      case cy4::Method::predicted:
        if (!applicable && methods.size() > 1) continue;
        value = cy4::js_invariant_predicted(n, d).value;
        break;
    }
    if (first && *first != value) agree = false;
    if (!first) first = value;
    results[std::string(cy4::to_string(m))] = cy4::to_string(value);
  }
  Json out{{"n", n}, {"d", d}, {"results", results}, {"agree", agree}};
  if (first) out["value"] = cy4::to_string(*first);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant tautological stable pair invariants of the local resolved conifold"};
  app.require_subcommand(1);
  Output output;
  app.add_option("--output", output.path, "Write JSON here instead of standard output");

  // js-invariant
  auto* js = app.add_subcommand("js-invariant",
                                "P_{n,d}(e^m) by localization, the closed sum, or the binomial formula. "
                                "Signs follow (-1)^d e_T(sqrt + chi(F) e^m)");
  int js_n = 0;
  int js_d = 0;
  std::string js_method = "all";
  js->add_option("--n", js_n, "Euler characteristic")->required()->check(CLI::NonNegativeNumber);
  js->add_option("--d", js_d, "Curve degree")->required()->check(CLI::NonNegativeNumber);
  js->add_option("--method", js_method)->check(CLI::IsMember({"localization", "closed", "predicted", "all"}));

  // series
  auto* series = app.add_subcommand("series", "Generating series");
  series->require_subcommand(1);
  int mm_order = cy4::kDefaultYOrder;
  auto* mac = series->add_subcommand("macmahon", "M(y) = prod (1 - y^k)^{-k}");
  mac->add_option("--order", mm_order)->check(CLI::NonNegativeNumber);

  auto* conj = series->add_subcommand("conjecture", "Product formula with chamber cutoff [t (omega.beta)]");
  std::string classes_path;
  std::string t_text = "inf";
  int q_order = cy4::kDefaultQOrder;
  int y_order = cy4::kDefaultYOrder;
  conj->add_option("--classes", classes_path, "JSON list of classes")->required();
  conj->add_option("--t", t_text, "Stability parameter: positive rational or inf");
  conj->add_option("--q-order", q_order)->check(CLI::NonNegativeNumber);
  conj->add_option("--y-order", y_order)->check(CLI::NonNegativeNumber);

  auto* nn = series->add_subcommand("nagao-nakajima", "prod_{k <= cutoff} (1 - (-q)^k y)^k");
  int cutoff = 0;
  nn->add_option("--cutoff", cutoff)->required()->check(CLI::NonNegativeNumber);
  nn->add_option("--q-order", q_order)->check(CLI::NonNegativeNumber);
  nn->add_option("--y-order", y_order)->check(CLI::NonNegativeNumber);

  auto* binom = series->add_subcommand("binom", "(1 - y)^x for a rational function x");
  std::string x_text;
  binom->add_option("--x", x_text, "Exponent, e.g. \"-2*m/l3\"")->required();
  binom->add_option("--y-order", y_order)->check(CLI::NonNegativeNumber);

  // gv convert
  auto* gv = app.add_subcommand("gv", "Gopakumar-Vafa conversions");
  gv->require_subcommand(1);
  auto* conv = gv->add_subcommand("convert", "GW <-> GV in genus 0 or 1");
  int genus = 0;
  std::string direction;
  std::string input_path;
  std::string n0c2_path;
  std::string meeting_path;
  int max_degree = cy4::kDefaultQOrder;
  conv->add_option("--genus", genus)->required()->check(CLI::IsMember({0, 1}));
  conv->add_option("--direction", direction)->required()->check(CLI::IsMember({"gw2gv", "gv2gw"}));
  conv->add_option("--input", input_path)->required();
  conv->add_option("--n0c2", n0c2_path, "Genus 1: table of n_0(c_2)");
  conv->add_option("--meeting", meeting_path, "Genus 1: table of meeting invariants");
  conv->add_option("--max-degree", max_degree)->check(CLI::PositiveNumber);

  // verify
  auto* verify = app.add_subcommand("verify", "Re-check the identities; timings go to standard error");
  std::string suite;
  std::uint64_t seed = 1;
  int n_max = 0;
  verify->add_option("suite", suite, "Suite name or all")->required();
  verify->add_option("--seed", seed, "Seed for random tables");
  verify->add_option("--n-max", n_max, "Size bound overriding the suite default")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (js->parsed()) {
      Json out = js_invariant_json(js_n, js_d, js_method);
      output.write(out);
      return out["agree"].get<bool>() ? 0 : kExitFail;
    }
    if (mac->parsed()) {
      output.write(cy4::to_json(cy4::macmahon(mm_order)));
      return 0;
    }
    if (conj->parsed()) {
      auto classes = cy4::classes_from_json(cy4::read_json_file(classes_path));
      cy4::Series2 s = cy4::conjecture_rhs(classes, cy4::parse_chamber(t_text), q_order, y_order);
      output.write({{"series", cy4::to_json(s)}, {"q_to_minus_q", cy4::to_json(s.q_negated())}});
      return 0;
    }
    if (nn->parsed()) {
      output.write(cy4::to_json(cy4::nagao_nakajima(cutoff, q_order, y_order)));
      return 0;
    }
    if (binom->parsed()) {
      output.write(cy4::to_json(cy4::binom_series(cy4::parse_ratfn(x_text), y_order)));
      return 0;
    }
    if (conv->parsed()) {
      cy4::GVTable in = cy4::gv_table_from_json(cy4::read_json_file(input_path));
      cy4::GVTable out;
      if (genus == 0) {
        out = direction == "gv2gw" ? cy4::gv0_to_gw0(in, max_degree) : cy4::gw0_to_gv0(in, max_degree);
      } else {
        cy4::GVTable c2{cy4::GVKind::N0C2, {}, {}};
        cy4::GVTable meet{cy4::GVKind::MEETING, {}, {}};
        if (!n0c2_path.empty()) c2 = cy4::gv_table_from_json(cy4::read_json_file(n0c2_path));
        if (!meeting_path.empty()) meet = cy4::gv_table_from_json(cy4::read_json_file(meeting_path));
        out = direction == "gv2gw" ? cy4::gv1_to_gw1(in, c2, meet, max_degree)
                                   : cy4::gw1_to_gv1(in, c2, meet, max_degree);
      }
      output.write(cy4::to_json(out));
      return 0;
    }
    if (verify->parsed()) {
      std::vector<std::string_view> suites;
      if (suite == "all") {
        suites = cy4::verify_suites();
      } else {
        suites = {suite};
      }
      cy4::VerifyOptions options{seed, n_max};
      Json reports = Json::array();
      bool ok = true;
      for (std::string_view s : suites) {
        cy4::VerifyReport r = cy4::run_suite(s, options);
        std::fprintf(stderr, "%-24s %s  %zu checks  %.2fs\n", r.suite.c_str(), r.passed() ? "pass" : "FAIL",
                     r.checks.size(), r.seconds);
        ok = ok && r.passed();
        reports.push_back(r.to_json());
      }
      output.write(suite == "all" ? Json{{"pass", ok}, {"suites", reports}} : reports[0]);
      return ok ? 0 : kExitFail;
    }
  } catch (const cy4::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON input: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
