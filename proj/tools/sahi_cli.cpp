// Command-line front end: every command emits a JSON envelope
// {status, command, payload, diagnostics} on stdout (CSV for region grids,
// plain text with --format text). Verification commands exit 1 on
// mismatch; usage errors exit 2.

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <iostream>
#include <string>

#include "sahi/jack.hpp"
#include "sahi/kernel.hpp"
#include "sahi/oracle.hpp"
#include "sahi/positivity.hpp"
#include "sahi/serialize.hpp"
#include "sahi/sobolev.hpp"

using nlohmann::json;
using namespace sahi;

namespace {

json complex_json(std::complex<double> z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

// Linear combinations of monomial symmetric functions:
//   "1 + 2*m[1] - 1/3*m[2,0]"
LaurentSymPoly parse_m_expression(const std::string& text, int n) {
  LaurentSymPoly f(n);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw std::invalid_argument("expected '+' or '-' in expression");
    }
    first = false;
    Rational coef = 1;
    bool have_coef = false;
    size_t start = pos;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '/' || text[pos] == '.'))
      ++pos;
    if (pos > start) {
      coef = parse_rational(text.substr(start, pos - start));
      have_coef = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      }
    }
    if (pos < text.size() && text[pos] == 'm') {
      ++pos;
      if (pos >= text.size() || text[pos] != '[')
        throw std::invalid_argument("expected 'm[' in expression");
      size_t close = text.find(']', pos);
      if (close == std::string::npos)
        throw std::invalid_argument("unterminated 'm[' in expression");
      Signature rep = Signature::parse(text.substr(pos + 1, close - pos - 1));
      pos = close + 1;
      f.add_m(rep, sign * coef);
    } else if (have_coef) {
      f.add_m(Signature::zero(n), sign * coef);
    } else {
      throw std::invalid_argument("expected a coefficient or m[...] term");
    }
  }
  return f;
}

void emit(const json& payload, const std::string& command,
          const std::string& format, const json& diagnostics = json::array()) {
  if (format == "text") {
    std::cout << command << ":\n" << payload.dump(2) << "\n";
    for (const auto& d : diagnostics)
      std::cout << "warning: " << d.get<std::string>() << "\n";
    return;
  }
  json envelope{{"status", "ok"},
                {"command", command},
                {"payload", payload},
                {"diagnostics", diagnostics}};
  std::cout << envelope.dump() << "\n";
}

struct StOrSigma {
  // either the centered (s, t) or raw (sigma, tau); converted on demand
  std::string s, t, sigma, tau;

  std::pair<Rational, Rational> resolve(Space space, int n) const {
    bool have_st = !s.empty() || !t.empty();
    bool have_raw = !sigma.empty() || !tau.empty();
    if (have_st == have_raw)
      throw CLI::ValidationError(
          "give either --s/--t or --sigma/--tau, not both");
    if (have_st) {
      if (s.empty() || t.empty())
        throw CLI::ValidationError("--s and --t go together");
      return st_to_sigma_tau(space, n, parse_rational(s), parse_rational(t));
    }
    if (sigma.empty() || tau.empty())
      throw CLI::ValidationError("--sigma and --tau go together");
    return {parse_rational(sigma), parse_rational(tau)};
  }
};

json torus_value_json(const TorusValue& v) {
  json j;
  to_json(j, v);
  return j;
}

int run_eigen(const std::string& space_arg, int n, const StOrSigma& params,
              const std::string& lambda, const std::string& format,
              bool selberg_mode) {
  Space space = parse_space(space_arg);
  auto [sigma, tau] = params.resolve(space, n);
  Signature lam = selberg_mode ? Signature::zero(n) : Signature::parse(lambda);
  if (lam.n() != n)
    throw CLI::ValidationError("--lambda length must equal --n");
  KernelSpec spec = KernelSpec::make(space, n, sigma, tau);
  TorusValue c = c_lambda(lam, spec);
  json payload = torus_value_json(c);
  payload["lambda"] = lam.str();
  payload["space"] = space_arg;
  payload["n"] = n;
  payload["sigma"] = to_string(sigma);
  payload["tau"] = to_string(tau);
  payload["kappa"] = to_string(spec.kappa);
  if (selberg_mode)
    payload["note"] = "Cauchy-type Selberg normalization (lambda = 0)";
  emit(payload, selberg_mode ? "selberg" : "eigen", format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Determinant-kernel eigenvalues, Jack polynomials and "
               "definiteness scans on compact symmetric spaces"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  auto* cmd_jack = app.add_subcommand("jack", "construct a Jack polynomial");
  std::string jack_lambda, jack_kappa = "1";
  int jack_n = 1;
  cmd_jack->add_option("--lambda", jack_lambda)->required();
  cmd_jack->add_option("--n", jack_n)->required();
  cmd_jack->add_option("--kappa", jack_kappa);

  auto add_eigen_opts = [&](CLI::App* c, std::string& lam, int& n,
                            StOrSigma& p, bool need_lambda) {
    c->add_option("--n", n)->required();
    if (need_lambda) c->add_option("--lambda", lam)->required();
    c->add_option("--sigma", p.sigma);
    c->add_option("--tau", p.tau);
    c->add_option("--s", p.s);
    c->add_option("--t", p.t);
  };
  auto* cmd_eigen = app.add_subcommand("eigen", "kernel eigenvalue");
  std::string eigen_space, eigen_lambda;
  int eigen_n = 1;
  StOrSigma eigen_params;
  cmd_eigen->add_option("--space", eigen_space)->required();
  add_eigen_opts(cmd_eigen, eigen_lambda, eigen_n, eigen_params, true);

  auto* cmd_selberg = app.add_subcommand(
      "selberg", "normalization eigenvalue at lambda = 0");
  std::string selberg_space, selberg_lambda;
  int selberg_n = 1;
  StOrSigma selberg_params;
  cmd_selberg->add_option("--space", selberg_space)->required();
  add_eigen_opts(cmd_selberg, selberg_lambda, selberg_n, selberg_params,
                 false);

  auto* cmd_scan = app.add_subcommand("scan", "sign-constancy scan");
  std::string scan_space;
  int scan_n = 1;
  long scan_box = 6;
  StOrSigma scan_params;
  cmd_scan->add_option("--space", scan_space)->required();
  cmd_scan->add_option("--n", scan_n)->required();
  cmd_scan->add_option("--box", scan_box);
  cmd_scan->add_option("--sigma", scan_params.sigma);
  cmd_scan->add_option("--tau", scan_params.tau);
  cmd_scan->add_option("--s", scan_params.s);
  cmd_scan->add_option("--t", scan_params.t);

  auto* cmd_region = app.add_subcommand("region", "definiteness region grid");
  std::string region_space, s_range = "-2:2", t_range = "-2:2",
                            region_step = "1/4", region_offset = "0";
  int region_n = 1;
  long region_box = 6;
  cmd_region->add_option("--space", region_space)->required();
  cmd_region->add_option("--n", region_n)->required();
  cmd_region->add_option("--s-range", s_range);
  cmd_region->add_option("--t-range", t_range);
  cmd_region->add_option("--step", region_step);
  cmd_region->add_option("--offset", region_offset);
  cmd_region->add_option("--box", region_box);

  auto* cmd_verify =
      app.add_subcommand("verify", "closed form vs quadrature");
  std::string verify_lambda, verify_kappa = "1", verify_sigma, verify_tau;
  int verify_n = 1, verify_N = 1 << 10;
  double verify_tol = 1e-6;
  cmd_verify->add_option("--n", verify_n)->required();
  cmd_verify->add_option("--kappa", verify_kappa);
  cmd_verify->add_option("--sigma", verify_sigma)->required();
  cmd_verify->add_option("--tau", verify_tau)->required();
  cmd_verify->add_option("--lambda", verify_lambda)->required();
  cmd_verify->add_option("--N", verify_N);
  cmd_verify->add_option("--tol", verify_tol);

  auto* cmd_vexact =
      app.add_subcommand("verify-exact", "closed form vs constant term");
  std::string vx_lambda;
  int vx_n = 1, vx_kappa = 1, vx_sigma = 0, vx_tau = 0;
  cmd_vexact->add_option("--n", vx_n)->required();
  cmd_vexact->add_option("--kappa", vx_kappa);
  cmd_vexact->add_option("--sigma", vx_sigma)->required();
  cmd_vexact->add_option("--tau", vx_tau)->required();
  cmd_vexact->add_option("--lambda", vx_lambda)->required();

  auto* cmd_gram = app.add_subcommand("gram", "Gram matrix of Jack lines");
  std::string gram_lambdas, gram_kappa = "1", gram_method = "exact";
  int gram_n = 1, gram_N = 1 << 12;
  cmd_gram->add_option("--n", gram_n)->required();
  cmd_gram->add_option("--kappa", gram_kappa);
  cmd_gram->add_option("--lambdas", gram_lambdas)->required();
  cmd_gram->add_option("--method", gram_method)
      ->check(CLI::IsMember({"exact", "numeric"}));
  cmd_gram->add_option("--N", gram_N);

  auto* cmd_form = app.add_subcommand("form", "invariant Hermitian form");
  std::string form_space, form_f, form_g;
  int form_n = 1;
  StOrSigma form_params;
  cmd_form->add_option("--space", form_space)->required();
  cmd_form->add_option("--n", form_n)->required();
  cmd_form->add_option("--f", form_f)->required();
  cmd_form->add_option("--g", form_g)->required();
  cmd_form->add_option("--sigma", form_params.sigma);
  cmd_form->add_option("--tau", form_params.tau);
  cmd_form->add_option("--s", form_params.s);
  cmd_form->add_option("--t", form_params.t);

  auto* cmd_l2 = app.add_subcommand("l2-check", "centered-point flatness");
  std::string l2_space;
  int l2_n = 1;
  long l2_box = 4;
  cmd_l2->add_option("--space", l2_space)->required();
  cmd_l2->add_option("--n", l2_n)->required();
  cmd_l2->add_option("--box", l2_box);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_jack) {
      Signature lam = Signature::parse(jack_lambda);
      JackPolynomial p = jack_laurent(lam, jack_n, parse_rational(jack_kappa));
      json payload{{"lambda", lam.str()},
                   {"n", jack_n},
                   {"kappa", to_string(p.kappa)},
                   {"expansion", render(p.expansion)},
                   {"eval_at_ones", to_string(eval_at_ones(p))}};
      emit(payload, "jack", format);
      return 0;
    }
    if (*cmd_eigen)
      return run_eigen(eigen_space, eigen_n, eigen_params, eigen_lambda,
                       format, false);
    if (*cmd_selberg)
      return run_eigen(selberg_space, selberg_n, selberg_params,
                       selberg_lambda, format, true);
    if (*cmd_scan) {
      Space space = parse_space(scan_space);
      auto [sigma, tau] = scan_params.resolve(space, scan_n);
      KernelSpec spec = KernelSpec::make(space, scan_n, sigma, tau);
      ScanReport rep = scan_sign_constancy(spec, scan_box);
      json payload;
      to_json(payload, rep);
      payload["space"] = scan_space;
      payload["n"] = scan_n;
      payload["sigma"] = to_string(sigma);
      payload["tau"] = to_string(tau);
      emit(payload, "scan", format);
      return 0;
    }
    if (*cmd_region) {
      Space space = parse_space(region_space);
      auto parse_range = [](const std::string& r) {
        auto colon = r.find(':');
        if (colon == std::string::npos)
          throw CLI::ValidationError("ranges look like lo:hi");
        return std::make_pair(parse_rational(r.substr(0, colon)),
                              parse_rational(r.substr(colon + 1)));
      };
      auto [s_lo, s_hi] = parse_range(s_range);
      auto [t_lo, t_hi] = parse_range(t_range);
      RegionGrid grid = region_grid(space, region_n, s_lo, s_hi, t_lo, t_hi,
                                    parse_rational(region_step),
                                    parse_rational(region_offset), region_box);
      // grids default to CSV; --format json opts into the envelope
      if (app.count("--format") == 0) format = "csv";
      if (format == "json") {
        json cells = json::array();
        for (const auto& c : grid.cells) {
          cells.push_back(
              {{"s", to_string(c.s)},
               {"t", to_string(c.t)},
               {"applicable", c.applicable},
               {"predicate", c.applicable ? json(c.predicate) : json()},
               {"window", c.applicable ? json(c.window) : json()},
               {"scan", verdict_name(c.scan)}});
        }
        emit(json{{"space", region_space}, {"n", region_n}, {"cells", cells}},
             "region", format);
      } else {
        std::cout << region_csv(grid);
      }
      return 0;
    }
    if (*cmd_verify) {
      Signature lam = Signature::parse(verify_lambda);
      Rational kappa = parse_rational(verify_kappa);
      Rational sigma = parse_rational(verify_sigma);
      Rational tau = parse_rational(verify_tau);
      TorusValue closed = L_lambda(lam, kappa, sigma, tau);
      QuadratureSpec quad{verify_N, verify_n};
      QuadratureResult q = torus_integral_numeric(
          lam, kappa, to_double(sigma), to_double(tau), quad, verify_tol);
      double closed_value = closed.value();
      double scale = std::max(1.0, std::abs(closed_value));
      double rel = std::abs(q.value - closed_value) / scale;
      double rel_refined = std::abs(q.refined - closed_value) / scale;
      json diagnostics = json::array();
      if (!q.converged)
        diagnostics.push_back("quadrature error estimate above tolerance");
      json payload{{"closed_form", torus_value_json(closed)},
                   {"quadrature", complex_json(q.value)},
                   {"refined", complex_json(q.refined)},
                   {"rel_err", rel},
                   {"rel_err_refined", rel_refined},
                   {"error_estimate", q.error_estimate},
                   {"N", verify_N}};
      bool match = rel_refined <= verify_tol;
      payload["match"] = match;
      emit(payload, "verify", format, diagnostics);
      return match ? 0 : 1;
    }
    if (*cmd_vexact) {
      Signature lam = Signature::parse(vx_lambda);
      if (vx_kappa < 1 || vx_sigma < 0 || vx_tau < 0)
        throw CLI::ValidationError(
            "exact verification needs kappa >= 1 and sigma, tau >= 0");
      TorusValue closed = L_lambda(lam, Rational(vx_kappa), Rational(vx_sigma),
                                   Rational(vx_tau));
      Rational ct = torus_integral_exact(
          lam, static_cast<unsigned>(vx_kappa),
          static_cast<unsigned>(vx_sigma), static_cast<unsigned>(vx_tau));
      bool equal =
          closed.mantissa.exact.has_value() && *closed.mantissa.exact == ct;
      json payload{
          {"closed_form_rational",
           closed.mantissa.exact ? json(to_string(*closed.mantissa.exact))
                                 : json()},
          {"constant_term_rational", to_string(ct)},
          {"twopi_power", closed.twopi_power},
          {"equal", equal}};
      emit(payload, "verify-exact", format);
      return equal ? 0 : 1;
    }
    if (*cmd_gram) {
      std::vector<Signature> lams;
      size_t pos = 0;
      while (pos <= gram_lambdas.size()) {
        size_t semi = gram_lambdas.find(';', pos);
        std::string tok = gram_lambdas.substr(
            pos, semi == std::string::npos ? std::string::npos : semi - pos);
        if (!tok.empty()) lams.push_back(Signature::parse(tok));
        if (semi == std::string::npos) break;
        pos = semi + 1;
      }
      auto method =
          gram_method == "exact" ? GramMethod::Exact : GramMethod::Numeric;
      auto g = gram_matrix(lams, gram_n, parse_rational(gram_kappa), method,
                           gram_N);
      json rows = json::array();
      for (const auto& row : g) {
        json r = json::array();
        for (const auto& v : row) {
          json jv;
          to_json(jv, v);
          r.push_back(jv);
        }
        rows.push_back(r);
      }
      emit(json{{"matrix", rows}, {"method", gram_method}}, "gram", format);
      return 0;
    }
    if (*cmd_form) {
      Space space = parse_space(form_space);
      auto [sigma, tau] = form_params.resolve(space, form_n);
      KernelSpec spec = KernelSpec::make(space, form_n, sigma, tau);
      JackExpansion F =
          expand_in_jack(parse_m_expression(form_f, form_n), spec.kappa);
      JackExpansion G =
          expand_in_jack(parse_m_expression(form_g, form_n), spec.kappa);
      std::complex<double> v = form_value(F, G, spec);
      emit(json{{"value", complex_json(v)},
                {"sigma", to_string(sigma)},
                {"tau", to_string(tau)}},
           "form", format);
      return 0;
    }
    if (*cmd_l2) {
      L2Report rep =
          l2_degeneration_report(parse_space(l2_space), l2_n, l2_box);
      json payload;
      to_json(payload, rep);
      emit(payload, "l2-check", format);
      return rep.pass ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    json envelope{{"status", "error"},
                  {"error", e.what()},
                  {"diagnostics", json::array()}};
    std::cout << envelope.dump() << "\n";
    return 1;
  }
  return 2;
}
