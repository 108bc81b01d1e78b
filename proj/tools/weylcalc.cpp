// weylcalc: command-line front end for the weyl library.
//
// Exit status: 0 on success, 1 when a verification suite reports a failure,
// 2 on invalid input (parse errors, bad parameters).

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "weyl/weyl.hpp"

namespace {

struct Common {
  std::optional<std::size_t> d;
  std::string q = "1/2";
  bool json = false;
};

void add_common(CLI::App* cmd, Common& c, bool with_q) {
  cmd->add_option("--d", c.d, "number of modes (default: largest index in the expression)");
  if (with_q) cmd->add_option("--q", c.q, "ordering parameter as an exact rational, e.g. 1/3")->capture_default_str();
  cmd->add_flag("--json", c.json, "emit canonical JSON");
}

void print(const weyl::Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Weyl-algebra and q-ordering calculator"};
  app.require_subcommand(1);

  Common nc;
  std::string normal_expr;
  auto* normal = app.add_subcommand("normal-order", "normal-order a Weyl expression (c<j> = creation, a<j> = annihilation)");
  normal->add_option("expr", normal_expr, "expression in a1..ad, c1..cd")->required();
  add_common(normal, nc, false);

  Common oc;
  std::string order_expr;
  auto* order = app.add_subcommand("order", "apply the q-ordering map to a polynomial in z<j>, zb<j>");
  order->add_option("expr", order_expr, "polynomial expression")->required();
  add_common(order, oc, true);

  Common uc;
  std::string unorder_expr;
  auto* unorder = app.add_subcommand("unorder", "invert the q-ordering map");
  unorder->add_option("expr", unorder_expr, "Weyl expression")->required();
  add_common(unorder, uc, true);

  Common dc;
  std::string decompose_expr;
  auto* decompose = app.add_subcommand("decompose", "write w = sum_k R_q^k O_q(h_k) with h_k harmonic");
  decompose->add_option("expr", decompose_expr, "Weyl expression")->required();
  add_common(decompose, dc, true);

  Common wc;
  std::optional<unsigned> omega_k, omega_kmax;
  auto* omega = app.add_subcommand("omega", "radial polynomials omega_k(t)");
  add_common(omega, wc, true);
  omega->add_option("--k", omega_k, "single index");
  omega->add_option("--kmax", omega_kmax, "print omega_0..omega_kmax");

  Common ec;
  unsigned eta_k = 1;
  auto* eta = app.add_subcommand("eta", "eta_k = R_q^k I in normal form and as a polynomial in N");
  add_common(eta, ec, true);
  eta->add_option("--k", eta_k, "index")->capture_default_str();

  std::string suite;
  weyl::VerifyOptions vo;
  std::optional<std::string> verify_q;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "sl2 | intertwine | radial | harmonics | hahn | orthogonality | genfun | all")
      ->required()
      ->check(CLI::IsMember(weyl::verify_suite_names()));
  verify->add_option("--d", vo.d, "number of modes");
  verify->add_option("--q", verify_q, "ordering parameter (exact rational)");
  verify->add_option("--kmax", vo.kmax, "largest index k");
  verify->add_option("--k", vo.kmax, "alias of --kmax");
  verify->add_option("--deg", vo.deg, "degree bound for random elements / harmonic degree");
  verify->add_option("--order", vo.order, "Taylor order for genfun");
  verify->add_option("--count", vo.count, "random samples per identity");
  verify->add_option("--tol", vo.tol, "numerical tolerance");
  verify->add_option("--lambda", vo.lambda, "real lambda for genfun");
  verify->add_option("--seed", vo.seed, "64-bit seed for random suites")->capture_default_str();
  verify->add_flag("--quick", vo.quick, "smaller sample counts and degrees");
  verify->add_flag("--json", verify_json, "emit JSON report(s)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*normal) {
      auto w = weyl::parse_weyl(normal_expr, nc.d);
      if (nc.json) print(weyl::to_json(w));
      else std::cout << weyl::to_string(w) << "\n";
    } else if (*order) {
      auto p = weyl::parse_poly(order_expr, oc.d);
      auto w = weyl::order_q({p.d(), weyl::parse_rational(oc.q)}, p);
      if (oc.json) print(weyl::to_json(w));
      else std::cout << weyl::to_string(w) << "\n";
    } else if (*unorder) {
      auto w = weyl::parse_weyl(unorder_expr, uc.d);
      auto p = weyl::unorder_q({w.d(), weyl::parse_rational(uc.q)}, w);
      if (uc.json) print(weyl::to_json(p));
      else std::cout << weyl::to_string(p) << "\n";
    } else if (*decompose) {
      auto w = weyl::parse_weyl(decompose_expr, dc.d);
      auto h = weyl::decompose_weyl({w.d(), weyl::parse_rational(dc.q)}, w);
      if (dc.json) {
        weyl::Json parts = weyl::Json::array();
        for (std::size_t k = 0; k < h.size(); ++k) parts.push_back({{"k", k}, {"h", weyl::to_json(h[k])}});
        print(parts);
      } else {
        if (h.empty()) std::cout << "0\n";
        for (std::size_t k = 0; k < h.size(); ++k)
          if (!h[k].is_zero()) std::cout << "h_" << k << " = " << weyl::to_string(h[k]) << "\n";
      }
    } else if (*omega) {
      weyl::RadialContext ctx(wc.d.value_or(1), weyl::parse_rational(wc.q));
      unsigned hi = omega_kmax.value_or(omega_k.value_or(4));
      unsigned lo = omega_k && !omega_kmax ? *omega_k : 0;
      auto w = weyl::omega_sequence(ctx, hi);
      if (wc.json) {
        weyl::Json rows = weyl::Json::array();
        for (unsigned k = lo; k <= hi; ++k) rows.push_back({{"k", k}, {"omega", weyl::to_json(w[k])}});
        print(weyl::Json{{"d", ctx.d}, {"q", weyl::to_string(ctx.q)}, {"rows", rows}});
      } else {
        for (unsigned k = lo; k <= hi; ++k) std::cout << "omega_" << k << "(t) = " << weyl::to_string(w[k]) << "\n";
      }
    } else if (*eta) {
      weyl::RadialContext ctx(ec.d.value_or(1), weyl::parse_rational(ec.q));
      auto e = weyl::eta(ctx, eta_k);
      auto p = weyl::express_in_N(e);
      if (ec.json) {
        print(weyl::Json{{"k", eta_k}, {"eta", weyl::to_json(e)}, {"in_N", weyl::to_json(p)}});
      } else {
        std::cout << "eta_" << eta_k << " = " << weyl::to_string(e) << "\n";
        std::cout << "     = " << weyl::to_string(p, "N") << "\n";
      }
    } else if (*verify) {
      if (verify_q) vo.q = weyl::parse_rational(*verify_q);
      auto reports = weyl::run_verify(suite, vo);
      bool ok = true;
      if (verify_json) {
        if (reports.size() == 1) {
          print(reports.front().to_json());
        } else {
          weyl::Json all = weyl::Json::array();
          for (const auto& r : reports) all.push_back(r.to_json());
          print(all);
        }
      }
      for (const auto& r : reports) {
        if (!verify_json) std::cout << r.to_text() << "\n";
        ok = ok && r.passed();
      }
      return ok ? 0 : 1;
    }
  } catch (const weyl::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const weyl::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const weyl::NotRadial& e) {
    std::cerr << "not radial: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
