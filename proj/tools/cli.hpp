#pragma once

#include <CLI11.hpp>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "uval/uval.hpp"

namespace uval::cli {

// "0", "0.7", "pi/4", "2pi/3", "π/2", "3*pi/8"
inline double parse_angle(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  std::size_t at = s.find("pi"), len = 2;
  if (at == std::string::npos) {
    at = s.find("π");
    len = std::string("π").size();
  }
  auto number = [&](const std::string& t) {
    std::size_t used = 0;
    double x = std::stod(t, &used);
    if (used != t.size()) throw DomainError("bad angle '" + s + "'");
    return x;
  };
  try {
    if (at == std::string::npos) return number(s);
    std::string pre = s.substr(0, at), post = s.substr(at + len);
    if (!pre.empty() && pre.back() == '*') pre.pop_back();
    double x = M_PI * (pre.empty() ? 1.0 : number(pre));
    if (!post.empty()) {
      if (post[0] != '/') throw DomainError("bad angle '" + s + "'");
      x /= number(post.substr(1));
    }
    return x;
  } catch (const std::logic_error&) {
    throw DomainError("bad angle '" + s + "'");
  }
}

inline AngleVector parse_angles(const std::string& list) {
  AngleVector out;
  if (list.empty()) return out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_angle(item));
  return out;
}

inline std::uint64_t default_seed() {
  if (const char* e = std::getenv("UVAL_SEED")) {
    try {
      return std::stoull(e);
    } catch (const std::exception&) {
      throw DomainError("UVAL_SEED must be a nonnegative integer");
    }
  }
  return 1;
}

struct Options {
  int n = -1, k = -1, r = -1;
  std::string val, to = "mu", op, test, level = "quick", route = "gram";
  std::string angles, co_angles;
  long samples = 1000000;
  std::uint64_t seed = 0;
  int threads = 1;
  bool json = false, oracle = false, cpn = false;
};

// Returns the process exit code: 0 ok, 1 failed selftest or undecidable sign, 2 usage/domain error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact calculator for unitary-invariant valuations", "uval"};
  app.require_subcommand(1);
  Options o;
  o.seed = 0;
  bool seed_given = false;

  auto add_n = [&](CLI::App* c) { c->add_option("--n", o.n, "complex dimension")->required()->check(CLI::Range(0, 64)); };
  auto add_val = [&](CLI::App* c) { c->add_option("--val", o.val, "valuation expression")->required(); };
  auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.json, "machine-readable output"); };
  auto add_to = [&](CLI::App* c) {
    c->add_option("--to", o.to, "output basis")->check(CLI::IsMember({"mu", "tau", "mono", "prim"}));
  };

  auto* tasaki_cmd = app.add_subcommand("tasaki", "Tasaki matrix T^n_k");
  add_n(tasaki_cmd);
  tasaki_cmd->add_option("--k", o.k, "degree, 0 <= k <= n")->required();
  tasaki_cmd->add_flag("--oracle", o.oracle, "invert the Gram matrix instead of summing the closed form");
  add_json(tasaki_cmd);

  auto* pkf_cmd = app.add_subcommand("pkf", "principal kinematic formula");
  add_n(pkf_cmd);
  pkf_cmd->add_flag("--cpn", o.cpn, "normalize to probabilities in CP^n");
  pkf_cmd->add_option("--route", o.route, "primitive|gram")->check(CLI::IsMember({"primitive", "gram"}));
  add_json(pkf_cmd);

  auto* kin_cmd = app.add_subcommand("kinematic", "kinematic tensor k(mu)");
  add_n(kin_cmd);
  add_val(kin_cmd);
  kin_cmd->add_flag("--cpn", o.cpn, "normalize to probabilities in CP^n");
  add_json(kin_cmd);

  auto* add_cmd = app.add_subcommand("additive", "additive kinematic tensor a(mu)");
  add_n(add_cmd);
  add_val(add_cmd);
  add_cmd->add_flag("--cpn", o.cpn, "normalize to probabilities in CP^n");
  add_json(add_cmd);

  auto* cone_cmd = app.add_subcommand("cone", "cone membership");
  add_n(cone_cmd);
  add_val(cone_cmd);
  cone_cmd->add_option("--test", o.test, "positive|monotone|crofton")
      ->required()
      ->check(CLI::IsMember({"positive", "monotone", "crofton"}));
  add_json(cone_cmd);

  auto* conv_cmd = app.add_subcommand("convert", "rewrite a valuation in another basis");
  add_n(conv_cmd);
  add_val(conv_cmd);
  add_to(conv_cmd);
  add_json(conv_cmd);

  auto* sl2_cmd = app.add_subcommand("sl2", "apply L, Lambda or H");
  add_n(sl2_cmd);
  add_val(sl2_cmd);
  sl2_cmd->add_option("--op", o.op, "L|Lambda|H")->required()->check(CLI::IsMember({"L", "Lambda", "H"}));
  add_to(sl2_cmd);
  add_json(sl2_cmd);

  auto* prim_cmd = app.add_subcommand("primitive", "primitive valuation pi_{k,r}");
  add_n(prim_cmd);
  prim_cmd->add_option("--k", o.k, "degree");
  prim_cmd->add_option("--r", o.r, "primitive index")->required();
  add_to(prim_cmd);
  add_json(prim_cmd);

  auto* mc_cmd = app.add_subcommand("mc", "Monte-Carlo check of the Crofton formula");
  add_n(mc_cmd);
  mc_cmd->add_option("--k", o.k, "dimension of E, k <= n")->required();
  mc_cmd->add_option("--angles", o.angles, "Kahler angles of E, comma separated");
  mc_cmd->add_option("--co-angles", o.co_angles, "Kahler angles of the complement of F");
  mc_cmd->add_option("--samples", o.samples, "number of Haar samples")->check(CLI::PositiveNumber);
  mc_cmd->add_option("--seed", o.seed, "RNG seed (default: $UVAL_SEED or 1)")->each([&](const std::string&) {
    seed_given = true;
  });
  mc_cmd->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1, 256));
  add_json(mc_cmd);

  auto* self_cmd = app.add_subcommand("selftest", "run the invariant suite");
  self_cmd->add_option("--level", o.level, "quick|full")->check(CLI::IsMember({"quick", "full"}));
  add_json(self_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  auto print_val = [&](const Valuation& v) {
    if (o.json) out << to_json(v).dump(2) << "\n";
    else out << format_valuation(v, parse_basis(o.to)) << "\n";
  };
  auto print_tensor = [&](const KinematicTensor& t) {
    if (o.json) out << to_json(t).dump(2) << "\n";
    else out << format_tensor(t) << "\n";
  };

  try {
    if (*tasaki_cmd) {
      TasakiMatrix t = o.oracle ? tasaki_matrix_oracle(o.n, o.k) : tasaki_matrix_closed(o.n, o.k);
      if (o.json) out << to_json(t).dump(2) << "\n";
      else out << format_matrix(t.entries) << "\n";
    } else if (*pkf_cmd) {
      KinematicTensor t = principal_kinematic(o.n, o.route == "primitive" ? PkfRoute::Primitive : PkfRoute::Gram);
      print_tensor(o.cpn ? cpn_normalize(t) : t);
    } else if (*kin_cmd || *add_cmd) {
      Valuation m = parse_valspec(o.val, o.n);
      KinematicTensor t = *kin_cmd ? kinematic(o.n, m) : additive_kinematic(o.n, m);
      print_tensor(o.cpn ? cpn_normalize(t) : t);
    } else if (*cone_cmd) {
      Valuation v = parse_valspec(o.val, o.n);
      ConeVerdict c = o.test == "positive" ? is_positive(v) : o.test == "monotone" ? is_monotone(v) : is_crofton_positive(v);
      if (o.json) {
        out << to_json(c, o.test).dump(2) << "\n";
      } else {
        out << (c.member ? "member" : "not member");
        if (c.witness) out << ": " << c.witness->inequality << " fails at k=" << c.witness->k << ", q=" << c.witness->q;
        out << "\n";
      }
    } else if (*conv_cmd) {
      print_val(parse_valspec(o.val, o.n));
    } else if (*sl2_cmd) {
      const Sl2Op op = o.op == "L" ? Sl2Op::L : o.op == "Lambda" ? Sl2Op::Lambda : Sl2Op::H;
      print_val(apply(op, parse_valspec(o.val, o.n)));
    } else if (*prim_cmd) {
      print_val(o.k < 0 ? primitive(o.n, o.r) : primitive_general(o.n, o.k, o.r));
    } else if (*mc_cmd) {
      McOptions mo;
      mo.samples = o.samples;
      mo.seed = seed_given ? o.seed : default_seed();
      mo.threads = o.threads;
      const AngleVector th = parse_angles(o.angles), psi = parse_angles(o.co_angles);
      McResult r = mc_crofton_model(o.n, o.k, th, psi, mo);
      if (o.json) {
        out << to_json(r).dump(2) << "\n";
      } else {
        out << std::setprecision(6) << "estimate   " << r.estimate << " +/- " << r.std_error << "\n"
            << "prediction " << r.prediction_float;
        if (r.prediction_exact) out << " = " << format_scalar(*r.prediction_exact);
        out << "\nsigma      " << std::setprecision(3) << r.sigma << "\n";
      }
    } else if (*self_cmd) {
      std::ostringstream log;
      SelftestReport rep = run_selftest(o.level == "full" ? SelftestLevel::Full : SelftestLevel::Quick, &log);
      if (o.json) {
        Json j = {{"passed", rep.passed}, {"failed", rep.failed}, {"checks", Json::array()}};
        for (const auto& [name, ok] : rep.results) j["checks"].push_back({{"name", name}, {"ok", ok}});
        out << j.dump(2) << "\n";
      } else {
        out << log.str() << rep.passed << " passed, " << rep.failed << " failed\n";
      }
      return rep.ok() ? 0 : 1;
    }
  } catch (const UndecidableSign& e) {
    err << "uval: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "uval: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace uval::cli
