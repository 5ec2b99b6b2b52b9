// Command-line front end: load a preset or a .cqg file and run one of the
// verification or computation commands. Exit codes: 0 all checks passed,
// 2 input, 3 degree bookkeeping, 4 failed checks, 5 internal.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "cqg/corep.hpp"
#include "cqg/dsl.hpp"
#include "cqg/dual.hpp"
#include "cqg/error.hpp"
#include "cqg/finite.hpp"
#include "cqg/haar.hpp"
#include "cqg/presets.hpp"

using namespace cqg;

namespace {

constexpr int kSchema = 1;

struct Config {
  std::string preset, file, json, expr;
  int degree = 0;
  int depth = 2;
  std::vector<double> samples{1.0 / 3, 0.5, 0.9};
  std::uint64_t seed = 1;
};

struct Loaded {
  AlgebraPtr alg;
  std::optional<FiniteQuantumGroup> fq;
  std::string source;
};

Loaded load(const Config& c) {
  Loaded l;
  if (!c.file.empty()) {
    l.alg = dsl::load_file(c.file);
    l.source = c.file;
  } else if (is_finite_preset(c.preset)) {
    l.fq = load_finite_preset(c.preset);
    l.alg = l.fq->view;
    l.source = c.preset;
  } else {
    l.alg = load_preset(c.preset);
    l.source = c.preset;
  }
  return l;
}

// Haar table big enough for F matrices of irreps up to the given depth.
std::shared_ptr<HaarTable> haar_for(const Loaded& l, int depth) {
  return std::make_shared<HaarTable>(compute_haar(*l.alg, l.fq ? 2 : std::max(2, 2 * depth)));
}

struct Output {
  Json json;
  std::ostringstream text;
  bool ok = true;
};

void add_report(Output& out, const std::string& key, const Report& r) {
  out.json["reports"][key] = r.to_json();
  out.ok = out.ok && r.passed();
  out.text << (r.passed() ? "PASS " : "FAIL ") << key << " (" << r.total_checks() << " checks)\n";
  for (const auto& f : r.failures) out.text << "  " << f.axiom << " " << f.monomial << ": " << f.residual << "\n";
}

void cmd_verify_hopf(const Config& c, const Loaded& l, Output& out) {
  const int d = c.degree > 0 ? c.degree : 4;
  out.json["degree"] = d;
  add_report(out, "hopf", verify_hopf(*l.alg, d));
  add_report(out, "galois", galois_maps(*l.alg, std::min(d, 3)));
}

void cmd_haar(const Config& c, const Loaded& l, Output& out) {
  const int d = c.degree > 0 ? c.degree : 4;
  HaarTable t = compute_haar(*l.alg, d);
  out.json["haar"] = t.to_json();
  add_report(out, "invariance", haar_invariance_check(*l.alg, t));
  out.text << "haar table, degree " << d << ", solution dimension " << t.solution_dimension << "\n";
  for (const auto& [w, s] : t.values)
    if (!s.is_zero()) out.text << "  h(" << t.pres->word_text(w) << ") = " << s.to_string() << "\n";
}

std::shared_ptr<IrrepRegistry> registry(const Loaded& l, const std::shared_ptr<HaarTable>& h, int depth,
                                        FusionTable* table) {
  auto reg = IrrepRegistry::seeded(l.alg, h);
  FusionTable ft = fusion_table(*reg, depth);
  if (table) *table = std::move(ft);
  return reg;
}

void cmd_f_matrix(const Config& c, const Loaded& l, Output& out) {
  auto h = haar_for(l, c.depth);
  auto reg = registry(l, h, c.depth, nullptr);
  Report all;
  all.title = "F matrices";
  for (std::size_t k = 0; k < reg->size(); ++k) {
    const Irrep& a = reg->at(k);
    FMatrix f = f_matrix(a, *h, c.samples, &all);
    out.json["f_matrices"][a.label] = f.f.to_string();
    out.text << a.label << " (" << a.corep.name << "): F = " << f.f.to_string() << "\n";
  }
  add_report(out, "f-matrix", all);
  add_report(out, "peter-weyl", haar_peter_weyl_check(*reg, *h));
}

void cmd_fuse(const Config& c, const Loaded& l, Output& out) {
  FusionTable ft;
  auto h = l.fq ? haar_for(l, 1) : nullptr;
  if (!l.fq) {
    // unitarizing declared coreps may need h; only computed when required
    bool unitary = true;
    for (const auto& s : l.alg->coreps()) unitary = unitary && is_unitary(*l.alg, Corep::from_spec(s)).ok;
    if (!unitary) h = haar_for(l, 1);
  }
  auto reg = registry(l, h, c.depth, &ft);
  out.json["fusion"] = ft.to_json();
  Json irreps = Json::array();
  for (std::size_t k = 0; k < reg->size(); ++k)
    irreps.push_back({{"label", reg->at(k).label}, {"name", reg->at(k).corep.name}, {"dim", reg->at(k).corep.dim}});
  out.json["irreps"] = irreps;
  for (const auto& e : ft.entries) {
    out.text << e.left << " (x) " << e.right << " =";
    for (std::size_t k = 0; k < e.summands.size(); ++k) {
      out.text << (k ? " +" : "") << " ";
      if (e.summands[k].second > 1) out.text << e.summands[k].second << " ";
      out.text << e.summands[k].first;
    }
    out.text << "\n";
  }
}

// "u (x) u (+) u": left to right over declared coreps
Corep corep_expr(const CqgAlgebra& alg, const std::string& text) {
  std::istringstream in(text);
  std::string tok, op;
  std::optional<Corep> acc;
  while (in >> tok) {
    if (tok == "(x)" || tok == "(+)") {
      if (!acc || !op.empty()) throw Error(ErrorKind::Syntax, "misplaced " + tok + " in corep expression");
      op = tok;
      continue;
    }
    const CorepSpec* s = alg.find_corep(tok);
    if (!s) throw Error(ErrorKind::NotInRegistry, "no declared corep '" + tok + "'");
    Corep c = Corep::from_spec(*s);
    if (!acc)
      acc = c;
    else if (op == "(x)")
      acc = tensor(*acc, c);
    else if (op == "(+)")
      acc = direct_sum(*acc, c);
    else
      throw Error(ErrorKind::Syntax, "missing operator before '" + tok + "'");
    op.clear();
  }
  if (!acc || !op.empty()) throw Error(ErrorKind::Syntax, "incomplete corep expression");
  return *acc;
}

void cmd_decompose(const Config& c, const Loaded& l, Output& out) {
  if (l.alg->coreps().empty()) throw Error(ErrorKind::NotInRegistry, "no declared coreps");
  const std::string expr = c.expr.empty() ? l.alg->coreps()[0].name + " (x) " + l.alg->coreps()[0].name : c.expr;
  Corep v = corep_expr(*l.alg, expr);
  auto h = haar_for(l, std::max(1, v.degree()));
  auto reg = IrrepRegistry::seeded(l.alg, h);
  if (!is_unitary(*l.alg, v).ok) v = unitarize(*l.alg, v, *h).corep;
  Decomposition d = decompose(v, *reg);
  out.json["expression"] = expr;
  out.json["decomposition"] = d.to_json();
  out.text << expr << " =";
  for (std::size_t k = 0; k < d.summands.size(); ++k)
    out.text << (k ? " +" : "") << " " << (d.summands[k].multiplicity > 1 ? std::to_string(d.summands[k].multiplicity) + " " : "")
             << d.summands[k].label;
  out.text << "\nwitness residual " << d.witness_residual << "\n";
  Json irreps = Json::array();
  for (std::size_t k = 0; k < reg->size(); ++k)
    irreps.push_back({{"label", reg->at(k).label}, {"dim", reg->at(k).corep.dim}});
  out.json["irreps"] = irreps;
}

void cmd_dual(const Config& c, const Loaded& l, Output& out) {
  auto h = haar_for(l, c.depth);
  auto reg = registry(l, h, c.depth, nullptr);
  DualContext dc(reg, h);
  out.json["dual"] = dc.to_json();
  add_report(out, "dual", dc.verify());
  for (const auto& lab : dc.labels())
    out.text << lab << ": dim " << dc.block_dim(lab) << ", F = " << dc.f(lab).to_string() << "\n";
}

void cmd_regrep(const Config& c, const Loaded& l, Output& out) {
  if (!l.fq) throw Error(ErrorKind::NotInRegistry, "regrep-check needs a finite preset");
  const FiniteAlgebra& fa = l.fq->fa;
  GnsData g = gns(fa);
  SparseMatrix u = regular_unitary(fa);
  add_report(out, "unitary", check_regular_unitary(fa, g, u));
  add_report(out, "pentagon", check_pentagon(u, fa.dim));
  add_report(out, "implements", check_implements(fa, g, u));

  auto h = haar_for(l, 1);
  auto reg = registry(l, h, 2 * static_cast<int>(fa.dim), nullptr);
  Corep regular = Corep::from_spec(l.fq->regular_corep());
  Report emb;
  emb.title = "irreps inside the regular corep";
  for (std::size_t k = 0; k < reg->size(); ++k) {
    const Irrep& a = reg->at(k);
    const std::size_t m = intertwiners(*l.alg, a.corep, regular).size();
    emb.check("embeds", m > 0, a.label, [] { return "Mor(u^a, regular) = 0"; });
    out.json["regular_multiplicities"][a.label] = m;
  }
  add_report(out, "embedding", emb);

  out.json["seed"] = c.seed;
  out.text << "seed " << c.seed << "\n";
  if (c.preset.rfind("c_", 0) == 0) {
    // random state of a function algebra: a probability vector
    std::mt19937_64 rng(c.seed);
    std::uniform_real_distribution<double> unif(0.05, 1.0);
    std::vector<double> w(fa.dim);
    double s = 0;
    for (double& x : w) s += (x = unif(rng));
    for (double& x : w) x /= s;
    CesaroLog log = cesaro_haar(fa, w, 1000000, 1e-6, true);
    Report ces;
    ces.title = "cesaro";
    for (std::size_t k = 0; k < log.steps.size(); ++k) {
      const double bound = 2.0 / static_cast<double>(log.steps[k]);
      ces.check("defect", log.defect[k] <= bound + 1e-12, "n=" + std::to_string(log.steps[k]),
                [&] { return std::to_string(log.defect[k]); });
    }
    ces.check("converged", log.converged, "tol 1e-6", [&] { return "after " + std::to_string(log.iterations); });
    out.json["cesaro"] = {{"iterations", log.iterations}, {"accelerated", log.accelerated},
                          {"steps", log.steps}, {"defect", log.defect}, {"distance", log.distance}};
    out.text << "cesaro: " << log.iterations << " iterations" << (log.accelerated ? " (tail mean)" : "") << "\n";
    add_report(out, "cesaro", ces);
  }
}

void cmd_normalize(const Config& c, const Loaded& l, Output& out) {
  if (c.expr.empty()) throw Error(ErrorKind::Syntax, "normalize needs --expr");
  NcPoly p = dsl::parse_polynomial(l.alg->pres(), c.expr);
  out.json["input"] = c.expr;
  out.json["normal_form"] = p.to_string();
  out.text << p.to_string() << "\n";
}

void cmd_wor1(const Config&, const Loaded& l, Output& out) {
  if (l.alg->coreps().empty()) throw Error(ErrorKind::NotInRegistry, "no declared coreps");
  for (const auto& s : l.alg->coreps()) add_report(out, "antipode-" + s.name, verify_wor1_axiom3(*l.alg, Corep::from_spec(s)));
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Syntax:
    case ErrorKind::UnknownGenerator:
    case ErrorKind::UndeclaredGenerator:
    case ErrorKind::IncompleteTable:
    case ErrorKind::OrientationViolation:
    case ErrorKind::NotInRegistry:
    case ErrorKind::NotAGroup:
      return 2;
    case ErrorKind::DegreeExceedsCertificate:
    case ErrorKind::DegreeClosureViolated:
    case ErrorKind::HaarTableInsufficient:
      return 3;
    case ErrorKind::Internal:
      return 5;
    default:
      return 4;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for compact quantum groups"};
  app.require_subcommand(1);
  Config cfg;
  std::string samples;
  using Handler = void (*)(const Config&, const Loaded&, Output&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const char* name, const char* help, Handler h) {
    CLI::App* sc = app.add_subcommand(name, help);
    auto* src = sc->add_option_group("source");
    src->add_option("--preset", cfg.preset, "preset name");
    src->add_option("--file", cfg.file, ".cqg file");
    src->require_option(1);
    sc->add_option("--degree", cfg.degree, "degree bound")->check(CLI::PositiveNumber);
    sc->add_option("--depth", cfg.depth, "fusion depth")->check(CLI::PositiveNumber);
    sc->add_option("--q-samples", samples, "comma separated points in (0,1]");
    sc->add_option("--json", cfg.json, "write JSON here ('-' for stdout)");
    sc->add_option("--seed", cfg.seed, "seed for randomized checks");
    sc->add_option("--expr", cfg.expr, "expression (normalize, decompose)");
    commands.emplace_back(sc, h);
  };
  add("verify-hopf", "Hopf axioms on normal monomials", cmd_verify_hopf);
  add("haar", "exact Haar table", cmd_haar);
  add("f-matrix", "F matrices of the registry", cmd_f_matrix);
  add("fuse", "fusion table", cmd_fuse);
  add("decompose", "decompose a corep expression", cmd_decompose);
  add("dual", "dual blocks, K matrices and checks", cmd_dual);
  add("regrep-check", "regular representation of a finite preset", cmd_regrep);
  add("normalize", "normal form of --expr", cmd_normalize);
  add("axioms-wor1", "antipode identities on declared coreps", cmd_wor1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (!samples.empty()) {
      cfg.samples.clear();
      std::stringstream ss(samples);
      std::string item;
      while (std::getline(ss, item, ',')) {
        double x = std::stod(item);
        if (!(x > 0.0 && x <= 1.0)) throw Error(ErrorKind::Syntax, "q samples must lie in (0,1]");
        cfg.samples.push_back(x);
      }
    }
    for (auto& [sc, handler] : commands) {
      if (!sc->parsed()) continue;
      Loaded l = load(cfg);
      Output out;
      out.json["schema_version"] = kSchema;
      out.json["command"] = sc->get_name();
      out.json["source"] = l.source;
      handler(cfg, l, out);
      out.json["passed"] = out.ok;
      if (cfg.json == "-") {
        std::cout << out.json.dump(2) << "\n";
      } else {
        std::cout << out.text.str();
        if (!cfg.json.empty()) {
          std::ofstream f(cfg.json);
          if (!f) throw Error(ErrorKind::Syntax, "cannot write " + cfg.json);
          f << out.json.dump(2) << "\n";
        }
      }
      return out.ok ? 0 : 4;
    }
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error [internal]: " << e.what() << "\n";
    return 5;
  }
  return 5;
}
