// ringcent: command-line front end for the ring library.
//
//   ringcent inspect <spec.json|gallery:NAME[:P]> [--p P] [--json]
//   ringcent gallery <name> [--p P] [--emit FILE]
//   ringcent enumerate --order N [--up-to-iso] [--out DIR] [--resume]
//   ringcent search --cent K --max-order N
//   ringcent verify --suite <id|all> --universe <gallery|DIR|FILE> [--dump DIR]
//   ringcent verify --mutation [--base <spec|gallery:NAME[:P]>] [--count N] [--seed S]
//   ringcent product <a> <b>
//
// Exit status: 0 on success with no violations, 1 when a suite or the
// mutation harness reports a problem, 2 on any error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ringcent/centralizer.hpp"
#include "ringcent/enumeration.hpp"
#include "ringcent/gallery.hpp"
#include "ringcent/ring_spec.hpp"
#include "ringcent/verify.hpp"

namespace {

using namespace ringcent;

/// Default parameter per gallery constructor when none is given.
std::uint64_t default_param(const std::string& name) {
  if (name == "modular" || name == "null") return 4;
  if (name == "quaternion") return 3;
  return 2;
}

/// "gallery:NAME", "gallery:NAME:P" or a spec file path.
FiniteRing resolve(const std::string& target, std::optional<std::uint64_t> param = std::nullopt) {
  const std::string prefix = "gallery:";
  if (target.rfind(prefix, 0) != 0) return load_ring(target);
  std::string name = target.substr(prefix.size());
  if (const auto colon = name.find(':'); colon != std::string::npos) {
    const std::string p = name.substr(colon + 1);
    name = name.substr(0, colon);
    if (!param) {
      try {
        param = std::stoull(p);
      } catch (const std::exception&) {
        throw RingError(ErrorKind::MalformedSpec, "bad gallery parameter '" + p + "'");
      }
    }
  }
  return gallery_ring(name, param.value_or(default_param(name)));
}

void print_report(const FiniteRing& r, bool json) {
  const auto rep = analyze(r);
  if (json) {
    std::cout << to_json(rep).dump(2) << "\n";
  } else {
    std::cout << render_text(rep);
  }
}

int run_enumerate(std::size_t order, bool up_to_iso, const std::string& out, bool resume) {
  const auto options = EnumerationOptions::from_environment();
  if (!out.empty()) {
    if (!up_to_iso) throw RingError(ErrorKind::MalformedSpec, "--out writes iso classes; add --up-to-iso");
    const auto cat = enumerate_to_directory(order, out, resume, options);
    for (const auto& g : cat.groups) {
      std::cout << g.type.to_string() << ": raw " << g.raw_count << ", classes " << g.class_count << "\n";
    }
    std::cout << "order " << order << ": raw " << cat.raw_total() << ", classes " << cat.class_total()
              << " -> " << out << "\n";
    return 0;
  }
  if (!up_to_iso) {
    if (order == 0 || order > kEnumerationMaxOrder) {
      throw RingError(ErrorKind::TooLarge, "exhaustive enumeration supports order <= " +
                                               std::to_string(kEnumerationMaxOrder));
    }
    const Deadline deadline(options.time_budget_secs);
    std::uint64_t total = 0;
    for (const auto& type : abelian_groups_of_order(order)) {
      const ClosureSearch search(type.factors());
      const auto raw = enumerate_raw(search, deadline, options.threads).size();
      total += raw;
      std::cout << type.to_string() << ": raw " << raw << "\n";
    }
    std::cout << "order " << order << ": raw " << total << "\n";
    return 0;
  }
  const auto cat = enumerate_rings(order, true, options);
  for (const auto& g : cat.groups) {
    std::cout << g.type.to_string() << ": raw " << g.raw_count << ", classes " << g.class_count << "\n";
  }
  for (const auto& r : cat.representatives) {
    const auto rep = analyze(r);
    std::cout << "  " << r.label() << "  commutative " << (rep.is_commutative ? "yes" : "no")
              << "  |Cent| " << rep.cent_count << "  d " << fraction_string(rep.degree) << "\n";
  }
  std::cout << "order " << order << ": raw " << cat.raw_total() << ", classes " << cat.class_total() << "\n";
  return 0;
}

int run_verify(const std::string& suite, const std::string& where, const std::string& dump,
               bool timing) {
  const auto universe = load_universe(where);
  std::vector<SuiteResult> results;
  if (suite == "all") {
    results = run_all_suites(universe);
  } else {
    results.push_back(run_suite(suite, universe));
  }
  std::size_t failed = 0;
  for (const auto& r : results) {
    std::cout << render_result(r, timing);
    if (!r.passed()) {
      ++failed;
      if (!dump.empty()) {
        for (const auto& p : dump_violations(r, dump)) std::cout << "  dumped " << p.string() << "\n";
      }
    }
  }
  std::cout << results.size() - failed << "/" << results.size() << " suites passed\n";
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Centralizers, centers and commutativity degree of finite rings"};
  app.require_subcommand(1);

  std::string target;
  std::optional<std::uint64_t> param;
  bool json = false;
  auto* inspect = app.add_subcommand("inspect", "Report centralizers of one ring");
  inspect->add_option("ring", target, "Spec file or gallery:NAME[:P]")->required();
  inspect->add_option("--p,--n", param, "Gallery parameter (prime or modulus)");
  inspect->add_flag("--json", json, "Print the report as JSON");

  std::string name, emit;
  auto* gallery = app.add_subcommand("gallery", "Build a gallery ring");
  gallery->add_option("name", name, "Constructor name")
      ->required()
      ->check(CLI::IsMember(gallery_names()));
  gallery->add_option("--p,--n", param, "Prime or modulus");
  gallery->add_option("--emit", emit, "Write the ring spec to FILE");
  gallery->add_flag("--json", json, "Print the report as JSON");

  std::size_t order = 0;
  bool up_to_iso = false, resume = false;
  std::string out;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate rings of one order");
  enumerate->add_option("--order", order, "Ring order")->required()->check(CLI::Range(1, 16));
  enumerate->add_flag("--up-to-iso", up_to_iso, "Deduplicate up to isomorphism");
  enumerate->add_option("--out", out, "Write a catalog directory");
  enumerate->add_flag("--resume", resume, "Reuse finished groups in --out");

  std::size_t cent = 0, max_order = 0;
  auto* search = app.add_subcommand("search", "Find rings with a given number of centralizers");
  search->add_option("--cent", cent, "Number of distinct centralizers")->required()->check(CLI::PositiveNumber);
  search->add_option("--max-order", max_order, "Largest order searched")->required()->check(CLI::Range(1, 16));

  std::string suite = "all", universe = "gallery", dump, base = "gallery:row:2";
  bool timing = false, mutation = false;
  std::size_t count = 50;
  std::uint64_t seed = 20240611;
  auto* verify = app.add_subcommand("verify", "Run property suites");
  verify->add_option("--suite", suite, "Suite id or 'all'");
  verify->add_option("--universe", universe, "gallery, a catalog directory or a spec file");
  verify->add_option("--dump", dump, "Write violating ring specs to DIR");
  verify->add_flag("--timing", timing, "Show elapsed time per suite");
  verify->add_flag("--mutation", mutation, "Run the mutation harness instead");
  verify->add_option("--base", base, "Ring mutated by --mutation");
  verify->add_option("--count", count, "Number of mutations");
  verify->add_option("--seed", seed, "Mutation RNG seed");

  std::string left, right;
  auto* product = app.add_subcommand("product", "Report on a direct product");
  product->add_option("a", left, "Spec file or gallery:NAME[:P]")->required();
  product->add_option("b", right, "Spec file or gallery:NAME[:P]")->required();
  product->add_option("--emit", emit, "Write the product spec to FILE");
  product->add_flag("--json", json, "Print the report as JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*inspect) {
      print_report(resolve(target, param), json);
    } else if (*gallery) {
      const auto r = gallery_ring(name, param.value_or(default_param(name)));
      if (!emit.empty()) save_spec(emit, explicit_spec(r));
      print_report(r, json);
    } else if (*enumerate) {
      return run_enumerate(order, up_to_iso, out, resume);
    } else if (*search) {
      const auto hits = search_n_centralizer(cent, max_order, EnumerationOptions::from_environment());
      for (const auto& r : hits) {
        std::cout << r.label() << "  order " << r.order() << "  " << classify_additive(r).to_string()
                  << "\n";
      }
      std::cout << hits.size() << " ring(s) with " << cent << " centralizers up to order " << max_order
                << "\n";
    } else if (*verify) {
      if (mutation) {
        const auto report = run_mutation_harness(resolve(base), count, seed);
        std::cout << render_mutation_report(report);
        return report.detected() == report.trials.size() ? 0 : 1;
      }
      return run_verify(suite, universe, dump, timing);
    } else if (*product) {
      const auto r = direct_product(resolve(left), resolve(right));
      if (!emit.empty()) save_spec(emit, explicit_spec(r));
      print_report(r, json);
    }
  } catch (const RingError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
