#include "thetagroup/report.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace thetagroup;

namespace {

constexpr int kUsage = 2;
constexpr int kVerification = 3;

std::string display_type(const Classifier& c) { return c.label() == "D4-3" ? "D4^(3)" : c.label(); }

int cmd_tables(const std::string& type, const std::string& format, std::int64_t p, std::uint64_t seed) {
  Classifier c(type);
  Classification res = c.classify(FieldConfig{p}, seed);
  if (format == "json")
    std::cout << table_json(display_type(c), res).dump(2) << "\n";
  else
    std::cout << table_markdown(display_type(c), res);
  for (const auto& r : res.rows)
    if (!r.kw.verified() || !r.kw.criterion || !r.w_phi2_trivial) return kVerification;
  return 0;
}

int cmd_analyze(const std::string& type, const std::string& diagram, const std::string& format, std::int64_t p,
                std::uint64_t seed) {
  Classifier c(type);
  KacDiagram d = parse_kac_diagram(c.affine(), diagram);
  if (!d.primitive()) {
    int g = 0;
    for (int x : d.coeffs) g = std::gcd(g, x);
    KacDiagram reduced = d;
    for (int& x : reduced.coeffs) x /= g;
    std::cerr << "diagram " << d.str() << " is not primitive; its primitive reduction is " << reduced.str() << "\n";
    return kUsage;
  }
  Dossier dos = c.analyze(d, FieldConfig{p}, seed);
  if (format == "json")
    std::cout << dossier_json(dos).dump(2) << "\n";
  else
    std::cout << dossier_text(dos);
  return 0;
}

int cmd_classes(const std::string& type) {
  Classifier c(type);
  std::cout << "| class | order | size | centralizer | fixed dim | Φ1 | Φ2 |\n|---|---|---|---|---|---|---|\n";
  for (const auto& k : c.classes())
    std::cout << "| " << k.label << " | " << k.order << " | " << k.size << " | " << k.centralizer_order << " | "
              << k.fixed_dim << " | " << k.phi1_type << " | " << k.phi2_type << " |\n";
  return 0;
}

int cmd_verify(const std::string& suite, const std::string& format, std::uint64_t seed) {
  auto items = run_suite(suite, seed);
  bool ok = true;
  Json j = Json::array();
  for (const auto& it : items) {
    ok = ok && it.pass;
    if (format == "json")
      j.push_back({{"item", it.item}, {"pass", it.pass}, {"detail", it.detail}});
    else
      std::cout << (it.pass ? "PASS " : "FAIL ") << it.item << (it.detail.empty() ? "" : ": " + it.detail) << "\n";
  }
  if (format == "json")
    std::cout << Json{{"suite", suite}, {"pass", ok}, {"items", j}}.dump(2) << "\n";
  else
    std::cout << suite << ": " << (ok ? "all pass" : "failures") << " (" << items.size() << " items)\n";
  return ok ? 0 : kVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positive rank θ-groups of types G2, F4 and D4^(3)"};
  app.require_subcommand(1);

  std::string type;
  std::string format = "md";
  std::string diagram;
  std::string suite;
  std::int64_t p = 0;
  std::uint64_t seed = 0;
  const std::vector<std::string> types = {"g2", "f4", "d4-3"};

  auto* tables = app.add_subcommand("tables", "Regenerate the table of positive rank automorphisms");
  tables->add_option("--type", type, "g2, f4 or d4-3")->required()->check(CLI::IsMember(types, CLI::ignore_case));
  tables->add_option("--format", format, "md or json")->check(CLI::IsMember({"md", "json"}));
  tables->add_option("--char", p, "0 or a prime; applied to rows of order dividing p-1")
      ->check(CLI::NonNegativeNumber);
  tables->add_option("--seed", seed, "seed for the generic-orbit sampler");

  auto* analyze = app.add_subcommand("analyze", "Full dossier for one Kac diagram");
  analyze->add_option("--type", type, "g2, f4 or d4-3")->required()->check(CLI::IsMember(types, CLI::ignore_case));
  analyze->add_option("--diagram", diagram, "Kac coefficients, e.g. 01001")->required();
  analyze->add_option("--format", format, "text or json")->check(CLI::IsMember({"md", "text", "json"}));
  analyze->add_option("--char", p, "0 or a prime")->check(CLI::NonNegativeNumber);
  analyze->add_option("--seed", seed, "seed for the generic-orbit sampler");

  auto* classes = app.add_subcommand("classes", "List the Carter classes of the Weyl group");
  classes->add_option("--type", type, "g2, f4 or d4-3")->required()->check(CLI::IsMember(types, CLI::ignore_case));

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "counting, zero-rank, criterion, kw-sections or jacobi")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"md", "text", "json"}));
  verify->add_option("--seed", seed, "seed for randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (p != 0) {
      // rejects composite characteristics before any work is done
      for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("--char must be 0 or a prime");
      if (p < 5) throw std::invalid_argument("--char must be 0 or a prime greater than 3");
    }
    if (*tables) return cmd_tables(type, format, p, seed);
    if (*analyze) return cmd_analyze(type, diagram, format, p, seed);
    if (*classes) return cmd_classes(type);
    return cmd_verify(suite, format, seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kVerification;
  }
}
