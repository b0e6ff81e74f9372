#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lipext/io.hpp"
#include "lipext/report.hpp"
#include "lipext/verify.hpp"

namespace {

constexpr const char* kRegistryFile = "lipext_run.json";

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty())
    std::cout << payload;
  else
    lipext::write_text_file(out_path, payload);
}

// Rebases the space so the designated base point lies in the subset; the
// Lipschitz seminorm and the extension constant do not depend on the choice.
lipext::SubsetRef rebase_into(const lipext::SubsetRef& S) {
  if (S.contains(S.space->base_point())) return S;
  const int n = S.space->size();
  std::vector<std::vector<double>> d(n, std::vector<double>(n));
  std::vector<std::string> ids(n);
  for (int i = 0; i < n; ++i) {
    ids[i] = S.space->id(i);
    for (int j = 0; j < n; ++j) d[i][j] = S.space->d(i, j);
  }
  const auto rebased =
      lipext::FiniteMetricSpace::validated(std::move(d), std::move(ids), S.indices.front());
  return lipext::SubsetRef(rebased, S.indices);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification workbench for Lipschitz extension operators"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  int trials = 0;
  double tol = lipext::kDefaultTol;
  int n = 0;
  int box = 0;
  int count = -1;
  std::string out_path;
  std::string format = "json";
  std::string target;
  std::string space_file;
  std::string subset_file;

  std::string target_help = "one of:";
  for (const auto& t : lipext::verify_targets()) target_help += " " + t;

  CLI::App* verify = app.add_subcommand("verify", "Run one verification target");
  verify->add_option("target", target, target_help)->required();
  verify->add_option("--seed", seed, "RNG seed (default 0)");
  verify->add_option("--trials", trials, "random functions per certification");
  verify->add_option("--tol", tol, "comparison tolerance (default 1e-9)");
  verify->add_option("--n", n, "dimension, where the target takes one");
  verify->add_option("--box", box, "lattice points per axis (grid-interp)");
  verify->add_option("--count", count, "family size, where the target takes one");
  verify->add_option("--out", out_path, "write the report here instead of stdout");
  verify->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* compute_e = app.add_subcommand(
      "compute-e", "Extension constant of a subset in its ambient space");
  compute_e->add_option("--space", space_file, "space file (JSON)");
  compute_e->add_option("--subset", subset_file, "subset file (JSON); requires --space");
  compute_e->add_option("--seed", seed, "RNG seed for the built-in random instance");
  compute_e->add_option("--tol", tol, "comparison tolerance (default 1e-9)");
  compute_e->add_option("--out", out_path, "write the report here instead of stdout");
  compute_e->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* report = app.add_subcommand("report", "Re-emit all recorded runs");
  report->add_option("--out", out_path, "write the report here instead of stdout");
  report->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const auto t0 = std::chrono::steady_clock::now();

    if (report->parsed()) {
      const std::vector<lipext::RunReport> runs = lipext::read_registry(kRegistryFile);
      emit(format == "csv" ? lipext::to_csv(runs) : lipext::registry_to_canonical_json(runs),
           out_path);
      for (const auto& r : runs)
        if (!r.pass) return 1;
      return 0;
    }

    lipext::RunReport rep;
    if (verify->parsed()) {
      lipext::VerifyOptions opt;
      opt.seed = seed;
      opt.trials = trials;
      opt.tol = tol;
      opt.n = n;
      opt.box = box;
      opt.count = count;
      rep = lipext::verify_target(target, opt);
    } else {
      std::map<std::string, std::string> inputs;
      inputs["seed"] = std::to_string(seed);
      inputs["tol"] = lipext::format_double(tol);
      lipext::SubsetRef S;
      if (!space_file.empty()) {
        const lipext::SpacePtr space = lipext::load_space(space_file);
        S = subset_file.empty()
                ? lipext::SubsetRef(space, [&] {
                    std::vector<int> all(space->size());
                    for (int i = 0; i < space->size(); ++i) all[i] = i;
                    return all;
                  }())
                : lipext::load_subset(space, subset_file);
        inputs["space"] = space_file;
        inputs["subset"] = subset_file.empty() ? "(full space)" : subset_file;
      } else {
        if (!subset_file.empty())
          throw lipext::IoError(lipext::IoError::Kind::ParseError,
                                "--subset requires --space");
        lipext::Rng rng(seed);
        const lipext::SpacePtr space = lipext::random_space(rng, 6);
        std::vector<int> idx = {space->base_point()};
        for (int p : rng.permutation(space->size())) {
          if (static_cast<int>(idx.size()) == 3) break;
          if (p != space->base_point()) idx.push_back(p);
        }
        S = lipext::SubsetRef(space, idx);
        inputs["space"] = "random-6";
        inputs["subset"] = "base plus two random points";
      }
      rep = lipext::compute_e_report(rebase_into(S), tol, std::move(inputs));
    }

    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - t0;
    rep.wall_time_seconds = elapsed.count();
    emit(format == "csv" ? lipext::to_csv(rep) : lipext::to_canonical_json(rep), out_path);
    lipext::append_run(kRegistryFile, rep);
    std::cerr << "wall time: " << rep.wall_time_seconds << " s\n";
    return rep.pass ? 0 : 1;
  } catch (const lipext::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
