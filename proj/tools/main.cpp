#include <CLI11.hpp>
#include <iostream>

#include "cli/run.hpp"

namespace {

using troploc::cli::JobSpec;

CLI::App* add_job(CLI::App& parent, const std::string& name, const std::string& description,
                  JobSpec& job) {
  CLI::App* sub = parent.add_subcommand(name, description);
  sub->add_option("inputs", job.inputs, "input JSON files")->required()->check(CLI::ExistingFile);
  sub->add_option("-o,--output", job.output, "output file (directory for several inputs)");
  sub->add_option("--jobs", job.jobs, "inputs processed in parallel")->check(CLI::PositiveNumber);
  return sub;
}

}  // namespace

int main(int argc, char** argv) {
  JobSpec job;
  job.box = troploc::cli::box_from_env(12);
  long box = job.box;
  std::string mode = "exact";

  CLI::App app{"troploc: local tropicalization of subtoric germs"};
  app.require_subcommand(1);
  app.add_option("--box", box, "brute-force bound (env TROPLOC_BOX)")->check(CLI::PositiveNumber);
  app.add_option("--mode", mode, "coefficient mode")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--tol", job.tol, "float tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", job.seed, "random seed for interior witnesses");
  app.fallthrough();

  add_job(app, "polyhedron", "Newton polyhedron of a series", job);
  add_job(app, "fan", "Newton fan (dual fan) of a series", job);
  add_job(app, "divisor", "tropicalization of the divisor of a series", job)
      ->add_flag("--verify", job.verify, "brute-force check on the lattice box");
  add_job(app, "plane-curve", "rays of a plane curve", job);
  add_job(app, "initial-form", "initial forms at a weight", job)
      ->add_option("-w,--weight", job.weight, "weight vector, e.g. 2,3")
      ->required();
  add_job(app, "ideal-upper", "intersection of the generators' divisor fans", job)
      ->add_flag("--verify", job.verify, "brute-force check on the lattice box");
  add_job(app, "check-structure", "dimension and initial-data checks", job)
      ->add_option("--dim", job.dim, "expected dimension")
      ->required();
  add_job(app, "arc-weight", "weight and semivaluations of a truncated arc", job);
  add_job(app, "puiseux", "Newton-Puiseux branches of a plane curve", job)
      ->add_option("--depth", job.depth, "target residual order")
      ->check(CLI::PositiveNumber);
  add_job(app, "extended-cone", "strata of the extended cone", job);
  add_job(app, "toric-germ", "tropicalization of a toric germ", job);
  add_job(app, "render", "SVG picture of a structured output", job);

  CLI::App* splice = app.add_subcommand("splice", "splice diagrams");
  splice->require_subcommand(1);
  splice->fallthrough();
  add_job(*splice, "validate", "coprimality, edge determinant and semigroup conditions", job);
  add_job(*splice, "system", "splice-type equations", job)
      ->add_option("--coeffs", job.coeffs_path, "coefficients and admissible monomials (JSON)")
      ->check(CLI::ExistingFile);
  add_job(*splice, "trop", "tropicalization from the embedded diagram", job);
  add_job(*splice, "crosscheck", "check the tropicalization against the splice system", job);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : troploc::cli::kInputError;
  }

  for (CLI::App* sub : app.get_subcommands()) {
    job.command = sub->get_name();
    for (CLI::App* action : sub->get_subcommands()) job.command += " " + action->get_name();
  }
  job.box = box;
  job.mode = mode;
  return troploc::cli::run(job, std::cout, std::cerr);
}
