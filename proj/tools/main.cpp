#include "commands.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <functional>
#include <iostream>

using namespace jkv;
using namespace jkv::cli;

namespace {

struct Flags {
  std::string model;
  std::string file;
  std::string file2;
  std::string lambda;
  std::string lambda0;
  std::string cocharacter;
  std::string certificate;
  std::string fixed;
  long box = 3;
  std::string suite;
  oracle::FuzzConfig fuzz;
};

CLI::App* add_command(CLI::App& app, const std::string& name, const std::string& help, Flags& f, bool with_model) {
  CLI::App* sub = app.add_subcommand(name, help);
  if (with_model) sub->add_option("model", f.model, "torus or gln")->required()->check(CLI::IsMember({"torus", "gln"}));
  sub->add_option("--file", f.file, "problem file")->required()->check(CLI::ExistingFile);
  return sub;
}

void require_model(const Flags& f, const std::string& model, const std::string& flag) {
  if (f.model != model) throw CLI::ValidationError(flag, "only applies to the " + model + " model");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Jordan-Kac-Vinberg decompositions for torus and GL_n models"};
  app.require_subcommand(1);
  Flags f;

  auto* limit_cmd = add_command(app, "limit", "limit of lambda(t).v as t -> 0", f, true);
  limit_cmd->add_option("--lambda", f.lambda, "torus cocharacter, e.g. 1,-2");
  limit_cmd->add_option("--cocharacter", f.cocharacter, "GL_n cocharacter file")->check(CLI::ExistingFile);

  add_command(app, "semisimple", "closed-orbit test with certificate", f, true);

  auto* nilpotent_cmd = add_command(app, "nilpotent", "0 in the orbit closure, with a contracting cocharacter", f, true);
  nilpotent_cmd->add_option("--fixed", f.fixed, "torus weights the cocharacter must fix, e.g. 1,0;0,1");

  add_command(app, "jkv", "JKV decomposition gamma = s + n", f, true);

  auto* certify_cmd = add_command(app, "certify-jkv", "check a claimed JKV decomposition", f, true);
  certify_cmd->add_option("--certificate", f.certificate, "claimed {s, n, lambda}")->required()->check(CLI::ExistingFile);

  auto* lambda_min_cmd = add_command(app, "lambda-min", "cocharacters with semisimple limit minimizing dim V_{lambda,0}", f, false);
  lambda_min_cmd->add_option("--box", f.box, "search box [-B,B]^rank")->check(CLI::PositiveNumber);

  auto* orbit_cmd = add_command(app, "orbit-eq", "same G(Q)-orbit test with witness", f, false);
  orbit_cmd->add_option("--file2", f.file2, "second torus problem (else the 'target' field)")->check(CLI::ExistingFile);

  auto* mu_cmd = add_command(app, "compose-mu", "mu = n lambda0 + lambda with minimal n", f, false);
  mu_cmd->add_option("--lambda0", f.lambda0, "e.g. 1,0")->required();
  mu_cmd->add_option("--lambda", f.lambda, "e.g. 0,1")->required();

  add_command(app, "bruhat", "g = p w u", f, false);
  add_command(app, "jordan-chevalley", "X = S + N with S = p(X)", f, false);

  auto* conj_cmd = add_command(app, "conjugacy", "conjugacy over Q with witness", f, false);
  conj_cmd->add_option("--file2", f.file2, "second GL_n problem (else the 'target' field)")->check(CLI::ExistingFile);

  auto* survey_cmd = add_command(app, "survey", "all limits in a box and their orbits", f, false);
  survey_cmd->add_option("--box", f.box, "search box [-B,B]^rank")->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "run a seeded verification suite");
  verify_cmd->add_option("--suite", f.suite, "suite name")->required()->check(CLI::IsMember(oracle::suite_names()));
  verify_cmd->add_option("--seed", f.fuzz.seed, "64-bit seed");
  verify_cmd->add_option("--count", f.fuzz.count, "number of instances");
  verify_cmd->add_option("--start", f.fuzz.start, "index of the first instance");
  verify_cmd->add_option("--box", f.fuzz.box, "cocharacter box bound")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-rank", f.fuzz.max_rank, "torus rank bound")->check(CLI::Range(1, 6));
  verify_cmd->add_option("--max-size", f.fuzz.max_size, "GL_n size bound")->check(CLI::Range(2, 6));

  try {
    app.parse(argc, argv);
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "limit") {
      if (f.model == "torus") {
        if (f.lambda.empty() || !f.cocharacter.empty()) throw CLI::ValidationError("--lambda", "the torus model takes --lambda");
      } else if (f.cocharacter.empty() || !f.lambda.empty()) {
        throw CLI::ValidationError("--cocharacter", "the gln model takes --cocharacter");
      }
    }
    if (cmd == "nilpotent" && !f.fixed.empty()) require_model(f, "torus", "--fixed");
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  const bool torus = f.model == "torus";
  try {
    Outcome out;
    double wall = -1;
    if (cmd == "limit")
      out = torus ? limit_torus(f.file, f.lambda) : limit_gln(f.file, f.cocharacter);
    else if (cmd == "semisimple")
      out = torus ? semisimple_torus(f.file) : semisimple_gln(f.file);
    else if (cmd == "nilpotent")
      out = torus ? nilpotent_torus(f.file, f.fixed) : nilpotent_gln(f.file);
    else if (cmd == "jkv")
      out = torus ? jkv_torus(f.file) : jkv_gln_command(f.file);
    else if (cmd == "certify-jkv")
      out = torus ? certify_torus(f.file, f.certificate) : certify_gln(f.file, f.certificate);
    else if (cmd == "lambda-min")
      out = lambda_min_command(f.file, f.box);
    else if (cmd == "orbit-eq")
      out = orbit_eq_command(f.file, f.file2);
    else if (cmd == "compose-mu")
      out = compose_mu_command(f.file, f.lambda0, f.lambda);
    else if (cmd == "bruhat")
      out = bruhat_command(f.file);
    else if (cmd == "jordan-chevalley")
      out = jordan_chevalley_command(f.file);
    else if (cmd == "conjugacy")
      out = conjugacy_command(f.file, f.file2);
    else if (cmd == "survey")
      out = survey_command(f.file, f.box);
    else
      out = verify_command(f.suite, f.fuzz, &wall);
    std::cout << io::render(out.doc);
    std::cout.flush();
    if (wall >= 0) std::fprintf(stderr, "wall time: %.3f s\n", wall);
    return out.code;
  } catch (const VerificationFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFalse;
  } catch (const Unsupported& e) {
    std::cout << io::render({{"command", cmd}, {"unsupported", e.what()}});
    return kUnsupported;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
