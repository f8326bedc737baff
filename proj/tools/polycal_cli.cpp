// SPDX-License-Identifier: Apache-2.0
// polycal: command-line front end over the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polycal/polycal.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A failed check is reported with exit 1; anything the library could not
// even evaluate is an input error.
struct CheckFailure {};

struct Options {
  std::vector<std::string> inputs;
  std::string out;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::string solver_config;
  // command specific
  std::string demo_name;
  double radius = 1.0;
  int refine = -1;
  int trials = 100;
  double magnitude = 0.1;
  bool with_solver = false;
  std::optional<double> lambda;
};

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using ComplexHandle = std::unique_ptr<polycal_complex, Deleter<polycal_complex, polycal_complex_free>>;
using VarifoldHandle = std::unique_ptr<polycal_varifold, Deleter<polycal_varifold, polycal_varifold_free>>;
using ChainHandle = std::unique_ptr<polycal_chain, Deleter<polycal_chain, polycal_chain_free>>;
using GroupHandle = std::unique_ptr<polycal_group, Deleter<polycal_group, polycal_group_free>>;

int exit_code(polycal_status s) {
  switch (s) {
    case POLYCAL_OK: return kExitPass;
    case POLYCAL_CHECK_FAILED:
    case POLYCAL_E_PRECONDITION:
    case POLYCAL_E_SOLVER: return kExitCheckFailed;
    default: return kExitInputError;
  }
}

// Throws on statuses other than OK and CHECK_FAILED.
polycal_status call(polycal_status s) {
  if (s == POLYCAL_OK || s == POLYCAL_CHECK_FAILED) return s;
  if (exit_code(s) == kExitCheckFailed) {
    std::cerr << "polycal: " << polycal_last_error() << "\n";
    throw CheckFailure{};
  }
  throw InputError(polycal_last_error());
}

Json take_json(char* text) {
  Json j = Json::parse(text);
  polycal_string_free(text);
  return j;
}

// Later files override keys of earlier ones.
Json load_bundle(const std::vector<std::string>& paths) {
  Json bundle = Json::object();
  for (const auto& path : paths) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw InputError(path + ": " + e.what());
    }
    if (!j.is_object()) throw InputError(path + ": expected a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) bundle[it.key()] = it.value();
  }
  return bundle;
}

const Json& need(const Json& bundle, const char* key) {
  if (!bundle.contains(key)) throw InputError(std::string("input has no '") + key + "'");
  return bundle.at(key);
}

ComplexHandle load_complex(const Json& bundle) {
  polycal_complex* k = nullptr;
  call(polycal_complex_from_json(need(bundle, "complex").dump().c_str(), &k));
  return ComplexHandle(k);
}

VarifoldHandle load_varifold(const Json& bundle, const polycal_complex* k) {
  polycal_varifold* v = nullptr;
  call(polycal_varifold_from_json(k, need(bundle, "varifold").dump().c_str(), &v));
  return VarifoldHandle(v);
}

ChainHandle load_chain(const Json& bundle, const char* key, const polycal_complex* k) {
  polycal_chain* a = nullptr;
  call(polycal_chain_from_json(k, need(bundle, key).dump().c_str(), &a));
  return ChainHandle(a);
}

std::string solver_config_text(const Options& o) {
  Json cfg = Json::object();
  if (!o.solver_config.empty()) cfg = load_bundle({o.solver_config});
  if (!cfg.contains("seed")) cfg["seed"] = o.seed;
  return cfg.dump();
}

void write_output(const Options& o, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.out);
  if (!out) throw InputError("cannot write " + o.out);
  out << text;
}

int finish(const Options& o, polycal_status s, const Json& j) {
  write_output(o, j);
  return exit_code(s);
}

int run_validate(const Options& o) {
  const Json bundle = load_bundle(o.inputs);
  auto k = load_complex(bundle);
  char* report = nullptr;
  const polycal_status s = call(polycal_complex_validate(k.get(), o.tol, &report));
  return finish(o, s, take_json(report));
}

int run_stationarity(const Options& o) {
  const Json bundle = load_bundle(o.inputs);
  auto k = load_complex(bundle);
  auto v = load_varifold(bundle, k.get());
  char* report = nullptr;
  const polycal_status s = call(polycal_stationarity(v.get(), o.tol, &report));
  return finish(o, s, take_json(report));
}

int run_chainify(const Options& o) {
  const Json bundle = load_bundle(o.inputs);
  auto k = load_complex(bundle);
  auto v = load_varifold(bundle, k.get());
  polycal_chain* a = nullptr;
  call(polycal_chainify(v.get(), &a));
  ChainHandle chain(a);
  char* text = nullptr;
  call(polycal_chain_to_json(chain.get(), &text));
  return finish(o, POLYCAL_OK, {{"complex", bundle.at("complex")}, {"chain", take_json(text)}});
}

int run_certify(const Options& o) {
  const Json bundle = load_bundle(o.inputs);
  auto k = load_complex(bundle);
  char* cert = nullptr;
  polycal_status s;
  if (bundle.contains("varifold")) {
    auto v = load_varifold(bundle, k.get());
    s = call(polycal_certify(v.get(), o.tol, o.with_solver ? 1 : 0, solver_config_text(o).c_str(), &cert));
  } else {
    auto a = load_chain(bundle, "chain", k.get());
    s = call(polycal_certify_chain(a.get(), o.tol, &cert));
  }
  return finish(o, s, take_json(cert));
}

int run_minimize(const Options& o) {
  const Json bundle = load_bundle(o.inputs);
  auto k = load_complex(bundle);
  char* result = nullptr;
  polycal_status s;
  if (bundle.contains("varifold")) {
    auto v = load_varifold(bundle, k.get());
    s = call(polycal_minimize_varifold(v.get(), o.refine < 0 ? 1 : o.refine, solver_config_text(o).c_str(), &result));
  } else if (bundle.contains("boundary")) {
    auto b = load_chain(bundle, "boundary", k.get());
    s = call(polycal_minimize(b.get(), solver_config_text(o).c_str(), &result));
  } else {
    auto ref = load_chain(bundle, "chain", k.get());
    polycal_chain* b = nullptr;
    call(polycal_chain_boundary(ref.get(), &b));
    ChainHandle boundary(b);
    s = call(polycal_minimize(boundary.get(), solver_config_text(o).c_str(), &result));
  }
  return finish(o, s, take_json(result));
}

int run_flatnorm(const Options& o) {
  const Json bundle = load_bundle(o.inputs);
  auto k = load_complex(bundle);
  auto a = load_chain(bundle, "chain", k.get());
  char* result = nullptr;
  const polycal_status s = call(polycal_flatnorm(a.get(), solver_config_text(o).c_str(), &result));
  return finish(o, s, take_json(result));
}

int run_deform(const Options& o) {
  const Json bundle = load_bundle(o.inputs);
  auto k = load_complex(bundle);
  auto v = load_varifold(bundle, k.get());
  if (o.refine > 0) {
    polycal_varifold* refined = nullptr;
    call(polycal_varifold_refine(v.get(), o.refine, &refined));
    v.reset(refined);
  }
  char* report = nullptr;
  const polycal_status s = call(polycal_deform(v.get(), o.trials, o.magnitude, o.seed, o.tol, &report));
  return finish(o, s, take_json(report));
}

int run_groupnorm(const Options& o) {
  const Json bundle = load_bundle(o.inputs);
  polycal_group* g = nullptr;
  call(polycal_group_from_json(need(bundle, "group").dump().c_str(), &g));
  GroupHandle group(g);
  Json out = Json::object();
  if (bundle.contains("element")) {
    double norm = 0.0;
    call(polycal_group_norm(group.get(), bundle.at("element").dump().c_str(), &norm));
    out["norm"] = norm;
  }
  std::optional<double> lambda = o.lambda;
  if (!lambda && bundle.contains("lambda")) lambda = bundle.at("lambda").get<double>();
  if (lambda) {
    char* ball = nullptr;
    call(polycal_norm_ball(group.get(), *lambda, &ball));
    out["lambda"] = *lambda;
    out["ball"] = take_json(ball);
  }
  int integral = 0;
  if (polycal_integrality_check(group.get(), &integral) == POLYCAL_OK) out["integral"] = integral != 0;
  return finish(o, POLYCAL_OK, out);
}

int run_demo(const Options& o) {
  Json params = o.inputs.empty() ? Json::object() : load_bundle(o.inputs);
  params["radius"] = o.radius;
  params["refinement"] = std::max(o.refine, 0);
  char* out = nullptr;
  call(polycal_demo(o.demo_name.c_str(), params.dump().c_str(), &out));
  return finish(o, POLYCAL_OK, take_json(out));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polyhedral varifold stationarity, calibration and mass-minimization checks"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--in", o.inputs, "input JSON file (repeatable; keys merge)");
    cmd->add_option("--out", o.out, "output file (default: stdout)");
    cmd->add_option("--tol", o.tol, "tolerance");
    cmd->add_option("--seed", o.seed, "random seed");
    cmd->add_option("--solver-config", o.solver_config, "solver config JSON file");
  };

  struct Command {
    CLI::App* app;
    int (*run)(const Options&);
  };
  std::vector<Command> commands;
  auto add = [&](const char* name, const char* help, int (*run)(const Options&)) {
    CLI::App* cmd = app.add_subcommand(name, help);
    common(cmd);
    commands.push_back({cmd, run});
    return cmd;
  };

  add("validate", "check that simplices meet only in common faces", run_validate);
  add("stationarity", "conormal balance at every interior face", run_stationarity);
  add("chainify", "the canonical chain of a varifold", run_chainify);
  add("certify", "minimality certificate for a varifold (or calibration of a chain)", run_certify)
      ->add_flag("--with-solver", o.with_solver, "cross-check with the min-mass solver");
  add("minimize", "least-mass chain with a fixed boundary", run_minimize)
      ->add_option("--refine", o.refine, "barycentric refinements for a varifold input (default 1)");
  add("flatnorm", "flat norm restricted to the complex", run_flatnorm);
  CLI::App* deform = add("deform", "mass under random PL vertex perturbations", run_deform);
  deform->add_option("--trials", o.trials, "number of accepted perturbations");
  deform->add_option("--magnitude", o.magnitude, "perturbation radius");
  deform->add_option("--refine", o.refine, "barycentric refinements before perturbing");
  add("groupnorm", "subgroup norm and norm balls", run_groupnorm)->add_option("--lambda", o.lambda, "norm ball radius");
  CLI::App* demo = add("demo", "emit a catalog example", run_demo);
  demo->add_option("name", o.demo_name, "plane_disk, y_line, y_times_r, tetrahedral_cone, custom_net_cone")
      ->required();
  demo->add_option("--radius", o.radius, "truncation radius");
  demo->add_option("--refine", o.refine, "barycentric refinements");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    for (const Command& c : commands)
      if (c.app->parsed()) return c.run(o);
  } catch (const CheckFailure&) {
    return kExitCheckFailed;
  } catch (const InputError& e) {
    std::cerr << "polycal: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "polycal: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
