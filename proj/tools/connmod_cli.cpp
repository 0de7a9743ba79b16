#include <connmod/connmod.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;

struct Failure {
  std::string code;
  std::string message;
};

struct Context {
  connmod_context *raw = nullptr;
  ~Context() { connmod_context_destroy(raw); }
};

struct OwnedString {
  char *s = nullptr;
  ~OwnedString() { connmod_string_free(s); }
};

void check(connmod_context *ctx, connmod_status st) {
  if (st != CONNMOD_OK)
    throw Failure{connmod_status_name(st), connmod_last_error(ctx)};
}

Json take_json(connmod_context *ctx, connmod_status st, OwnedString &s) {
  check(ctx, st);
  return Json::parse(s.s);
}

std::string read_input(const std::string &path) {
  if (path == "-")
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in)
    throw Failure{"invalid_argument", "cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename T, void (*Destroy)(T *)> struct Handle {
  T *p = nullptr;
  ~Handle() { Destroy(p); }
};
using JetHandle = Handle<connmod_jet, connmod_jet_destroy>;
using TupleHandle = Handle<connmod_tuple, connmod_tuple_destroy>;
using DiffeoHandle = Handle<connmod_diffeo, connmod_diffeo_destroy>;

void emit(const Json &config, const Json &result) {
  Json out{{"config", config}};
  for (auto it = result.begin(); it != result.end(); ++it)
    out[it.key()] = it.value();
  std::cout << out.dump(2) << '\n';
}

void emit_error(const Json &config, const std::string &code, const std::string &message) {
  Json out{{"config", config}, {"error", {{"code", code}, {"message", message}}}};
  std::cout << out.dump(2) << '\n';
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact jets of linear connections, normal tensors and their invariants"};
  app.require_subcommand(1);

  int n = 0, m = 0, r = 0, p = 0, q = 0, rmax = 0, max_total = 6, samples = 20, cap = -1;
  std::uint64_t seed = 20240601;
  bool symmetric = false;
  std::string input, input_b, target = "none", pair;

  auto *dims = app.add_subcommand("dims", "Dimension of the m-th normal space");
  dims->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  dims->add_option("--m", m)->required()->check(CLI::NonNegativeNumber);
  dims->add_flag("--symmetric", symmetric);

  auto *reduce = app.add_subcommand("reduce", "Normal tensors of a connection jet");
  reduce->add_option("--input", input, "jet JSON file, or - for stdin")->required();

  auto *section = app.add_subcommand("section", "Connection jet with the given normal tensors");
  section->add_option("--input", input, "tuple JSON file, or - for stdin")->required();

  auto *equiv = app.add_subcommand("equiv", "Equivalence of two jets under diffeomorphisms tangent to the identity");
  equiv->add_option("--a", input)->required();
  equiv->add_option("--b", input_b)->required();

  auto *invariants = app.add_subcommand("invariants", "Scalar invariants per degree profile");
  invariants->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  invariants->add_option("--r", r)->required()->check(CLI::NonNegativeNumber);
  invariants->add_option("--max-total", max_total)->check(CLI::NonNegativeNumber);

  auto *natural = app.add_subcommand("natural", "Dimension of natural tensors of type (p, q)");
  natural->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  natural->add_option("--r", r)->required()->check(CLI::NonNegativeNumber);
  natural->add_option("--p", p)->required()->check(CLI::NonNegativeNumber);
  natural->add_option("--q", q)->required()->check(CLI::NonNegativeNumber);
  natural->add_flag("--symmetric", symmetric);
  natural->add_option("--target", target, "none | two-form-endo | antisym:i,j,.. | sym:i,j,..");
  natural->add_option("--cap", cap, "contraction cap on p")->check(CLI::NonNegativeNumber);

  auto *isotropy = app.add_subcommand("isotropy", "Sampled generic isotropy, or the isotropy of a pair (T2, w2)");
  isotropy->add_option("--n", n)->check(CLI::PositiveNumber);
  isotropy->add_option("--r", r)->check(CLI::NonNegativeNumber);
  isotropy->add_flag("--symmetric", symmetric);
  isotropy->add_option("--samples", samples)->check(CLI::PositiveNumber);
  isotropy->add_option("--seed", seed);
  isotropy->add_option("--pair", pair, "JSON file {\"T2\": tensor, \"w2\": tensor}");

  auto *moduli = app.add_subcommand("moduli", "Generic dimension of the moduli space");
  moduli->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  moduli->add_option("--r", r)->required()->check(CLI::NonNegativeNumber);
  moduli->add_flag("--symmetric", symmetric);
  moduli->add_option("--samples", samples)->check(CLI::PositiveNumber);
  moduli->add_option("--seed", seed);

  auto *poincare = app.add_subcommand("poincare", "Generic dimensions for r = 0..rmax");
  poincare->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  poincare->add_option("--rmax", rmax)->required()->check(CLI::NonNegativeNumber);
  poincare->add_flag("--symmetric", symmetric);
  poincare->add_option("--samples", samples)->check(CLI::PositiveNumber);
  poincare->add_option("--seed", seed);

  auto *dim2 = app.add_subcommand("check-dim2", "Ricci isomorphism and isotropy in dimension two");
  dim2->add_option("--samples", samples)->check(CLI::PositiveNumber);
  dim2->add_option("--seed", seed);

  auto *selftest = app.add_subcommand("selftest", "Run every acceptance check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    emit_error(Json{{"argv", std::vector<std::string>(argv + 1, argv + argc)}}, "invalid_argument", e.what());
    return kExitInvalid;
  }

  CLI::App *cmd = app.get_subcommands().front();
  Json config{{"command", cmd->get_name()}};
  Context ctx;
  try {
    check(nullptr, connmod_context_create(&ctx.raw));
  } catch (const Failure &) {
    emit_error(config, "invalid_argument", "CONNMOD_CAP_P must be a non-negative integer");
    return kExitInvalid;
  }
  connmod_context *c = ctx.raw;

  try {
    if (cap >= 0)
      check(c, connmod_context_set_cap(c, cap));
    OwnedString s;
    if (cmd == dims) {
      config.update(Json{{"n", n}, {"m", m}, {"symmetric", symmetric}});
      emit(config, take_json(c, connmod_dims_json(c, n, m, symmetric, &s.s), s));
    } else if (cmd == reduce) {
      config["input"] = input;
      JetHandle jet;
      TupleHandle tuple;
      check(c, connmod_jet_from_json(c, read_input(input).c_str(), &jet.p));
      check(c, connmod_reduce(c, jet.p, &tuple.p));
      emit(config, Json{{"tuple", take_json(c, connmod_tuple_to_json(c, tuple.p, &s.s), s)}});
    } else if (cmd == section) {
      config["input"] = input;
      TupleHandle tuple;
      JetHandle jet;
      check(c, connmod_tuple_from_json(c, read_input(input).c_str(), &tuple.p));
      check(c, connmod_section(c, tuple.p, &jet.p));
      emit(config, Json{{"jet", take_json(c, connmod_jet_to_json(c, jet.p, &s.s), s)}});
    } else if (cmd == equiv) {
      config.update(Json{{"a", input}, {"b", input_b}});
      JetHandle a, b;
      DiffeoHandle w;
      int eq = 0;
      check(c, connmod_jet_from_json(c, read_input(input).c_str(), &a.p));
      check(c, connmod_jet_from_json(c, read_input(input_b).c_str(), &b.p));
      check(c, connmod_equivalence(c, a.p, b.p, &eq, &w.p));
      Json witness = eq ? take_json(c, connmod_diffeo_to_json(c, w.p, &s.s), s) : Json(nullptr);
      emit(config, Json{{"equivalent", eq != 0}, {"witness", witness}});
    } else if (cmd == invariants) {
      config.update(Json{{"n", n}, {"r", r}, {"max_total", max_total}});
      emit(config, take_json(c, connmod_invariants_json(c, n, r, max_total, &s.s), s));
    } else if (cmd == natural) {
      config.update(Json{{"n", n},
                         {"r", r},
                         {"p", p},
                         {"q", q},
                         {"symmetric", symmetric},
                         {"target", target},
                         {"cap", connmod_context_cap(c)}});
      emit(config, take_json(c, connmod_natural_json(c, n, r, p, q, symmetric, target.c_str(), &s.s), s));
    } else if (cmd == isotropy) {
      if (!pair.empty()) {
        config["pair"] = pair;
        emit(config, take_json(c, connmod_pair_isotropy_json(c, read_input(pair).c_str(), &s.s), s));
      } else {
        if (isotropy->count("--n") == 0 || isotropy->count("--r") == 0)
          throw Failure{"invalid_argument", "isotropy needs --n and --r, or --pair"};
        config.update(Json{{"n", n}, {"r", r}, {"symmetric", symmetric}, {"samples", samples}, {"seed", seed}});
        emit(config, take_json(c, connmod_isotropy_json(c, n, r, symmetric, samples, seed, &s.s), s));
      }
    } else if (cmd == moduli) {
      config.update(Json{{"n", n}, {"r", r}, {"symmetric", symmetric}, {"samples", samples}, {"seed", seed}});
      emit(config, take_json(c, connmod_moduli_json(c, n, r, symmetric, samples, seed, &s.s), s));
    } else if (cmd == poincare) {
      config.update(Json{{"n", n}, {"rmax", rmax}, {"symmetric", symmetric}, {"samples", samples}, {"seed", seed}});
      emit(config, take_json(c, connmod_poincare_json(c, n, rmax, symmetric, samples, seed, &s.s), s));
    } else if (cmd == dim2) {
      if (dim2->count("--samples") == 0)
        samples = 10;
      config.update(Json{{"samples", samples}, {"seed", seed}});
      int passed = 0;
      emit(config, take_json(c, connmod_check_dim2_json(c, samples, seed, &s.s, &passed), s));
      return passed ? 0 : kExitFailed;
    } else if (cmd == selftest) {
      config["cap"] = connmod_context_cap(c);
      int passed = 0;
      emit(config, take_json(c, connmod_selftest_json(c, &s.s, &passed), s));
      return passed ? 0 : kExitFailed;
    }
  } catch (const Failure &f) {
    emit_error(config, f.code, f.message);
    return kExitInvalid;
  }
  return 0;
}
