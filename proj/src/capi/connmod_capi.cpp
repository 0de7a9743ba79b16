#define CONNMOD_BUILDING
#include "connmod/connmod.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <random>
#include <string>

#include "acceptance.hpp"
#include "json_io.hpp"

using namespace connmod;

struct connmod_context {
  int cap = kDefaultContractionCap;
  std::string last_error;
};
struct connmod_jet {
  ConnectionJet value;
};
struct connmod_tuple {
  NormalTensorTuple value;
};
struct connmod_diffeo {
  DiffeoJet value;
};

namespace {

struct NullArgument {};

template <typename F> connmod_status guarded(connmod_context *ctx, F &&f) {
  if (!ctx)
    return CONNMOD_E_NULL_POINTER;
  ctx->last_error.clear();
  try {
    f();
    return CONNMOD_OK;
  } catch (const NullArgument &) {
    ctx->last_error = "null argument";
    return CONNMOD_E_NULL_POINTER;
  } catch (const Error &e) {
    ctx->last_error = e.what();
    return static_cast<connmod_status>(static_cast<int>(e.code()));
  } catch (const nlohmann::json::exception &e) {
    ctx->last_error = e.what();
    return CONNMOD_E_PARSE;
  } catch (const std::bad_alloc &) {
    ctx->last_error = "out of memory";
    return CONNMOD_E_RESOURCE_CAP;
  } catch (const std::exception &e) {
    ctx->last_error = e.what();
    return CONNMOD_E_UNKNOWN;
  }
}

void need(const void *p) {
  if (!p)
    throw NullArgument{};
}

char *dup_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const Json &j, char **out) {
  need(out);
  *out = dup_string(j.dump());
}

std::optional<int> parse_cap(const char *text) {
  try {
    std::size_t used = 0;
    int v = std::stoi(text, &used);
    if (used == std::strlen(text) && v >= 0)
      return v;
  } catch (const std::logic_error &) {
  }
  return std::nullopt;
}

} // namespace

extern "C" {

connmod_status connmod_context_create(connmod_context **out) {
  if (!out)
    return CONNMOD_E_NULL_POINTER;
  *out = nullptr;
  auto *ctx = new (std::nothrow) connmod_context();
  if (!ctx)
    return CONNMOD_E_RESOURCE_CAP;
  if (const char *env = std::getenv("CONNMOD_CAP_P"); env && *env) {
    auto cap = parse_cap(env);
    if (!cap) {
      delete ctx;
      return CONNMOD_E_INVALID_ARGUMENT;
    }
    ctx->cap = *cap;
  }
  *out = ctx;
  return CONNMOD_OK;
}

void connmod_context_destroy(connmod_context *ctx) { delete ctx; }

connmod_status connmod_context_set_cap(connmod_context *ctx, int cap) {
  return guarded(ctx, [&] {
    if (cap < 0)
      throw Error(ErrorCode::InvalidArgument, "cap must be non-negative");
    ctx->cap = cap;
  });
}

int connmod_context_cap(const connmod_context *ctx) { return ctx ? ctx->cap : -1; }

const char *connmod_last_error(const connmod_context *ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

const char *connmod_status_name(connmod_status s) {
  switch (s) {
  case CONNMOD_OK: return "ok";
  case CONNMOD_E_INVALID_ARGUMENT: return "invalid_argument";
  case CONNMOD_E_DIMENSION_MISMATCH: return "dimension_mismatch";
  case CONNMOD_E_ORDER_MISMATCH: return "order_mismatch";
  case CONNMOD_E_SINGULAR_LINEAR_PART: return "singular_linear_part";
  case CONNMOD_E_SYMMETRY_VIOLATION: return "symmetry_violation";
  case CONNMOD_E_INSUFFICIENT_ORDER: return "insufficient_order";
  case CONNMOD_E_UNBALANCED_VARIANCE: return "unbalanced_variance";
  case CONNMOD_E_RESOURCE_CAP: return "resource_cap";
  case CONNMOD_E_INTERNAL_MISMATCH: return "internal_mismatch";
  case CONNMOD_E_PARSE: return "parse_error";
  case CONNMOD_E_NULL_POINTER: return "null_pointer";
  case CONNMOD_E_UNKNOWN: return "unknown";
  }
  return "unknown";
}

void connmod_string_free(char *s) { std::free(s); }

connmod_status connmod_jet_from_json(connmod_context *ctx, const char *json, connmod_jet **out) {
  return guarded(ctx, [&] {
    need(json);
    need(out);
    *out = new connmod_jet{jet_from_json(parse_json(json))};
  });
}

connmod_status connmod_jet_to_json(connmod_context *ctx, const connmod_jet *jet, char **out) {
  return guarded(ctx, [&] {
    need(jet);
    emit(to_json(jet->value), out);
  });
}

void connmod_jet_destroy(connmod_jet *jet) { delete jet; }

connmod_status connmod_tuple_from_json(connmod_context *ctx, const char *json, connmod_tuple **out) {
  return guarded(ctx, [&] {
    need(json);
    need(out);
    *out = new connmod_tuple{tuple_from_json(parse_json(json))};
  });
}

connmod_status connmod_tuple_to_json(connmod_context *ctx, const connmod_tuple *t, char **out) {
  return guarded(ctx, [&] {
    need(t);
    emit(to_json(t->value), out);
  });
}

void connmod_tuple_destroy(connmod_tuple *t) { delete t; }

connmod_status connmod_diffeo_from_json(connmod_context *ctx, const char *json, connmod_diffeo **out) {
  return guarded(ctx, [&] {
    need(json);
    need(out);
    *out = new connmod_diffeo{diffeo_from_json(parse_json(json))};
  });
}

connmod_status connmod_diffeo_to_json(connmod_context *ctx, const connmod_diffeo *d, char **out) {
  return guarded(ctx, [&] {
    need(d);
    emit(to_json(d->value), out);
  });
}

void connmod_diffeo_destroy(connmod_diffeo *d) { delete d; }

connmod_status connmod_transform(connmod_context *ctx, const connmod_diffeo *tau, const connmod_jet *jet,
                                 connmod_jet **out) {
  return guarded(ctx, [&] {
    need(tau);
    need(jet);
    need(out);
    *out = new connmod_jet{transform(tau->value, jet->value)};
  });
}

connmod_status connmod_reduce(connmod_context *ctx, const connmod_jet *jet, connmod_tuple **out) {
  return guarded(ctx, [&] {
    need(jet);
    need(out);
    *out = new connmod_tuple{pi_r(jet->value)};
  });
}

connmod_status connmod_section(connmod_context *ctx, const connmod_tuple *t, connmod_jet **out) {
  return guarded(ctx, [&] {
    need(t);
    need(out);
    *out = new connmod_jet{section_s_r(t->value)};
  });
}

connmod_status connmod_equivalence(connmod_context *ctx, const connmod_jet *a, const connmod_jet *b, int *equivalent,
                                   connmod_diffeo **witness) {
  return guarded(ctx, [&] {
    need(a);
    need(b);
    need(equivalent);
    if (witness)
      *witness = nullptr;
    auto w = h_equivalence_witness(a->value, b->value);
    *equivalent = w ? 1 : 0;
    if (w && witness)
      *witness = new connmod_diffeo{std::move(*w)};
  });
}

connmod_status connmod_dims_json(connmod_context *ctx, int n, int m, int symmetric, char **out) {
  return guarded(ctx, [&] {
    if (n < 1 || m < 0)
      throw Error(ErrorCode::InvalidArgument, "dims needs n >= 1 and m >= 0");
    auto k = normal_kernel_rank(n, m, symmetric != 0);
    emit(Json{{"dim", dim_formula(n, m, symmetric != 0)},
              {"kernel_dim", k.kernel_dim()},
              {"domain_dim", k.domain_dim},
              {"image_rank", k.image_rank}},
         out);
  });
}

connmod_status connmod_invariants_json(connmod_context *ctx, int n, int r, int max_total, char **out) {
  return guarded(ctx, [&] {
    if (n < 1 || r < 0 || max_total < 0)
      throw Error(ErrorCode::InvalidArgument, "invariants needs n >= 1, r >= 0, max_total >= 0");
    Json profiles = Json::array();
    std::size_t total = 0, nonconstant = 0;
    for (const auto &p : enumerate_profiles_by_total(r, max_total)) {
      auto res = scalar_invariant_dimension(n, p);
      Json entry = to_json(res);
      entry["profile"] = to_json(p);
      profiles.push_back(entry);
      total += res.dim;
      if (!p.is_zero())
        nonconstant += res.dim;
    }
    emit(Json{{"profiles", profiles}, {"dim", total}, {"nonconstant_dim", nonconstant}}, out);
  });
}

connmod_status connmod_natural_json(connmod_context *ctx, int n, int r, int p, int q, int symmetric, const char *target,
                                    char **out) {
  return guarded(ctx, [&] {
    auto t = TargetSymmetry::parse(target ? target : "none", p, q);
    emit(to_json(natural_tensor_dimension(n, r, p, q, symmetric != 0, t, ctx->cap)), out);
  });
}

connmod_status connmod_isotropy_json(connmod_context *ctx, int n, int r, int symmetric, int samples, uint64_t seed,
                                     char **out) {
  return guarded(ctx, [&] {
    int i = generic_isotropy(n, r, symmetric != 0, samples, seed);
    Json rule = symmetric ? Json(isotropy_rule(n, r)) : Json(nullptr);
    emit(Json{{"isotropy", i}, {"isotropy_rule", rule}, {"evidence", "sampled"}}, out);
  });
}

connmod_status connmod_pair_isotropy_json(connmod_context *ctx, const char *pair_json, char **out) {
  return guarded(ctx, [&] {
    need(pair_json);
    Json j = parse_json(pair_json);
    if (!j.is_object() || !j.contains("T2") || !j.contains("w2"))
      throw Error(ErrorCode::ParseError, "pair needs fields 'T2' and 'w2'");
    emit(to_json(pair_isotropy(tensor_from_json(j["T2"]), tensor_from_json(j["w2"]))), out);
  });
}

connmod_status connmod_moduli_json(connmod_context *ctx, int n, int r, int symmetric, int samples, uint64_t seed,
                                   char **out) {
  return guarded(ctx, [&] { emit(to_json(moduli_report(n, r, symmetric != 0, samples, seed)), out); });
}

connmod_status connmod_poincare_json(connmod_context *ctx, int n, int r_max, int symmetric, int samples,
                                     uint64_t seed, char **out) {
  return guarded(ctx, [&] {
    emit(Json{{"coefficients", poincare_coefficients(n, r_max, symmetric != 0, samples, seed)}}, out);
  });
}

connmod_status connmod_check_dim2_json(connmod_context *ctx, int samples, uint64_t seed, char **out, int *passed) {
  return guarded(ctx, [&] {
    need(passed);
    if (samples < 1)
      throw Error(ErrorCode::InvalidArgument, "check-dim2 needs samples >= 1");
    auto basis = curvature_like_basis(2);
    RatMatrix m = ricci_matrix_dim2(basis);
    Rat det = determinant(m);
    bool ok = basis.size() == 4 && !is_zero(det);
    auto c1 = normal_basis(2, 1, true);
    Json dims = Json::array();
    for (int k = 0; k < samples; ++k) {
      std::seed_seq seq{seed, static_cast<std::uint64_t>(k)};
      std::mt19937_64 rng(seq);
      NormalTensor t = random_normal_tensor(c1, 2, 1, true, rng);
      auto split = ricci_split(c1_to_curv(t));
      auto iso = pair_isotropy(split.symmetric_part, split.antisymmetric_part);
      int direct = stabilizer_dimension({t.tensor()}, 2);
      ok = ok && iso.lie_dim >= 1 && direct == iso.lie_dim;
      dims.push_back(Json{{"lie_dim", iso.lie_dim}, {"label", isotropy_label_name(iso.label)}, {"direct", direct}});
    }
    *passed = ok ? 1 : 0;
    emit(Json{{"passed", ok},
              {"curvature_like_dim", basis.size()},
              {"ricci_matrix", to_json(m)},
              {"det", to_json(det)},
              {"isotropy", dims}},
         out);
  });
}

connmod_status connmod_selftest_json(connmod_context *ctx, char **out, int *passed) {
  return guarded(ctx, [&] {
    need(passed);
    Json results = Json::array();
    bool all = true;
    for (const auto &r : run_acceptance(ctx->cap)) {
      all = all && r.passed;
      results.push_back(Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    *passed = all ? 1 : 0;
    emit(Json{{"passed", all}, {"criteria", results}}, out);
  });
}

} // extern "C"
