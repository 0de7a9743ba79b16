#include "json_io.hpp"

#include <sstream>

namespace connmod {

namespace {

[[noreturn]] void bad(const std::string &what) { throw Error(ErrorCode::ParseError, what); }

const Json &field(const Json &j, const char *key) {
  if (!j.is_object())
    bad(std::string("expected an object with field '") + key + "'");
  auto it = j.find(key);
  if (it == j.end())
    bad(std::string("missing field '") + key + "'");
  return *it;
}

int int_field(const Json &j, const char *key, int lo) {
  const Json &v = field(j, key);
  if (!v.is_number_integer())
    bad(std::string("field '") + key + "' must be an integer");
  long long x = v.get<long long>();
  if (x < lo || x > 64)
    throw Error(ErrorCode::InvalidArgument, std::string("field '") + key + "' out of range");
  return static_cast<int>(x);
}

bool bool_field(const Json &j, const char *key) {
  const Json &v = field(j, key);
  if (!v.is_boolean())
    bad(std::string("field '") + key + "' must be a boolean");
  return v.get<bool>();
}

const Json &array_field(const Json &j, const char *key) {
  const Json &v = field(j, key);
  if (!v.is_array())
    bad(std::string("field '") + key + "' must be an array");
  return v;
}

std::vector<int> parse_key(const std::string &key, int n) {
  std::vector<int> out;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(part, &used);
      if (used != part.size())
        bad("bad gamma key '" + key + "'");
      out.push_back(v);
    } catch (const std::logic_error &) {
      bad("bad gamma key '" + key + "'");
    }
  }
  if (out.size() != 3)
    bad("gamma key '" + key + "' must have three indices");
  for (int v : out)
    if (v < 0 || v >= n)
      throw Error(ErrorCode::DimensionMismatch, "gamma key '" + key + "' out of range");
  return out;
}

} // namespace

Json to_json(const Rat &x) { return rat_to_string(x); }

Rat rat_from_json(const Json &j) {
  if (j.is_string())
    return rat_from_string(j.get<std::string>());
  if (j.is_number_integer())
    return Rat(Int(std::to_string(j.get<long long>())));
  bad("rational must be a \"p/q\" string or an integer");
}

Json to_json(const TruncatedSeries &s) {
  Json out = Json::array();
  for (const auto &[alpha, c] : s.terms())
    out.push_back(Json{{"idx", alpha.exponents}, {"c", to_json(c)}});
  return out;
}

TruncatedSeries series_from_json(const Json &j, int n, int order) {
  if (!j.is_array())
    bad("series must be an array of terms");
  TruncatedSeries s(n, order);
  for (const auto &term : j) {
    const Json &idx = array_field(term, "idx");
    if (static_cast<int>(idx.size()) != n)
      throw Error(ErrorCode::DimensionMismatch, "series term index length differs from n");
    std::vector<int> e;
    for (const auto &v : idx) {
      if (!v.is_number_integer() || v.get<long long>() < 0)
        bad("series exponents must be non-negative integers");
      e.push_back(v.get<int>());
    }
    MultiIndex alpha(std::move(e));
    if (alpha.degree() > order)
      throw Error(ErrorCode::OrderMismatch, "series term exceeds the truncation order");
    s.add_term(alpha, rat_from_json(field(term, "c")));
  }
  return s;
}

Json to_json(const DenseTensor &t) {
  Json sig = Json::array();
  for (auto v : t.signature())
    sig.push_back(v == Variance::Contra ? "contra" : "cov");
  Json entries = Json::array();
  for (const auto &x : t.entries())
    entries.push_back(to_json(x));
  return Json{{"n", t.dimension()}, {"signature", sig}, {"entries", entries}};
}

DenseTensor tensor_from_json(const Json &j) {
  int n = int_field(j, "n", 1);
  std::vector<Variance> sig;
  for (const auto &v : array_field(j, "signature")) {
    if (v == "contra")
      sig.push_back(Variance::Contra);
    else if (v == "cov")
      sig.push_back(Variance::Cov);
    else
      bad("signature entries must be \"contra\" or \"cov\"");
  }
  DenseTensor t(n, sig);
  const Json &entries = array_field(j, "entries");
  if (entries.size() != t.size())
    throw Error(ErrorCode::DimensionMismatch, "tensor has " + std::to_string(entries.size()) + " entries, expected " +
                                                  std::to_string(t.size()));
  for (std::size_t f = 0; f < t.size(); ++f)
    t.entries()[f] = rat_from_json(entries[f]);
  return t;
}

Json to_json(const ConnectionJet &jet) {
  const int n = jet.dimension();
  Json gamma = Json::object();
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        gamma[std::to_string(k) + "," + std::to_string(i) + "," + std::to_string(j)] =
            to_json(jet.christoffel(k, i, j));
  return Json{{"n", n}, {"r", jet.order()}, {"symmetric", jet.symmetric()}, {"gamma", gamma}};
}

ConnectionJet jet_from_json(const Json &j) {
  int n = int_field(j, "n", 1);
  int r = int_field(j, "r", 0);
  bool symmetric = bool_field(j, "symmetric");
  const Json &gamma = field(j, "gamma");
  if (!gamma.is_object())
    bad("gamma must be an object keyed \"k,i,j\"");
  std::vector<TruncatedSeries> g(static_cast<std::size_t>(n) * n * n, TruncatedSeries(n, r));
  std::vector<bool> given(g.size(), false);
  for (auto it = gamma.begin(); it != gamma.end(); ++it) {
    auto key = parse_key(it.key(), n);
    std::size_t pos = (static_cast<std::size_t>(key[0]) * n + key[1]) * n + key[2];
    g[pos] = series_from_json(it.value(), n, r);
    given[pos] = true;
  }
  if (symmetric)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int l = i + 1; l < n; ++l) {
          std::size_t a = (static_cast<std::size_t>(k) * n + i) * n + l;
          std::size_t b = (static_cast<std::size_t>(k) * n + l) * n + i;
          if (given[a] && !given[b])
            g[b] = g[a];
          else if (given[b] && !given[a])
            g[a] = g[b];
        }
  return ConnectionJet(n, r, symmetric, std::move(g));
}

Json to_json(const NormalTensorTuple &t) {
  Json ts = Json::array();
  for (const auto &x : t.tensors())
    ts.push_back(to_json(x.tensor()));
  return Json{{"n", t.dimension()}, {"order", t.order()}, {"symmetric", t.symmetric()}, {"tensors", ts}};
}

NormalTensorTuple tuple_from_json(const Json &j) {
  int n = int_field(j, "n", 1);
  int r = int_field(j, "order", 0);
  bool symmetric = bool_field(j, "symmetric");
  const Json &ts = array_field(j, "tensors");
  if (static_cast<int>(ts.size()) != r + 1)
    throw Error(ErrorCode::OrderMismatch, "tuple needs order + 1 tensors");
  std::vector<NormalTensor> out;
  for (int m = 0; m <= r; ++m) {
    DenseTensor t = tensor_from_json(ts[static_cast<std::size_t>(m)]);
    if (t.dimension() != n)
      throw Error(ErrorCode::DimensionMismatch, "tuple tensor dimension differs from n");
    if (t.signature() != DenseTensor::mixed(n, m + 2).signature())
      throw Error(ErrorCode::DimensionMismatch, "tensor " + std::to_string(m) + " must have signature (contra, cov x " +
                                                    std::to_string(m + 2) + ")");
    out.emplace_back(m, symmetric, std::move(t));
  }
  return NormalTensorTuple(n, r, symmetric, std::move(out));
}

Json to_json(const DiffeoJet &tau) {
  Json cs = Json::array();
  for (const auto &c : tau.components())
    cs.push_back(to_json(c));
  return Json{{"n", tau.dimension()}, {"order", tau.order()}, {"components", cs}};
}

DiffeoJet diffeo_from_json(const Json &j) {
  int n = int_field(j, "n", 1);
  int order = int_field(j, "order", 1);
  const Json &cs = array_field(j, "components");
  if (static_cast<int>(cs.size()) != n)
    throw Error(ErrorCode::DimensionMismatch, "diffeo needs n components");
  std::vector<TruncatedSeries> comps;
  for (const auto &c : cs)
    comps.push_back(series_from_json(c, n, order));
  return DiffeoJet(std::move(comps));
}

Json to_json(const RatMatrix &m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const DegreeProfile &p) { return Json(p.d); }

Json to_json(const ScalarInvariantResult &r) {
  return Json{{"dim", r.dim}, {"p_neq_q", r.p_neq_q}, {"homothety_weight", r.homothety_weight}, {"reason", r.reason}};
}

Json to_json(const NaturalTensorReport &r) {
  Json profiles = Json::array();
  for (const auto &pc : r.profiles)
    profiles.push_back(Json{{"profile", to_json(pc.profile)}, {"dim", pc.dim}, {"reason", pc.reason}});
  return Json{{"n", r.n},          {"r", r.r},           {"p", r.p},           {"q", r.q},
              {"symmetric", r.symmetric}, {"target", r.target}, {"profiles", profiles}, {"dim", r.total}};
}

Json to_json(const PairIsotropy &p) {
  return Json{{"lie_dim", p.lie_dim}, {"label", isotropy_label_name(p.label)}};
}

Json to_json(const ModuliReport &r) {
  Json rule = r.rule_isotropy < 0 ? Json(nullptr) : Json(r.rule_isotropy);
  return Json{{"n", r.n},
              {"r", r.r},
              {"symmetric", r.symmetric},
              {"samples", r.samples},
              {"seed", r.seed},
              {"normal_dims", r.normal_dims},
              {"isotropy", r.sampled_isotropy},
              {"isotropy_rule", rule},
              {"generic_dimension", r.generic_dimension},
              {"poincare", r.poincare}};
}

Json parse_json(const std::string &text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error &e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

} // namespace connmod
