#include "tensor.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <unordered_map>

namespace connmod {

namespace {

std::size_t ipow(int n, int k) {
  std::size_t out = 1;
  for (int i = 0; i < k; ++i)
    out *= static_cast<std::size_t>(n);
  return out;
}

void check_slots(const DenseTensor &t, std::span<const int> slots) {
  std::vector<int> seen;
  for (int s : slots) {
    if (s < 0 || s >= t.slots())
      throw Error(ErrorCode::InvalidArgument, "slot " + std::to_string(s) + " out of range");
    if (std::find(seen.begin(), seen.end(), s) != seen.end())
      throw Error(ErrorCode::InvalidArgument, "slot " + std::to_string(s) + " named twice");
    seen.push_back(s);
  }
  for (int s : slots)
    if (t.signature()[s] != t.signature()[slots.front()])
      throw Error(ErrorCode::InvalidArgument, "slots of different variance cannot be permuted");
}

// Flat index of the tuple with the named slot values sorted ascending.
std::size_t canonical_flat(const DenseTensor &t, std::vector<int> &idx, std::span<const int> sorted_slots,
                           std::vector<int> &scratch) {
  scratch.clear();
  for (int s : sorted_slots)
    scratch.push_back(idx[s]);
  std::sort(scratch.begin(), scratch.end());
  for (std::size_t k = 0; k < sorted_slots.size(); ++k)
    idx[sorted_slots[k]] = scratch[k];
  return t.flat(idx);
}

int permutation_sign(const std::vector<int> &perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j])
        ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

} // namespace

DenseTensor::DenseTensor(int n, std::vector<Variance> signature)
    : n_(n), signature_(std::move(signature)) {
  if (n < 1)
    throw Error(ErrorCode::InvalidArgument, "tensor dimension must be positive");
  entries_.assign(ipow(n_, slots()), Rat(0));
}

DenseTensor::DenseTensor(int n, std::vector<Variance> signature, std::vector<Rat> entries)
    : n_(n), signature_(std::move(signature)), entries_(std::move(entries)) {
  if (n < 1)
    throw Error(ErrorCode::InvalidArgument, "tensor dimension must be positive");
  if (entries_.size() != ipow(n_, slots()))
    throw Error(ErrorCode::DimensionMismatch, "tensor entry count " + std::to_string(entries_.size()) +
                                                  " does not match n^slots = " +
                                                  std::to_string(ipow(n_, slots())));
}

DenseTensor DenseTensor::mixed(int n, int covariant_slots) {
  std::vector<Variance> sig{Variance::Contra};
  sig.insert(sig.end(), static_cast<std::size_t>(covariant_slots), Variance::Cov);
  return DenseTensor(n, std::move(sig));
}

std::size_t DenseTensor::flat(std::span<const int> index) const {
  if (static_cast<int>(index.size()) != slots())
    throw Error(ErrorCode::DimensionMismatch, "index length does not match slot count");
  std::size_t f = 0;
  for (int v : index) {
    if (v < 0 || v >= n_)
      throw Error(ErrorCode::InvalidArgument, "tensor index out of range");
    f = f * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }
  return f;
}

std::vector<int> DenseTensor::unflat(std::size_t f) const {
  std::vector<int> idx(static_cast<std::size_t>(slots()));
  for (int s = slots() - 1; s >= 0; --s) {
    idx[s] = static_cast<int>(f % static_cast<std::size_t>(n_));
    f /= static_cast<std::size_t>(n_);
  }
  return idx;
}

bool DenseTensor::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rat &x) { return connmod::is_zero(x); });
}

bool DenseTensor::same_shape(const DenseTensor &other) const {
  return n_ == other.n_ && signature_ == other.signature_;
}

DenseTensor &DenseTensor::operator+=(const DenseTensor &b) {
  if (!same_shape(b))
    throw Error(ErrorCode::DimensionMismatch, "tensor shapes differ");
  for (std::size_t i = 0; i < entries_.size(); ++i)
    entries_[i] += b.entries_[i];
  return *this;
}

DenseTensor &DenseTensor::operator-=(const DenseTensor &b) {
  if (!same_shape(b))
    throw Error(ErrorCode::DimensionMismatch, "tensor shapes differ");
  for (std::size_t i = 0; i < entries_.size(); ++i)
    entries_[i] -= b.entries_[i];
  return *this;
}

DenseTensor &DenseTensor::operator*=(const Rat &c) {
  for (auto &x : entries_)
    x *= c;
  return *this;
}

DenseTensor operator+(DenseTensor a, const DenseTensor &b) { return a += b; }
DenseTensor operator-(DenseTensor a, const DenseTensor &b) { return a -= b; }
DenseTensor operator*(const Rat &c, DenseTensor a) { return a *= c; }

std::vector<int> slot_range(int first, int count) {
  std::vector<int> out(static_cast<std::size_t>(count));
  std::iota(out.begin(), out.end(), first);
  return out;
}

DenseTensor symmetrize(const DenseTensor &t, std::span<const int> slots) {
  check_slots(t, slots);
  for (int s : slots)
    if (t.signature()[s] != Variance::Cov)
      throw Error(ErrorCode::InvalidArgument, "symmetrize: slot " + std::to_string(s) + " is not covariant");
  if (slots.size() < 2)
    return t;
  std::vector<int> sorted(slots.begin(), slots.end());
  std::sort(sorted.begin(), sorted.end());
  // Each permutation image of a tuple is hit equally often, so averaging over
  // S_k equals averaging over the distinct rearrangements.
  std::vector<Rat> sums(t.size());
  std::vector<std::uint32_t> counts(t.size(), 0);
  std::vector<std::size_t> canon(t.size());
  std::vector<int> scratch;
  for (std::size_t f = 0; f < t.size(); ++f) {
    auto idx = t.unflat(f);
    std::size_t c = canonical_flat(t, idx, sorted, scratch);
    canon[f] = c;
    ++counts[c];
    if (!is_zero(t.entries()[f]))
      sums[c] += t.entries()[f];
  }
  DenseTensor out(t.dimension(), t.signature());
  for (std::size_t f = 0; f < t.size(); ++f) {
    std::size_t c = canon[f];
    if (!is_zero(sums[c]))
      out.entries()[f] = sums[c] / counts[c];
  }
  return out;
}

DenseTensor antisymmetrize(const DenseTensor &t, std::span<const int> slots) {
  check_slots(t, slots);
  const std::size_t k = slots.size();
  if (k < 2)
    return t;
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do
    perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  const Rat norm(1, static_cast<unsigned long>(perms.size()));

  DenseTensor out(t.dimension(), t.signature());
  for (std::size_t f = 0; f < t.size(); ++f) {
    auto idx = t.unflat(f);
    std::vector<int> vals;
    for (int s : slots)
      vals.push_back(idx[s]);
    Rat acc = 0;
    for (const auto &p : perms) {
      auto j = idx;
      for (std::size_t a = 0; a < k; ++a)
        j[slots[a]] = vals[p[a]];
      const Rat &x = t.at(j);
      if (is_zero(x))
        continue;
      if (permutation_sign(p) > 0)
        acc += x;
      else
        acc -= x;
    }
    out.entries()[f] = acc * norm;
  }
  return out;
}

bool is_symmetric_in(const DenseTensor &t, std::span<const int> slots) {
  check_slots(t, slots);
  for (std::size_t a = 0; a + 1 < slots.size(); ++a) {
    for (std::size_t f = 0; f < t.size(); ++f) {
      auto idx = t.unflat(f);
      std::swap(idx[slots[a]], idx[slots[a + 1]]);
      if (t.at(idx) != t.entries()[f])
        return false;
    }
  }
  return true;
}

bool is_antisymmetric_in(const DenseTensor &t, int slot_a, int slot_b) {
  std::array<int, 2> s{slot_a, slot_b};
  check_slots(t, s);
  for (std::size_t f = 0; f < t.size(); ++f) {
    auto idx = t.unflat(f);
    std::swap(idx[slot_a], idx[slot_b]);
    if (t.at(idx) != -t.entries()[f])
      return false;
  }
  return true;
}

bool symmetrization_vanishes(const DenseTensor &t, std::span<const int> slots) {
  check_slots(t, slots);
  std::vector<int> sorted(slots.begin(), slots.end());
  std::sort(sorted.begin(), sorted.end());
  std::unordered_map<std::size_t, Rat> sums;
  std::vector<int> scratch;
  for (std::size_t f = 0; f < t.size(); ++f) {
    if (is_zero(t.entries()[f]))
      continue;
    auto idx = t.unflat(f);
    sums[canonical_flat(t, idx, sorted, scratch)] += t.entries()[f];
  }
  return std::all_of(sums.begin(), sums.end(), [](const auto &kv) { return is_zero(kv.second); });
}

// --- normal tensors -------------------------------------------------------

bool NormalTensor::satisfies_invariants(const DenseTensor &t, int order, bool symmetric_connection) {
  if (order < 0 || t.slots() != order + 3)
    return false;
  if (t.signature() != DenseTensor::mixed(t.dimension(), order + 2).signature())
    return false;
  if (order >= 2 && !is_symmetric_in(t, slot_range(3, order)))
    return false;
  if (symmetric_connection && !is_symmetric_in(t, slot_range(1, 2)))
    return false;
  return symmetrization_vanishes(t, slot_range(1, order + 2));
}

NormalTensor::NormalTensor(int order, bool symmetric_connection, DenseTensor tensor)
    : order_(order), symmetric_(symmetric_connection), tensor_(std::move(tensor)) {
  if (!satisfies_invariants(tensor_, order_, symmetric_))
    throw Error(ErrorCode::SymmetryViolation,
                "tensor is not a normal tensor of order " + std::to_string(order_) +
                    (symmetric_ ? " (symmetric variant)" : ""));
}

NormalTensor NormalTensor::zero(int n, int order, bool symmetric_connection) {
  return NormalTensor(order, symmetric_connection, DenseTensor::mixed(n, order + 2));
}

NormalTensor project_normal(const DenseTensor &t, int m, bool symmetric) {
  if (m < 0 || t.signature() != DenseTensor::mixed(t.dimension(), m + 2).signature())
    throw Error(ErrorCode::InvalidArgument, "project_normal: expected signature (contra, cov x " +
                                                std::to_string(m + 2) + ")");
  if (m >= 2 && !is_symmetric_in(t, slot_range(3, m)))
    throw Error(ErrorCode::SymmetryViolation, "project_normal: input not symmetric in the last m slots");
  if (symmetric && !is_symmetric_in(t, slot_range(1, 2)))
    throw Error(ErrorCode::SymmetryViolation, "project_normal: input not symmetric in the first two covariant slots");
  auto cov = slot_range(1, m + 2);
  return NormalTensor(m, symmetric, t - symmetrize(t, cov));
}

namespace {

// Basis of the tensors with the partial symmetries of C_m before the
// vanishing-symmetrization condition: one element per orbit, entries 1 on
// every distinct rearrangement.
struct DomainElement {
  std::vector<std::size_t> flats;
  std::size_t image_key;
};

std::vector<DomainElement> normal_domain(int n, int m, bool symmetric) {
  DenseTensor shape = DenseTensor::mixed(n, m + 2);
  std::vector<DomainElement> out;
  std::vector<int> ks(static_cast<std::size_t>(m), 0);
  auto next_multiset = [&](std::vector<int> &v) {
    // non-decreasing sequences in lexicographic order
    int pos = static_cast<int>(v.size()) - 1;
    while (pos >= 0 && v[pos] == n - 1)
      --pos;
    if (pos < 0)
      return false;
    ++v[pos];
    for (std::size_t q = static_cast<std::size_t>(pos) + 1; q < v.size(); ++q)
      v[q] = v[pos];
    return true;
  };
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i)
      for (int j = symmetric ? i : 0; j < n; ++j) {
        std::fill(ks.begin(), ks.end(), 0);
        do {
          DomainElement e;
          std::vector<std::pair<int, int>> pairs{{i, j}};
          if (symmetric && i != j)
            pairs.emplace_back(j, i);
          for (auto [a, b] : pairs) {
            auto perm = ks;
            do {
              std::vector<int> idx{l, a, b};
              idx.insert(idx.end(), perm.begin(), perm.end());
              e.flats.push_back(shape.flat(idx));
            } while (std::next_permutation(perm.begin(), perm.end()));
          }
          std::vector<int> all{i, j};
          all.insert(all.end(), ks.begin(), ks.end());
          std::sort(all.begin(), all.end());
          std::vector<int> key{l};
          key.insert(key.end(), all.begin(), all.end());
          e.image_key = shape.flat(key);
          out.push_back(std::move(e));
        } while (m > 0 && next_multiset(ks));
      }
  return out;
}

IntegerRowEchelon symmetrization_echelon(const std::vector<DomainElement> &domain) {
  // Row per image coordinate (l, multiset of covariant indices): the sum of
  // the entries in that orbit, which vanishes iff the symmetrization does.
  std::unordered_map<std::size_t, SparseRatRow> rows;
  std::vector<std::size_t> order;
  for (std::size_t c = 0; c < domain.size(); ++c) {
    auto [it, inserted] = rows.try_emplace(domain[c].image_key);
    if (inserted)
      order.push_back(domain[c].image_key);
    it->second.emplace_back(c, Rat(static_cast<long>(domain[c].flats.size())));
  }
  std::sort(order.begin(), order.end());
  IntegerRowEchelon ech(domain.size());
  for (std::size_t key : order)
    ech.add(rows[key]);
  return ech;
}

} // namespace

KernelRank normal_kernel_rank(int n, int m, bool symmetric) {
  if (n < 1 || m < 0)
    throw Error(ErrorCode::InvalidArgument, "normal_kernel_rank: need n >= 1, m >= 0");
  auto domain = normal_domain(n, m, symmetric);
  auto ech = symmetrization_echelon(domain);
  return {domain.size(), ech.rank()};
}

std::vector<NormalTensor> normal_basis(int n, int m, bool symmetric) {
  if (n < 1 || m < 0)
    throw Error(ErrorCode::InvalidArgument, "normal_basis: need n >= 1, m >= 0");
  auto domain = normal_domain(n, m, symmetric);
  auto ech = symmetrization_echelon(domain);
  std::vector<NormalTensor> out;
  for (const auto &v : ech.kernel()) {
    DenseTensor t = DenseTensor::mixed(n, m + 2);
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (is_zero(v[c]))
        continue;
      for (std::size_t f : domain[c].flats)
        t.entries()[f] += v[c];
    }
    out.emplace_back(m, symmetric, std::move(t));
  }
  return out;
}

long long dim_formula(int n, int m, bool symmetric) {
  if (n < 1 || m < 0)
    throw Error(ErrorCode::InvalidArgument, "dim_formula: need n >= 1, m >= 0");
  const unsigned long un = static_cast<unsigned long>(n), um = static_cast<unsigned long>(m);
  Int pair_dim = symmetric ? Int(un * (un + 1) / 2) : Int(un * un);
  Int d = Int(un) * pair_dim * binomial(un + um - 1, um) - Int(un) * binomial(un + um + 1, um + 2);
  return d.get_si();
}

NormalTensor random_normal_tensor(const std::vector<NormalTensor> &basis, int n, int m, bool symmetric,
                                  std::mt19937_64 &rng, int lo, int hi) {
  std::uniform_int_distribution<int> coeff(lo, hi);
  DenseTensor t = DenseTensor::mixed(n, m + 2);
  for (const auto &b : basis) {
    int c = coeff(rng);
    if (c != 0)
      t += Rat(c) * b.tensor();
  }
  return NormalTensor(m, symmetric, std::move(t));
}

// --- GL_n action ----------------------------------------------------------

GlElement::GlElement(RatMatrix g) : matrix_(std::move(g)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0)
    throw Error(ErrorCode::DimensionMismatch, "GL element must be a non-empty square matrix");
  auto inv = inverse(matrix_);
  if (!inv)
    throw Error(ErrorCode::SingularLinearPart, "GL element must be invertible");
  inverse_ = std::move(*inv);
}

GlElement GlElement::scalar(int n, const Rat &lambda) {
  RatMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    m(i, i) = lambda;
  return GlElement(std::move(m));
}

GlElement random_gl(int n, std::mt19937_64 &rng, int lo, int hi) {
  std::uniform_int_distribution<int> entry(lo, hi);
  for (;;) {
    RatMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m(i, j) = entry(rng);
    if (!is_zero(determinant(m)))
      return GlElement(std::move(m));
  }
}

DenseTensor apply_on_slot(const DenseTensor &t, int slot, const RatMatrix &m) {
  const int n = t.dimension();
  const std::size_t stride = ipow(n, t.slots() - 1 - slot);
  DenseTensor out(n, t.signature());
  for (std::size_t f = 0; f < t.size(); ++f) {
    const Rat &x = t.entries()[f];
    if (is_zero(x))
      continue;
    const int c = static_cast<int>((f / stride) % static_cast<std::size_t>(n));
    const std::size_t base = f - static_cast<std::size_t>(c) * stride;
    for (int k = 0; k < n; ++k) {
      const Rat &coef = m(static_cast<std::size_t>(k), static_cast<std::size_t>(c));
      if (!is_zero(coef))
        out.entries()[base + static_cast<std::size_t>(k) * stride] += coef * x;
    }
  }
  return out;
}

DenseTensor gl_act(const GlElement &g, const DenseTensor &t) {
  if (g.dimension() != t.dimension())
    throw Error(ErrorCode::DimensionMismatch, "gl_act: dimension mismatch");
  const RatMatrix cov = transpose(g.inverse_matrix());
  DenseTensor out = t;
  for (int s = 0; s < t.slots(); ++s)
    out = apply_on_slot(out, s, t.signature()[s] == Variance::Contra ? g.matrix() : cov);
  return out;
}

NormalTensor gl_act(const GlElement &g, const NormalTensor &t) {
  return NormalTensor(t.order(), t.symmetric_connection(), gl_act(g, t.tensor()));
}

DenseTensor gl_infinitesimal_act(const RatMatrix &a, const DenseTensor &t) {
  if (a.rows() != static_cast<std::size_t>(t.dimension()) || a.cols() != a.rows())
    throw Error(ErrorCode::DimensionMismatch, "gl_infinitesimal_act: dimension mismatch");
  RatMatrix minus_at = transpose(a);
  for (std::size_t i = 0; i < minus_at.rows(); ++i)
    for (std::size_t j = 0; j < minus_at.cols(); ++j)
      minus_at(i, j) = -minus_at(i, j);
  DenseTensor out(t.dimension(), t.signature());
  for (int s = 0; s < t.slots(); ++s)
    out += apply_on_slot(t, s, t.signature()[s] == Variance::Contra ? a : minus_at);
  return out;
}

// --- sparse ----------------------------------------------------------------

SparseTensor SparseTensor::from_dense(const DenseTensor &t) {
  SparseTensor s;
  s.n = t.dimension();
  s.signature = t.signature();
  for (std::size_t f = 0; f < t.size(); ++f)
    if (!is_zero(t.entries()[f]))
      s.entries.emplace_back(static_cast<std::uint64_t>(f), t.entries()[f]);
  return s;
}

std::vector<int> SparseTensor::unflat(std::uint64_t f) const {
  std::vector<int> idx(signature.size());
  for (int s = static_cast<int>(signature.size()) - 1; s >= 0; --s) {
    idx[s] = static_cast<int>(f % static_cast<std::uint64_t>(n));
    f /= static_cast<std::uint64_t>(n);
  }
  return idx;
}

SparseTensor tensor_product(const SparseTensor &a, const SparseTensor &b) {
  if (a.n != b.n)
    throw Error(ErrorCode::DimensionMismatch, "tensor_product: dimension mismatch");
  SparseTensor out;
  out.n = a.n;
  out.signature = a.signature;
  out.signature.insert(out.signature.end(), b.signature.begin(), b.signature.end());
  std::uint64_t shift = 1;
  for (std::size_t s = 0; s < b.signature.size(); ++s)
    shift *= static_cast<std::uint64_t>(a.n);
  out.entries.reserve(a.entries.size() * b.entries.size());
  for (const auto &[fa, xa] : a.entries)
    for (const auto &[fb, xb] : b.entries)
      out.entries.emplace_back(fa * shift + fb, xa * xb);
  return out;
}

} // namespace connmod

namespace connmod {

int stabilizer_dimension(const std::vector<DenseTensor> &tensors, int n) {
  std::size_t total = 0;
  for (const auto &t : tensors) {
    if (t.dimension() != n)
      throw Error(ErrorCode::DimensionMismatch, "stabilizer_dimension: tensor dimension differs from n");
    total += t.size();
  }
  if (total == 0)
    return n * n;
  IntegerRowEchelon ech(total);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      RatMatrix e(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
      e(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = 1;
      SparseRatRow row;
      std::size_t offset = 0;
      for (const auto &t : tensors) {
        auto img = gl_infinitesimal_act(e, t);
        for (std::size_t f = 0; f < img.size(); ++f)
          if (!is_zero(img.entries()[f]))
            row.emplace_back(offset + f, img.entries()[f]);
        offset += t.size();
      }
      ech.add(row);
    }
  return n * n - static_cast<int>(ech.rank());
}

} // namespace connmod
