// Copyright 2026 The cwdw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cwdw/expsum.hpp"

#include <algorithm>

#include "cwdw/errors.hpp"
#include "cwdw/number_theory.hpp"

namespace cwdw {

namespace {

// x^d for d > 0 given d mod (q - 1).
FieldElement power(const GaloisField& field, FieldElement x, std::uint64_t d_mod) {
  if (x.packed == 0) return x;
  return field.pow(x, d_mod);
}

// c * k mod m, as a Frobenius exponent.
std::int64_t frob_exp(const CodeSpec& spec, std::int64_t c) {
  const auto m = static_cast<std::int64_t>(spec.m);
  const auto k = static_cast<std::int64_t>(spec.k % spec.m);
  return ((c * k) % m + m) % m;
}

struct Term {
  FieldElement coeff;
  std::int64_t frob;  // x -> coeff * x^{p^frob}
};

LinearizedMap matrix_of(const std::vector<Term>& terms, const GaloisField& field) {
  LinearizedMap map;
  map.p = field.p();
  map.m = field.m();
  map.entries.assign(std::size_t{map.m} * map.m, 0);
  std::vector<std::uint32_t> unit(map.m, 0);
  for (unsigned j = 0; j < map.m; ++j) {
    std::fill(unit.begin(), unit.end(), 0);
    unit[j] = 1;
    const FieldElement basis = field.from_coeffs(unit);
    FieldElement image = field.zero();
    for (const auto& t : terms) {
      image = field.add(image, field.mul(t.coeff, field.frobenius(basis, t.frob)));
    }
    const auto col = field.coeffs(image);
    for (unsigned r = 0; r < map.m; ++r) map.entries[r * map.m + j] = col[r];
  }
  return map;
}

unsigned rank_in_place(std::uint32_t* a, unsigned rows, unsigned cols, std::uint32_t p) {
  unsigned rank = 0;
  for (unsigned c = 0; c < cols && rank < rows; ++c) {
    unsigned pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (unsigned j = 0; j < cols; ++j) std::swap(a[pivot * cols + j], a[rank * cols + j]);
    }
    const std::uint32_t inv = fp::inv(a[rank * cols + c], p);
    for (unsigned r = rank + 1; r < rows; ++r) {
      const std::uint32_t v = a[r * cols + c];
      if (v == 0) continue;
      const std::uint32_t factor = fp::mul(v, inv, p);
      for (unsigned j = c; j < cols; ++j) {
        a[r * cols + j] = fp::sub(a[r * cols + j], fp::mul(factor, a[rank * cols + j], p), p);
      }
    }
    ++rank;
  }
  return rank;
}

// Rank of an m x m byte matrix over F_p, p < 256; destroys the input.
unsigned rank_bytes(std::uint8_t* a, unsigned m, std::uint32_t p, const std::uint8_t* inverse) {
  unsigned rank = 0;
  for (unsigned c = 0; c < m && rank < m; ++c) {
    unsigned pivot = rank;
    while (pivot < m && a[pivot * m + c] == 0) ++pivot;
    if (pivot == m) continue;
    if (pivot != rank) {
      for (unsigned j = c; j < m; ++j) std::swap(a[pivot * m + j], a[rank * m + j]);
    }
    const std::uint32_t inv = inverse[a[rank * m + c]];
    for (unsigned r = rank + 1; r < m; ++r) {
      const std::uint32_t v = a[r * m + c];
      if (v == 0) continue;
      const std::uint32_t factor = p - (v * inv) % p;  // -v / pivot
      for (unsigned j = c; j < m; ++j) {
        a[r * m + j] = static_cast<std::uint8_t>((a[r * m + j] + factor * a[rank * m + j]) % p);
      }
    }
    ++rank;
  }
  return rank;
}

// Number of positions where a and b agree. len is a multiple of 32.
std::uint32_t count_equal(const std::uint8_t* a, const std::uint8_t* b, std::size_t len) {
  std::uint32_t total = 0;
  std::size_t i = 0;
  while (i < len) {
    std::uint8_t acc[32] = {};
    const std::size_t stop = std::min(len, i + std::size_t{32} * 255);
    for (; i < stop; i += 32) {
      for (int j = 0; j < 32; ++j) acc[j] += a[i + j] == b[i + j];
    }
    for (int j = 0; j < 32; ++j) total += acc[j];
  }
  return total;
}

// Trace lookups for the projective representatives pi^i, i < R = (q-1)/(p-1):
// f(pi^i) = Tr(pi^{l0 + i}) + Tr(pi^{l1 + i d1}) + Tr(pi^{l2 + i d2}).
struct ProjectiveEvaluator {
  std::uint64_t order = 0;
  std::uint64_t reps = 0;
  std::uint32_t p = 0;
  std::vector<std::uint32_t> trace2;  // Tr(pi^j) for j < 2(q-1)
  std::vector<std::uint32_t> zeros;
  std::vector<std::uint64_t> exp0, exp1, exp2;

  ProjectiveEvaluator(const CodeSpec& spec, const GaloisField& field)
      : order(field.order()), reps(field.order() / (field.p() - 1)), p(field.p()) {
    auto t = field.trace_by_exponent();
    trace2.resize(2 * order);
    std::copy(t.begin(), t.end(), trace2.begin());
    std::copy(t.begin(), t.end(), trace2.begin() + static_cast<std::ptrdiff_t>(order));
    zeros.assign(order, 0);
    exp0.resize(reps);
    exp1.resize(reps);
    exp2.resize(reps);
    for (std::uint64_t i = 0; i < reps; ++i) {
      exp0[i] = i;
      exp1[i] = mulmod_u64(i, spec.d1_mod, order);
      exp2[i] = mulmod_u64(i, spec.d2_mod, order);
    }
  }

  const std::uint32_t* base(const GaloisField& field, FieldElement d) const {
    return d.packed == 0 ? zeros.data() : trace2.data() + field.log(d);
  }

  std::uint64_t zero_count(const DeltaTriple& delta, const GaloisField& field) const {
    const std::uint32_t* t0 = base(field, delta.delta0);
    const std::uint32_t* t1 = base(field, delta.delta1);
    const std::uint32_t* t2 = base(field, delta.delta2);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < reps; ++i) {
      const std::uint32_t v = t0[exp0[i]] + t1[exp1[i]] + t2[exp2[i]];
      hits += v == 0 || v == p || v == 2 * p;
    }
    return 1 + (p - 1) * hits;
  }
};

}  // namespace

std::uint32_t f_delta(const DeltaTriple& delta, FieldElement x, const CodeSpec& spec,
                      const GaloisField& field) {
  if (x.packed == 0) return 0;
  FieldElement v = field.mul(delta.delta0, x);
  v = field.add(v, field.mul(delta.delta1, power(field, x, spec.d1_mod)));
  v = field.add(v, field.mul(delta.delta2, power(field, x, spec.d2_mod)));
  return field.trace(v);
}

std::vector<std::uint32_t> LinearizedMap::apply(std::span<const std::uint32_t> coords) const {
  std::vector<std::uint32_t> out(m, 0);
  for (unsigned r = 0; r < m; ++r) {
    std::uint64_t acc = 0;
    for (unsigned c = 0; c < m; ++c) acc += std::uint64_t{at(r, c)} * coords[c] % p;
    out[r] = static_cast<std::uint32_t>(acc % p);
  }
  return out;
}

LinearizedMap build_linearized(const DeltaTriple& delta, const CodeSpec& spec,
                               const GaloisField& field) {
  const std::int64_t f2 = frob_exp(spec, 2), f4 = frob_exp(spec, 4);
  const std::int64_t f6 = frob_exp(spec, 6), f8 = frob_exp(spec, 8);
  const FieldElement two = field.from_int(2);
  std::vector<Term> terms{
      {field.frobenius(delta.delta2, f4), f8},
      {field.frobenius(delta.delta1, f4), f6},
      {field.frobenius(delta.delta1, f2), f2},
      {field.mul(two, field.frobenius(delta.delta0, f4)), f4},
      {delta.delta2, 0},
  };
  return matrix_of(terms, field);
}

LinearizedMap radical_map(const DeltaTriple& delta, const CodeSpec& spec,
                          const GaloisField& field) {
  const std::int64_t f2 = frob_exp(spec, 2), f4 = frob_exp(spec, 4);
  const FieldElement two = field.from_int(2);
  std::vector<Term> terms{
      {field.mul(two, delta.delta0), 0},
      {delta.delta1, f2},
      {field.frobenius(delta.delta1, -f2), -f2},
      {delta.delta2, f4},
      {field.frobenius(delta.delta2, -f4), -f4},
  };
  return matrix_of(terms, field);
}

unsigned matrix_rank(const LinearizedMap& map) {
  std::vector<std::uint32_t> a(map.entries);
  return rank_in_place(a.data(), map.m, map.m, map.p);
}

FormRank rank_of_form(const DeltaTriple& delta, const CodeSpec& spec, const GaloisField& field) {
  if (delta.is_zero()) return {0, true};
  return {matrix_rank(build_linearized(delta, spec, field)), false};
}

std::int64_t s_from_zero_count(std::uint64_t n0, std::uint32_t p, std::uint64_t q) {
  const auto numerator = static_cast<std::int64_t>(p) * static_cast<std::int64_t>(n0) -
                         static_cast<std::int64_t>(q);
  if (numerator % static_cast<std::int64_t>(p - 1) != 0) {
    throw InvariantViolation("p*n0 - q is not divisible by p - 1");
  }
  return numerator / static_cast<std::int64_t>(p - 1);
}

SValueReport s_exact(const DeltaTriple& delta, const CodeSpec& spec, const GaloisField& field) {
  SValueReport report;
  report.delta = delta;
  for (std::uint64_t i = 0; i < field.q(); ++i) {
    report.n0 += f_delta(delta, field.from_index(i), spec, field) == 0;
  }
  report.s = s_from_zero_count(report.n0, field.p(), field.q());
  report.rank = rank_of_form(delta, spec, field).rank;
  return report;
}

std::uint64_t zero_count_projective(const DeltaTriple& delta, const CodeSpec& spec,
                                    const GaloisField& field) {
  return ProjectiveEvaluator(spec, field).zero_count(delta, field);
}

BigInt ValueDistribution::total() const {
  BigInt t = 0;
  for (const auto& [s, f] : frequencies) t += f;
  return t;
}

namespace {

struct Histograms {
  std::vector<std::uint64_t> by_zero_count;  // index n0
  std::vector<std::uint64_t> joint;          // index rank * (q + 1) + n0
};

// Byte tables for the exhaustive run. Rows are indexed by the packed value
// of one delta coordinate, columns by projective representative.
class ExhaustiveKernel {
 public:
  ExhaustiveKernel(const CodeSpec& spec, const GaloisField& field, bool with_ranks)
      : p_(field.p()), m_(field.m()), q_(field.q()) {
    const std::uint64_t order = field.order();
    reps_ = order / (p_ - 1);
    stride_ = (reps_ + 31) / 32 * 32;
    const auto trace = field.trace_by_exponent();
    std::vector<std::uint64_t> e1(reps_), e2(reps_);
    for (std::uint64_t i = 0; i < reps_; ++i) {
      e1[i] = mulmod_u64(i, spec.d1_mod, order);
      e2[i] = mulmod_u64(i, spec.d2_mod, order);
    }
    t0_.assign(q_ * stride_, 0);
    t1_.assign(q_ * stride_, 0);
    t2_.assign(q_ * stride_, 0xFE);
    for (std::uint64_t v = 0; v < q_; ++v) {
      std::uint8_t* r0 = &t0_[v * stride_];
      std::uint8_t* r1 = &t1_[v * stride_];
      std::uint8_t* r2 = &t2_[v * stride_];
      const std::uint64_t l = v == 0 ? 0 : field.log(field.from_index(v));
      for (std::uint64_t i = 0; i < reps_; ++i) {
        if (v == 0) {
          r2[i] = 0;
          continue;
        }
        r0[i] = static_cast<std::uint8_t>(trace[(l + i) % order]);
        r1[i] = static_cast<std::uint8_t>(trace[(l + e1[i]) % order]);
        r2[i] = static_cast<std::uint8_t>(trace[(l + e2[i]) % order]);
      }
    }
    neg_sum_.resize(2 * p_);
    for (std::uint32_t s = 0; s < 2 * p_; ++s) neg_sum_[s] = static_cast<std::uint8_t>((2 * p_ - s) % p_);

    if (with_ranks) {
      const std::size_t mm = std::size_t{m_} * m_;
      a0_.resize(q_ * mm);
      a1_.resize(q_ * mm);
      a2_.resize(q_ * mm);
      for (std::uint64_t v = 0; v < q_; ++v) {
        const FieldElement d = field.from_index(v);
        const auto m0 = build_linearized({d, field.zero(), field.zero()}, spec, field);
        const auto m1 = build_linearized({field.zero(), d, field.zero()}, spec, field);
        const auto m2 = build_linearized({field.zero(), field.zero(), d}, spec, field);
        for (std::size_t t = 0; t < mm; ++t) {
          a0_[v * mm + t] = static_cast<std::uint8_t>(m0.entries[t]);
          a1_[v * mm + t] = static_cast<std::uint8_t>(m1.entries[t]);
          a2_[v * mm + t] = static_cast<std::uint8_t>(m2.entries[t]);
        }
      }
      inverse_.assign(p_, 0);
      for (std::uint32_t a = 1; a < p_; ++a) inverse_[a] = static_cast<std::uint8_t>(fp::inv(a, p_));
    }
  }

  // Processes every delta with delta0 in [begin, end).
  void run(std::uint64_t begin, std::uint64_t end, SumStrategy strategy, bool with_ranks,
           Histograms& out) const {
    std::vector<std::uint8_t> target(stride_, 0xFF);
    const std::size_t mm = std::size_t{m_} * m_;
    std::vector<std::uint8_t> partial(mm), work(mm);
    const std::uint64_t odd_rank_zeros = q_ / p_;  // s = 0
    for (std::uint64_t d0 = begin; d0 < end; ++d0) {
      const std::uint8_t* r0 = &t0_[d0 * stride_];
      for (std::uint64_t d1 = 0; d1 < q_; ++d1) {
        const std::uint8_t* r1 = &t1_[d1 * stride_];
        for (std::uint64_t i = 0; i < reps_; ++i) target[i] = neg_sum_[r0[i] + r1[i]];
        if (with_ranks) {
          for (std::size_t t = 0; t < mm; ++t) {
            partial[t] = static_cast<std::uint8_t>((a0_[d0 * mm + t] + a1_[d1 * mm + t]) % p_);
          }
        }
        for (std::uint64_t d2 = 0; d2 < q_; ++d2) {
          unsigned rank = 0;
          if (with_ranks) {
            const std::uint8_t* a2 = &a2_[d2 * mm];
            for (std::size_t t = 0; t < mm; ++t) {
              work[t] = static_cast<std::uint8_t>((partial[t] + a2[t]) % p_);
            }
            rank = rank_bytes(work.data(), m_, p_, inverse_.data());
          }
          std::uint64_t n0;
          if (strategy == SumStrategy::RankFirst && rank % 2 == 1) {
            n0 = odd_rank_zeros;
          } else {
            n0 = 1 + std::uint64_t{p_ - 1} * count_equal(&t2_[d2 * stride_], target.data(), stride_);
          }
          ++out.by_zero_count[n0];
          if (with_ranks) ++out.joint[rank * (q_ + 1) + n0];
        }
      }
    }
  }

 private:
  std::uint32_t p_;
  unsigned m_;
  std::uint64_t q_;
  std::uint64_t reps_ = 0;
  std::uint64_t stride_ = 0;
  std::vector<std::uint8_t> t0_, t1_, t2_;
  std::vector<std::uint8_t> neg_sum_;
  std::vector<std::uint8_t> a0_, a1_, a2_;
  std::vector<std::uint8_t> inverse_;
};

}  // namespace

ValueDistribution value_distribution_full(const CodeSpec& spec, const GaloisField& field,
                                          const RunOptions& options,
                                          const FullEnumerationOptions& full) {
  const BigInt work = BigInt(field.q()) * field.q() * field.q();
  require_budget(work, options.budget, "exhaustive enumeration over q^3 triples");
  if (!field.has_tables()) throw ParameterError("exhaustive enumeration requires table mode");
  if (field.p() > 255) throw ParameterError("exhaustive enumeration requires p < 256");

  const bool with_ranks = full.with_ranks || full.strategy == SumStrategy::RankFirst;
  const ExhaustiveKernel kernel(spec, field, with_ranks);
  const std::uint64_t q = field.q();
  Histograms init;
  init.by_zero_count.assign(q + 1, 0);
  if (with_ranks) init.joint.assign((field.m() + 1) * (q + 1), 0);
  const Histograms merged = parallel_reduce(
      q, resolve_jobs(options.jobs), init,
      [&](std::uint64_t begin, std::uint64_t end, Histograms& acc) {
        kernel.run(begin, end, full.strategy, with_ranks, acc);
      },
      [](Histograms& into, const Histograms& from) {
        add_counts(into.by_zero_count, from.by_zero_count);
        add_counts(into.joint, from.joint);
      });

  ValueDistribution out;
  out.spec = spec;
  out.method = "full";
  for (std::uint64_t n0 = 0; n0 <= q; ++n0) {
    if (merged.by_zero_count[n0] == 0) continue;
    out.frequencies[s_from_zero_count(n0, field.p(), q)] += merged.by_zero_count[n0];
  }
  if (with_ranks) {
    for (unsigned r = 0; r <= field.m(); ++r) {
      for (std::uint64_t n0 = 0; n0 <= q; ++n0) {
        const std::uint64_t c = merged.joint[r * (q + 1) + n0];
        if (c != 0) out.rank_profile[{r, s_from_zero_count(n0, field.p(), q)}] += c;
      }
    }
  }
  return out;
}

ValueDistribution value_distribution_sampled(const CodeSpec& spec, const GaloisField& field,
                                             const SamplingOptions& sampling,
                                             const RunOptions& options) {
  if (sampling.samples == 0) throw ParameterError("sample size must be positive");
  std::mt19937_64 rng(sampling.seed);
  std::vector<DeltaTriple> deltas(sampling.samples);
  for (auto& d : deltas) d = random_delta(rng, field);

  std::optional<ProjectiveEvaluator> evaluator;
  if (field.has_tables()) evaluator.emplace(spec, field);
  std::vector<std::int64_t> values(deltas.size());
  parallel_reduce(
      deltas.size(), resolve_jobs(options.jobs), 0,
      [&](std::uint64_t begin, std::uint64_t end, int&) {
        for (std::uint64_t i = begin; i < end; ++i) {
          values[i] = evaluator ? s_from_zero_count(evaluator->zero_count(deltas[i], field),
                                                    field.p(), field.q())
                                : s_exact(deltas[i], spec, field).s;
        }
      },
      [](int&, const int&) {});

  ValueDistribution out;
  out.spec = spec;
  out.method = "sampled";
  out.seed = sampling.seed;
  out.samples = sampling.samples;
  for (auto s : values) out.frequencies[s] += 1;
  return out;
}

std::array<BigInt, 4> power_moments(const ValueDistribution& dist) {
  std::array<BigInt, 4> out{0, 0, 0, 0};
  for (const auto& [s, freq] : dist.frequencies) {
    BigInt term = freq;
    for (int t = 0; t < 4; ++t) {
      term *= s;
      out[t] += term;
    }
  }
  return out;
}

std::map<std::uint64_t, BigInt> weights_from_values(const ValueDistribution& dist) {
  std::map<std::uint64_t, BigInt> out;
  for (const auto& [s, freq] : dist.frequencies) out[weight_from_s(s, dist.spec)] += freq;
  return out;
}

}  // namespace cwdw
